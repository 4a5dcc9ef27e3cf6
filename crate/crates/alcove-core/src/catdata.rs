//! Categorical invariants of the alcove fusion categories: ribbon twists
//! as exact rationals, quantum dimensions via quantum-integer products,
//! the root-lattice grading, and the order-three simple-current action on
//! the sl3 alcove.

use num_rational::Rational64;

use crate::fusion::tensor_product;
use crate::lie_core::{inner6, root_lattice_coords, AlgebraId, Weight};
use crate::qnum::{qint, qint_dd, Dd, PrecisionMode, QContext, QValue};

/// A ribbon twist exponent, stored as an exact rational normalised into
/// the interval [0, 1).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct TwistArg {
    r: Rational64,
}

impl TwistArg {
    fn new(raw: Rational64) -> TwistArg {
        TwistArg { r: raw - raw.floor() }
    }

    /// The normalised exponent in [0, 1): the twist itself is
    /// `exp(2 pi i value)`.
    pub fn value(self) -> Rational64 {
        self.r
    }
}

/// The twist exponent of the simple object `lam` at level `k`, via the
/// per-algebra closed forms.
pub fn twist_arg(alg: AlgebraId, level: i64, lam: Weight) -> TwistArg {
    let [s, t] = lam.coords();
    let raw = match alg {
        AlgebraId::A1 => Rational64::new(s * (s + 2), 4 * (level + 2)),
        AlgebraId::A2 => {
            Rational64::new(s * s + 3 * s + s * t + 3 * t + t * t, 3 * (level + 3))
        }
        AlgebraId::B2 => {
            Rational64::new(2 * s * s + 2 * s * t + 6 * s + t * t + 4 * t, 4 * (level + 3))
        }
        AlgebraId::G2 => {
            Rational64::new(s * s + 3 * s * t + 5 * s + 3 * t * t + 9 * t, 3 * (level + 4))
        }
    };
    TwistArg::new(raw)
}

/// The same exponent computed from the invariant form,
/// `<lam, lam + 2 rho> / (2 (k + h_dual))` with the form normalised so
/// short roots have squared length two.
pub fn twist_arg_from_form(alg: AlgebraId, level: i64, lam: Weight) -> TwistArg {
    let data = alg.data();
    let c = lam.coords();
    let shifted = [c[0] + 2 * data.rho[0], c[1] + 2 * data.rho[1]];
    let eps = data.q_denominator(level);
    TwistArg::new(Rational64::new(inner6(alg, c, shifted), 12 * eps))
}

/// Whether the twist of `lam` is trivial.
pub fn twist_is_trivial(alg: AlgebraId, level: i64, lam: Weight) -> bool {
    twist_arg(alg, level, lam).value() == Rational64::new(0, 1)
}

/// Whether the twist of `lam` is a third root of unity.
pub fn twist_is_third_root(alg: AlgebraId, level: i64, lam: Weight) -> bool {
    (twist_arg(alg, level, lam).value() * 3).is_integer()
}

/// Whether `lam` lies in the root lattice.
pub fn in_root_lattice(alg: AlgebraId, lam: Weight) -> bool {
    root_lattice_coords(alg, lam.coords()).is_some()
}

/// Quantum-integer arguments of the unnormalised quantum dimension: the
/// product of `[a]` over this list equals `dim_q'(lam)` up to the global
/// normalisation shared by the whole algebra.
fn qdim_factors(alg: AlgebraId, lam: Weight) -> Vec<i64> {
    let [s, t] = lam.coords();
    match alg {
        AlgebraId::A1 => vec![s + 1],
        AlgebraId::A2 => vec![s + 1, t + 1, s + t + 2],
        AlgebraId::B2 => vec![2 * (s + 1), t + 1, 2 * (s + t + 2), 2 * s + t + 3],
        AlgebraId::G2 => vec![
            s + 1,
            3 * (t + 1),
            3 * (s + t + 2),
            3 * (s + 2 * t + 3),
            s + 3 * t + 4,
            2 * s + 3 * t + 5,
        ],
    }
}

/// Unnormalised quantum dimension of `lam` in double precision.
pub fn qdim_numerator(alg: AlgebraId, level: i64, lam: Weight) -> QValue {
    let ctx = QContext::new(alg.data().q_denominator(level), PrecisionMode::Double);
    let mut acc = QValue::exact(1.0);
    for a in qdim_factors(alg, lam) {
        acc = acc.mul(qint(&ctx, a));
    }
    acc
}

/// Unnormalised quantum dimension of `lam` in double-double precision.
pub fn qdim_numerator_ext(alg: AlgebraId, level: i64, lam: Weight) -> Dd {
    let eps = alg.data().q_denominator(level);
    let mut acc = Dd::ONE;
    for a in qdim_factors(alg, lam) {
        acc = acc.mul(qint_dd(eps, a));
    }
    acc
}

/// Normalised quantum dimension `dim_q(lam) = dim_q'(lam) / dim_q'(0)`.
pub fn qdim(alg: AlgebraId, level: i64, lam: Weight) -> QValue {
    qdim_numerator(alg, level, lam).div(qdim_numerator(alg, level, Weight::new(0, 0)))
}

/// The order-three simple current of the sl3 alcove: fusion with the
/// corner weight `(0, k)`, which permutes the alcove freely.
pub fn a2_simple_current_rotate(level: i64, w: Weight) -> Weight {
    let product = tensor_product(AlgebraId::A2, level, Weight::new(0, level), w);
    assert_eq!(product.len(), 1, "simple current fusion must be a single object");
    let (&image, &mult) = product.iter().next().unwrap();
    assert_eq!(mult, 1, "simple current fusion must have coefficient one");
    image
}

/// Canonical representative of the orbit of `w` under the simple-current
/// rotation and duality: the lexicographically smallest orbit member
/// `(l, m)` with `m <= l` and `2 l <= k` when one exists, otherwise the
/// smallest orbit member outright.
pub fn a2_normalize(level: i64, w: Weight) -> Weight {
    let mut orbit = Vec::new();
    for base in [w, crate::lie_core::dual_weight(AlgebraId::A2, level, w)] {
        let mut v = base;
        for _ in 0..3 {
            orbit.push(v);
            v = a2_simple_current_rotate(level, v);
        }
    }
    orbit.sort();
    orbit.dedup();
    let qualifier = |c: &Weight| {
        let [l, m] = c.coords();
        m <= l && 2 * l <= level
    };
    orbit.iter().copied().find(qualifier).unwrap_or(orbit[0])
}
