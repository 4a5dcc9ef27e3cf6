//! Root data and Weyl-group combinatorics for the four algebras of rank
//! at most two, expressed in fundamental-weight coordinates throughout.
//!
//! Rank-one weights are stored with a vanishing second coordinate so that
//! every algebra shares the same `[i64; 2]` coordinate type.

use num_rational::Rational64;

/// The simple Lie algebras handled by this crate.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraId {
    A1,
    A2,
    B2,
    G2,
}

/// Static root data for one algebra.
///
/// `cartan[j]` holds the fundamental-weight coordinates of the simple root
/// `alpha_j` (a column of the Cartan matrix), `form6` is six times the
/// invariant symmetric form normalised so short roots have squared length
/// two, and `theta_dual_coeffs` are the coefficients of the highest root's
/// coroot on the simple coroots.
pub struct LieData {
    pub rank: usize,
    pub cartan: [[i64; 2]; 2],
    pub form6: [[i64; 2]; 2],
    pub positive_roots: &'static [[i64; 2]],
    pub rho: [i64; 2],
    pub theta: [i64; 2],
    pub theta_dual_coeffs: [i64; 2],
    pub dual_coxeter: i64,
    pub eps_factor: i64,
}

impl LieData {
    /// Denominator of the quantum parameter at level `k`: the quantum
    /// integers live at `q = exp(i pi / eps)` with `eps` returned here.
    pub fn q_denominator(&self, level: i64) -> i64 {
        self.eps_factor * (level + self.dual_coxeter)
    }
}

static A1_DATA: LieData = LieData {
    rank: 1,
    cartan: [[2, 0], [0, 0]],
    form6: [[3, 0], [0, 0]],
    positive_roots: &[[2, 0]],
    rho: [1, 0],
    theta: [2, 0],
    theta_dual_coeffs: [1, 0],
    dual_coxeter: 2,
    eps_factor: 1,
};

static A2_DATA: LieData = LieData {
    rank: 2,
    cartan: [[2, -1], [-1, 2]],
    form6: [[4, 2], [2, 4]],
    positive_roots: &[[2, -1], [-1, 2], [1, 1]],
    rho: [1, 1],
    theta: [1, 1],
    theta_dual_coeffs: [1, 1],
    dual_coxeter: 3,
    eps_factor: 1,
};

static B2_DATA: LieData = LieData {
    rank: 2,
    cartan: [[2, -2], [-1, 2]],
    form6: [[12, 6], [6, 6]],
    positive_roots: &[[2, -2], [-1, 2], [1, 0], [0, 2]],
    rho: [1, 1],
    theta: [0, 2],
    theta_dual_coeffs: [1, 1],
    dual_coxeter: 3,
    eps_factor: 2,
};

static G2_DATA: LieData = LieData {
    rank: 2,
    cartan: [[2, -1], [-3, 2]],
    form6: [[12, 18], [18, 36]],
    positive_roots: &[[2, -1], [-3, 2], [-1, 1], [1, 0], [3, -1], [0, 1]],
    rho: [1, 1],
    theta: [0, 1],
    theta_dual_coeffs: [1, 2],
    dual_coxeter: 4,
    eps_factor: 3,
};

impl AlgebraId {
    pub fn all() -> [AlgebraId; 4] {
        [AlgebraId::A1, AlgebraId::A2, AlgebraId::B2, AlgebraId::G2]
    }

    pub fn data(self) -> &'static LieData {
        match self {
            AlgebraId::A1 => &A1_DATA,
            AlgebraId::A2 => &A2_DATA,
            AlgebraId::B2 => &B2_DATA,
            AlgebraId::G2 => &G2_DATA,
        }
    }
}

/// A weight in fundamental-weight coordinates; rank-one weights keep a
/// zero second coordinate. The derived order is lexicographic.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight([i64; 2]);

impl Weight {
    pub fn new(s: i64, t: i64) -> Weight {
        Weight([s, t])
    }

    pub fn coords(self) -> [i64; 2] {
        self.0
    }
}

/// Six times the invariant form, exactly, on integer coordinate vectors.
pub fn inner6(alg: AlgebraId, a: [i64; 2], b: [i64; 2]) -> i64 {
    let f = &alg.data().form6;
    f[0][0] * a[0] * b[0] + f[0][1] * a[0] * b[1] + f[1][0] * a[1] * b[0] + f[1][1] * a[1] * b[1]
}

/// The invariant form itself, on rational coordinate vectors.
pub fn inner(alg: AlgebraId, a: [Rational64; 2], b: [Rational64; 2]) -> Rational64 {
    let f = &alg.data().form6;
    let mut acc = Rational64::new(0, 1);
    for i in 0..2 {
        for j in 0..2 {
            acc += Rational64::new(f[i][j], 6) * a[i] * b[j];
        }
    }
    acc
}

/// Reflection in the wall of the `i`-th simple root.
pub fn simple_reflection(alg: AlgebraId, z: [i64; 2], i: usize) -> [i64; 2] {
    let col = alg.data().cartan[i];
    [z[0] - z[i] * col[0], z[1] - z[i] * col[1]]
}

/// Pairing of a weight with the coroot of the highest root.
pub(crate) fn theta_pairing(alg: AlgebraId, z: [i64; 2]) -> i64 {
    let c = alg.data().theta_dual_coeffs;
    c[0] * z[0] + c[1] * z[1]
}

/// The dominant representative of the Weyl orbit of `z`, together with the
/// determinant of the group element used to reach it.
pub fn to_dominant(alg: AlgebraId, z: [i64; 2]) -> ([i64; 2], i64) {
    let rank = alg.data().rank;
    let mut z = z;
    let mut sign = 1;
    loop {
        let mut moved = false;
        for i in 0..rank {
            if z[i] < 0 {
                z = simple_reflection(alg, z, i);
                sign = -sign;
                moved = true;
            }
        }
        if !moved {
            return (z, sign);
        }
    }
}

/// The full Weyl orbit of `z`, sorted lexicographically.
pub fn weyl_orbit(alg: AlgebraId, z: [i64; 2]) -> Vec<[i64; 2]> {
    let rank = alg.data().rank;
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = vec![z];
    seen.insert(z);
    while let Some(v) = queue.pop() {
        for i in 0..rank {
            let w = simple_reflection(alg, v, i);
            if seen.insert(w) {
                queue.push(w);
            }
        }
    }
    seen.into_iter().collect()
}

/// Whether `w` lies in the level-`k` Weyl alcove (dominant, level bounded).
pub fn in_alcove(alg: AlgebraId, level: i64, w: Weight) -> bool {
    let c = w.coords();
    let rank = alg.data().rank;
    if c[0] < 0 || (rank == 2 && c[1] < 0) || (rank == 1 && c[1] != 0) {
        return false;
    }
    theta_pairing(alg, c) <= level
}

/// The level-`k` alcove of one algebra, with its weights in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alcove {
    pub algebra: AlgebraId,
    pub level: i64,
    pub weights: Vec<Weight>,
}

impl std::ops::Deref for Alcove {
    type Target = [Weight];

    fn deref(&self) -> &[Weight] {
        &self.weights
    }
}

/// Enumerate the level-`k` alcove in lexicographic order.
pub fn enumerate_alcove(alg: AlgebraId, level: i64) -> Alcove {
    let data = alg.data();
    let mut weights = Vec::new();
    if data.rank == 1 {
        for s in 0..=level {
            weights.push(Weight::new(s, 0));
        }
    } else {
        let c = data.theta_dual_coeffs;
        for s in 0..=level {
            if c[0] * s > level {
                break;
            }
            let mut t = 0;
            while c[0] * s + c[1] * t <= level {
                weights.push(Weight::new(s, t));
                t += 1;
            }
        }
    }
    Alcove { algebra: alg, level, weights }
}

/// The highest weight of the dual representation; the level is part of the
/// fusion-category data but only the sl3 case actually permutes weights.
pub fn dual_weight(alg: AlgebraId, _level: i64, w: Weight) -> Weight {
    match alg {
        AlgebraId::A2 => {
            let c = w.coords();
            Weight::new(c[1], c[0])
        }
        _ => w,
    }
}

/// Express `v` as a nonnegative integer combination of the simple roots,
/// if possible. Dominant weights admit an integer solution exactly when
/// they admit a nonnegative one, but this helper enforces both.
pub fn root_lattice_coords(alg: AlgebraId, v: [i64; 2]) -> Option<(i64, i64)> {
    let data = alg.data();
    if data.rank == 1 {
        if v[1] == 0 && v[0] % 2 == 0 && v[0] >= 0 {
            return Some((v[0] / 2, 0));
        }
        return None;
    }
    let c0 = data.cartan[0];
    let c1 = data.cartan[1];
    let det = c0[0] * c1[1] - c1[0] * c0[1];
    let na = v[0] * c1[1] - v[1] * c1[0];
    let nb = c0[0] * v[1] - c0[1] * v[0];
    if na % det != 0 || nb % det != 0 {
        return None;
    }
    let a = na / det;
    let b = nb / det;
    if a >= 0 && b >= 0 {
        Some((a, b))
    } else {
        None
    }
}

pub(crate) use theta_pairing as theta_coroot_pairing;
