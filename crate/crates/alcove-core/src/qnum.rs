//! Quantum integers `[n] = sin(pi n / eps) / sin(pi / eps)` evaluated in
//! double precision with tracked error margins, plus a double-double
//! fallback used whenever a comparison lands inside the margin band.
//!
//! Exactness matters at the anchors: the quadrant reduction below maps `n`
//! to a canonical residue `n0` with `0 <= 2 n0 <= eps`, so `[n] = 0` and
//! `[n] = +-1` are returned exactly and `[n] = [eps - n]` is bit-identical
//! by construction.

use crate::HypothesisError;

/// Which evaluation path comparisons should take by default.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PrecisionMode {
    Double,
    Extended,
}

/// Evaluation context: the denominator `eps` of the quantum parameter and
/// the requested precision mode.
#[derive(Copy, Clone, Debug)]
pub struct QContext {
    pub epsilon: i64,
    pub mode: PrecisionMode,
}

impl QContext {
    pub fn new(epsilon: i64, mode: PrecisionMode) -> QContext {
        assert!(epsilon >= 3, "quantum denominator must be at least 3");
        QContext { epsilon, mode }
    }
}

/// A double-precision value with a conservative absolute error margin.
#[derive(Copy, Clone, Debug)]
pub struct QValue {
    pub value: f64,
    pub margin: f64,
}

impl QValue {
    pub fn exact(value: f64) -> QValue {
        QValue { value, margin: 0.0 }
    }

    /// Product with margin propagation, including the rounding of the
    /// product itself.
    pub fn mul(self, other: QValue) -> QValue {
        let value = self.value * other.value;
        let margin = self.value.abs() * other.margin
            + other.value.abs() * self.margin
            + self.margin * other.margin
            + 2.0 * f64::EPSILON * value.abs();
        QValue { value, margin }
    }

    /// Quotient with margin propagation; the denominator must stay away
    /// from zero by more than its own margin.
    pub fn div(self, other: QValue) -> QValue {
        let value = self.value / other.value;
        let margin = (self.margin + value.abs() * other.margin) / other.value.abs()
            + 2.0 * f64::EPSILON * value.abs();
        QValue { value, margin }
    }

    pub fn add(self, other: QValue) -> QValue {
        QValue {
            value: self.value + other.value,
            margin: self.margin + other.margin + f64::EPSILON * (self.value + other.value).abs(),
        }
    }
}

/// Reduce `n` to `(sign, n0)` with `0 <= 2 n0 <= eps` and
/// `[n] = sign * [n0]`.
fn reduce(eps: i64, n: i64) -> (i64, i64) {
    let mut n0 = n.rem_euclid(2 * eps);
    let mut sign = 1;
    if n0 >= eps {
        sign = -1;
        n0 -= eps;
    }
    if 2 * n0 > eps {
        n0 = eps - n0;
    }
    (sign, n0)
}

/// The quantum integer `[n]` at the context's denominator, in double
/// precision with a margin. `[0]` and `[+-1]`-type anchors are exact.
pub fn qint(ctx: &QContext, n: i64) -> QValue {
    let eps = ctx.epsilon;
    let (sign, n0) = reduce(eps, n);
    if n0 == 0 {
        return QValue::exact(0.0);
    }
    if n0 == 1 {
        return QValue::exact(sign as f64);
    }
    let pi = std::f64::consts::PI;
    let e = eps as f64;
    let value = sign as f64 * (pi * n0 as f64 / e).sin() / (pi / e).sin();
    QValue { value, margin: 5e-15 * value.abs() }
}

/// An unevaluated double-double number: the sum `hi + lo` with
/// `|lo| <= ulp(hi) / 2`, giving roughly 32 significant decimal digits.
#[derive(Copy, Clone, Debug)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    // pi to double-double precision: hi is pi rounded to f64, lo the residue.
    pub const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) { self.neg() } else { self }
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(s, e + self.lo + o.lo);
        Dd { hi, lo }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi);
        Dd { hi, lo }
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r1 = self.sub(o.mul(Dd::from_f64(q1)));
        let q2 = (r1.hi + r1.lo) / o.hi;
        let r2 = r1.sub(o.mul(Dd::from_f64(q2)));
        let q3 = (r2.hi + r2.lo) / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from_f64(q3))
    }
}

/// sin(x) by Taylor series in double-double arithmetic; needs `|x|` well
/// inside the convergence-friendly range (here always below pi/3).
fn taylor_sin(x: Dd) -> Dd {
    let xx = x.mul(x);
    let mut term = x;
    let mut sum = x;
    let mut j = 1i64;
    loop {
        term = term.mul(xx).div(Dd::from_f64((2 * j * (2 * j + 1)) as f64)).neg();
        sum = sum.add(term);
        if term.hi.abs() <= 1e-40 * sum.hi.abs() || j > 60 {
            return sum;
        }
        j += 1;
    }
}

/// cos(x) by Taylor series in double-double arithmetic, for `|x| < pi/4`.
fn taylor_cos(x: Dd) -> Dd {
    let xx = x.mul(x);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut j = 1i64;
    loop {
        term = term.mul(xx).div(Dd::from_f64(((2 * j - 1) * 2 * j) as f64)).neg();
        sum = sum.add(term);
        if term.hi.abs() <= 1e-40 * sum.hi.abs() || j > 60 {
            return sum;
        }
        j += 1;
    }
}

/// sin(pi * num / den) in double-double precision for `0 <= 2 num <= den`,
/// choosing the sine or cosine series so the argument stays small.
fn sin_pi_ratio(num: i64, den: i64) -> Dd {
    if 4 * num <= den {
        let x = Dd::PI.mul(Dd::from_f64(num as f64)).div(Dd::from_f64(den as f64));
        taylor_sin(x)
    } else {
        // sin(pi num / den) = cos(pi (den - 2 num) / (2 den)) with a small
        // argument, computed fresh from the integers to avoid cancellation.
        let x = Dd::PI
            .mul(Dd::from_f64((den - 2 * num) as f64))
            .div(Dd::from_f64((2 * den) as f64));
        taylor_cos(x)
    }
}

/// The quantum integer `[n]` in double-double precision. Anchors are exact
/// and the symmetry `[n] = [eps - n]` is bit-identical because both sides
/// reduce to the same canonical residue.
pub fn qint_dd(eps: i64, n: i64) -> Dd {
    let (sign, n0) = reduce(eps, n);
    if n0 == 0 {
        return Dd::ZERO;
    }
    let v = if n0 == 1 {
        Dd::ONE
    } else {
        sin_pi_ratio(n0, eps).div(sin_pi_ratio(1, eps))
    };
    if sign < 0 { v.neg() } else { v }
}

/// Relative comparison band for double-double comparisons.
fn dd_band(scale: f64) -> f64 {
    1e-28 * scale.abs().max(1.0)
}

/// Check the subadditivity bound `[n + m] <= [n] + m` for `n, m >= 1`.
/// Ambiguous double-precision comparisons escalate to double-double.
pub fn check_quantum_triangle(ctx: &QContext, n: i64, m: i64) -> bool {
    debug_assert!(n >= 1 && m >= 1);
    if ctx.mode == PrecisionMode::Double {
        let lhs = qint(ctx, n + m);
        let rhs = qint(ctx, n);
        let diff = lhs.value - (rhs.value + m as f64);
        let tol = lhs.margin + rhs.margin + f64::EPSILON * (m as f64);
        if diff < -tol {
            return true;
        }
        if diff > tol {
            return false;
        }
    }
    let lhs = qint_dd(ctx.epsilon, n + m);
    let rhs = qint_dd(ctx.epsilon, n).add(Dd::from_f64(m as f64));
    lhs.sub(rhs).to_f64() <= dd_band(rhs.to_f64())
}

/// Check the lower bound `[n] >= n / 2`, valid for `1 <= n <= eps / 2`;
/// parameters outside that window are a hypothesis error.
pub fn check_lower_bound(ctx: &QContext, n: i64) -> Result<bool, HypothesisError> {
    if n < 1 || 2 * n > ctx.epsilon {
        return Err(HypothesisError::new(format!(
            "lower bound needs 1 <= n <= eps/2, got n = {n} at eps = {}",
            ctx.epsilon
        )));
    }
    if ctx.mode == PrecisionMode::Double {
        let v = qint(ctx, n);
        let bound = n as f64 / 2.0;
        if v.value - v.margin >= bound {
            return Ok(true);
        }
        if v.value + v.margin < bound {
            return Ok(false);
        }
    }
    let v = qint_dd(ctx.epsilon, n);
    Ok(v.to_f64() >= n as f64 / 2.0 - dd_band(n as f64))
}
