//! Fusion products at level `k` by the folding algorithm: expand the full
//! weight diagram of one factor, translate by the other, and fold every
//! point back into the alcove under the affine Weyl group at height
//! `k + h_dual`, accumulating signs.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use crate::charweights::{full_diagram, mult_at, weyl_dim};
use crate::lie_core::{
    in_alcove, simple_reflection, theta_coroot_pairing, AlgebraId, Weight,
};

/// The affine Weyl group data needed for folding at one level.
#[derive(Copy, Clone, Debug)]
pub struct AffineReflectionGroup {
    algebra: AlgebraId,
    n: i64,
}

impl AffineReflectionGroup {
    pub fn new(alg: AlgebraId, level: i64) -> AffineReflectionGroup {
        AffineReflectionGroup { algebra: alg, n: level + alg.data().dual_coxeter }
    }
}

/// Result of folding a weight into the alcove: either an interior point
/// with the sign of the folding element, or a wall fixed point that
/// contributes nothing.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FoldResult {
    Interior { weight: Weight, sign: i64 },
    OnWall,
}

/// Fold rho-shifted coordinates `z` into the interior of the fundamental
/// alcove at height `g.n`, returning the unshifted interior weight.
fn fold_shifted(g: &AffineReflectionGroup, mut z: [i64; 2]) -> FoldResult {
    let alg = g.algebra;
    let data = alg.data();
    let mut sign = 1;
    for _ in 0..10 * g.n {
        let mut reflected = false;
        for i in 0..data.rank {
            if z[i] == 0 {
                return FoldResult::OnWall;
            }
            if z[i] < 0 {
                z = simple_reflection(alg, z, i);
                sign = -sign;
                reflected = true;
                break;
            }
        }
        if reflected {
            continue;
        }
        let t = theta_coroot_pairing(alg, z);
        if t == g.n {
            return FoldResult::OnWall;
        }
        if t > g.n {
            let excess = t - g.n;
            z = [z[0] - excess * data.theta[0], z[1] - excess * data.theta[1]];
            sign = -sign;
            continue;
        }
        return FoldResult::Interior {
            weight: Weight::new(z[0] - data.rho[0], z[1] - data.rho[1]),
            sign,
        };
    }
    panic!("affine folding did not converge at height {}", g.n);
}

/// Fold the (unshifted) weight `nu` into the alcove.
pub fn fold_to_alcove(g: &AffineReflectionGroup, nu: [i64; 2]) -> FoldResult {
    let rho = g.algebra.data().rho;
    fold_shifted(g, [nu[0] + rho[0], nu[1] + rho[1]])
}

/// A nonnegative integer combination of alcove weights: one fusion product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionVector {
    pub algebra: AlgebraId,
    pub level: i64,
    entries: BTreeMap<Weight, i64>,
}

impl std::ops::Deref for FusionVector {
    type Target = BTreeMap<Weight, i64>;

    fn deref(&self) -> &BTreeMap<Weight, i64> {
        &self.entries
    }
}

impl PartialEq<BTreeMap<Weight, i64>> for FusionVector {
    fn eq(&self, other: &BTreeMap<Weight, i64>) -> bool {
        &self.entries == other
    }
}

fn compute_product(
    alg: AlgebraId,
    level: i64,
    expand: Weight,
    translate: Weight,
) -> FusionVector {
    let g = AffineReflectionGroup::new(alg, level);
    let rho = alg.data().rho;
    let tc = translate.coords();
    let base = [tc[0] + rho[0], tc[1] + rho[1]];
    let mut entries: BTreeMap<Weight, i64> = BTreeMap::new();
    for &(nu, m) in full_diagram(alg, expand).iter() {
        match fold_shifted(&g, [base[0] + nu[0], base[1] + nu[1]]) {
            FoldResult::OnWall => {}
            FoldResult::Interior { weight, sign } => {
                let e = entries.entry(weight).or_insert(0);
                *e += sign * m;
                if *e == 0 {
                    entries.remove(&weight);
                }
            }
        }
    }
    assert!(
        entries.values().all(|&m| m > 0),
        "fusion coefficients must be nonnegative"
    );
    FusionVector { algebra: alg, level, entries }
}

static PRODUCT_CACHE: LazyLock<
    Mutex<HashMap<(AlgebraId, i64, Weight, Weight), Arc<FusionVector>>>,
> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// The fusion product of the alcove weights `a` and `b` at level `k`,
/// cached per unordered pair; the factor with the smaller classical
/// dimension is the one whose diagram gets expanded.
pub fn tensor_product(alg: AlgebraId, level: i64, a: Weight, b: Weight) -> FusionVector {
    let key = if a <= b { (alg, level, a, b) } else { (alg, level, b, a) };
    if let Some(hit) = PRODUCT_CACHE.lock().unwrap().get(&key) {
        return FusionVector::clone(hit);
    }
    let (expand, translate) =
        if weyl_dim(alg, a) <= weyl_dim(alg, b) { (a, b) } else { (b, a) };
    let fresh = Arc::new(compute_product(alg, level, expand, translate));
    let mut cache = PRODUCT_CACHE.lock().unwrap();
    FusionVector::clone(cache.entry(key).or_insert(fresh))
}

/// Uncached fusion product that always expands the diagram of the first
/// factor; used to cross-check commutativity of the folding algorithm.
pub fn tensor_product_expanding_first(
    alg: AlgebraId,
    level: i64,
    a: Weight,
    b: Weight,
) -> FusionVector {
    compute_product(alg, level, a, b)
}

/// A single fusion coefficient.
pub fn fusion_coeff(alg: AlgebraId, level: i64, lam: Weight, gam: Weight, mu: Weight) -> i64 {
    tensor_product(alg, level, lam, gam).get(&mu).copied().unwrap_or(0)
}

/// Closed form for the sl2 fusion coefficients: `c` appears in `a x b` at
/// level `k` exactly when the classical Clebsch-Gordan conditions hold and
/// `a + b + c <= 2k`.
pub fn a1_closed_form(a: i64, b: i64, c: i64, k: i64) -> i64 {
    let lo = (a - b).abs();
    let hi = (a + b).min(2 * k - a - b);
    i64::from(c >= lo && c <= hi && (a + b + c) % 2 == 0)
}

/// Outcome of the cheap positivity certificate.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The fusion coefficient provably equals the classical weight
    /// multiplicity, which is the value reported here.
    Certified { mult: i64 },
    /// The hypotheses of the certificate do not hold; nothing is claimed.
    NotApplicable,
}

/// Precomputed data for certifying coefficients of a fixed product
/// `lam x gam`: the rho-shifted translated diagram
/// `S = { gam + rho + nu : nu in diagram(lam) }`.
pub struct CertificateContext {
    algebra: AlgebraId,
    level: i64,
    lam: Weight,
    gam: Weight,
    shifted: std::collections::BTreeSet<[i64; 2]>,
}

impl CertificateContext {
    pub fn new(alg: AlgebraId, level: i64, lam: Weight, gam: Weight) -> CertificateContext {
        let rho = alg.data().rho;
        let gc = gam.coords();
        let shifted = full_diagram(alg, lam)
            .iter()
            .map(|&(nu, _)| [gc[0] + rho[0] + nu[0], gc[1] + rho[1] + nu[1]])
            .collect();
        CertificateContext { algebra: alg, level, lam, gam, shifted }
    }

    /// Certify the coefficient of `mu` in `lam x gam` if the translated
    /// diagram avoids every single-reflection image of `mu + rho`; the
    /// certified value is then the classical multiplicity of `mu - gam`.
    pub fn check(&self, mu: Weight) -> Certificate {
        let alg = self.algebra;
        let data = alg.data();
        if !in_alcove(alg, self.level, mu) {
            return Certificate::NotApplicable;
        }
        let gc = self.gam.coords();
        let mc = mu.coords();
        let m = mult_at(alg, self.lam, [mc[0] - gc[0], mc[1] - gc[1]]);
        if m == 0 {
            return Certificate::NotApplicable;
        }
        let p = [mc[0] + data.rho[0], mc[1] + data.rho[1]];
        for i in 0..data.rank {
            if self.shifted.contains(&simple_reflection(alg, p, i)) {
                return Certificate::NotApplicable;
            }
        }
        let n = self.level + data.dual_coxeter;
        let excess = theta_coroot_pairing(alg, p) - n;
        let affine = [p[0] - excess * data.theta[0], p[1] - excess * data.theta[1]];
        if self.shifted.contains(&affine) {
            return Certificate::NotApplicable;
        }
        Certificate::Certified { mult: m }
    }
}

/// One-shot form of the positivity certificate.
pub fn lemma_fusion_certificate(
    alg: AlgebraId,
    level: i64,
    lam: Weight,
    gam: Weight,
    mu: Weight,
) -> Certificate {
    CertificateContext::new(alg, level, lam, gam).check(mu)
}
