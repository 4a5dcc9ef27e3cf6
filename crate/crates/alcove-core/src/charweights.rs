//! Weight multiplicities of irreducible highest-weight representations,
//! computed once per highest weight by Freudenthal recursion over the
//! dominant weights and cached process-wide.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use crate::lie_core::{
    inner6, root_lattice_coords, to_dominant, weyl_orbit, AlgebraId, Weight,
};

/// Dominant part of a weight diagram: multiplicities indexed by the
/// dominant weights only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantChar {
    pub highest: Weight,
    pub mult: BTreeMap<Weight, i64>,
}

/// Dimension of the irreducible representation with highest weight `lam`,
/// by the Weyl dimension formula.
pub fn weyl_dim(alg: AlgebraId, lam: Weight) -> i128 {
    let [s, t] = lam.coords();
    let (s, t) = (s as i128, t as i128);
    match alg {
        AlgebraId::A1 => s + 1,
        AlgebraId::A2 => (s + 1) * (t + 1) * (s + t + 2) / 2,
        AlgebraId::B2 => (s + 1) * (t + 1) * (s + t + 2) * (2 * s + t + 3) / 6,
        AlgebraId::G2 => {
            (s + 1) * (t + 1) * (s + t + 2) * (s + 2 * t + 3) * (s + 3 * t + 4)
                * (2 * s + 3 * t + 5)
                / 120
        }
    }
}

fn add2(a: [i64; 2], b: [i64; 2]) -> [i64; 2] {
    [a[0] + b[0], a[1] + b[1]]
}

fn compute_dominant_char(alg: AlgebraId, lam: Weight) -> DominantChar {
    let data = alg.data();
    let lc = lam.coords();
    let rho = data.rho;

    // Dominant candidates lam - a*alpha_1 - b*alpha_2, sorted by height so
    // each multiplicity only depends on already-computed ones.
    let mut candidates: Vec<(i64, [i64; 2])> = Vec::new();
    if data.rank == 1 {
        let mut a = 0;
        while lc[0] - 2 * a >= 0 {
            candidates.push((a, [lc[0] - 2 * a, 0]));
            a += 1;
        }
    } else {
        let hi = 3 * (lc[0].abs() + lc[1].abs()) + 6;
        for a in 0..=hi {
            for b in 0..=hi {
                let mu = [
                    lc[0] - a * data.cartan[0][0] - b * data.cartan[1][0],
                    lc[1] - a * data.cartan[0][1] - b * data.cartan[1][1],
                ];
                if mu[0] >= 0 && mu[1] >= 0 {
                    candidates.push((a + b, mu));
                }
            }
        }
    }
    candidates.sort();

    let lam_rho = add2(lc, rho);
    let nlr6 = inner6(alg, lam_rho, lam_rho);
    let mut mult: BTreeMap<[i64; 2], i64> = BTreeMap::new();
    for &(_, mu) in &candidates {
        if mu == lc {
            mult.insert(mu, 1);
            continue;
        }
        let mu_rho = add2(mu, rho);
        let denom6 = nlr6 - inner6(alg, mu_rho, mu_rho);
        if denom6 == 0 {
            continue;
        }
        let mut acc: i128 = 0;
        for alpha in data.positive_roots {
            let mut j = 1;
            loop {
                let nu = [mu[0] + j * alpha[0], mu[1] + j * alpha[1]];
                let (nud, _) = to_dominant(alg, nu);
                let delta = [lc[0] - nud[0], lc[1] - nud[1]];
                if root_lattice_coords(alg, delta).is_none() {
                    break;
                }
                let m = mult.get(&nud).copied().unwrap_or(0);
                acc += m as i128 * inner6(alg, nu, *alpha) as i128;
                j += 1;
            }
        }
        let num = 2 * acc;
        assert!(num % denom6 as i128 == 0, "Freudenthal recursion must be integral");
        let m = (num / denom6 as i128) as i64;
        if m > 0 {
            mult.insert(mu, m);
        }
    }

    // Cross-check against the Weyl dimension formula.
    let mut total: i128 = 0;
    for (&mu, &m) in &mult {
        total += m as i128 * weyl_orbit(alg, mu).len() as i128;
    }
    assert_eq!(total, weyl_dim(alg, lam), "weight multiplicities must sum to the dimension");

    DominantChar {
        highest: lam,
        mult: mult.into_iter().map(|(mu, m)| (Weight::new(mu[0], mu[1]), m)).collect(),
    }
}

static CHAR_CACHE: LazyLock<Mutex<HashMap<(AlgebraId, Weight), Arc<DominantChar>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The dominant weight multiplicities of the irreducible with highest
/// weight `lam`, cached per `(algebra, weight)`.
pub fn dominant_character(alg: AlgebraId, lam: Weight) -> Arc<DominantChar> {
    if let Some(hit) = CHAR_CACHE.lock().unwrap().get(&(alg, lam)) {
        return Arc::clone(hit);
    }
    let fresh = Arc::new(compute_dominant_char(alg, lam));
    let mut cache = CHAR_CACHE.lock().unwrap();
    Arc::clone(cache.entry((alg, lam)).or_insert(fresh))
}

/// Multiplicity of the (not necessarily dominant) weight `v` in the
/// irreducible with highest weight `lam`.
pub fn mult_at(alg: AlgebraId, lam: Weight, v: [i64; 2]) -> i64 {
    let (dom, _) = to_dominant(alg, v);
    dominant_character(alg, lam)
        .mult
        .get(&Weight::new(dom[0], dom[1]))
        .copied()
        .unwrap_or(0)
}

/// A full weight diagram translated by `shift`: every weight of the
/// representation (not just the dominant ones) with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiagram {
    pub center: [i64; 2],
    pub support: BTreeMap<[i64; 2], i64>,
}

static DIAGRAM_CACHE: LazyLock<Mutex<HashMap<(AlgebraId, Weight), Arc<Vec<([i64; 2], i64)>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Orbit-expanded weight diagram of `lam` as a flat list, cached.
pub(crate) fn full_diagram(alg: AlgebraId, lam: Weight) -> Arc<Vec<([i64; 2], i64)>> {
    if let Some(hit) = DIAGRAM_CACHE.lock().unwrap().get(&(alg, lam)) {
        return Arc::clone(hit);
    }
    let dom = dominant_character(alg, lam);
    let mut flat = Vec::new();
    for (&mu, &m) in &dom.mult {
        for v in weyl_orbit(alg, mu.coords()) {
            flat.push((v, m));
        }
    }
    flat.sort();
    let fresh = Arc::new(flat);
    let mut cache = DIAGRAM_CACHE.lock().unwrap();
    Arc::clone(cache.entry((alg, lam)).or_insert(fresh))
}

/// The weight diagram of `lam` translated by `shift`.
pub fn weight_diagram(alg: AlgebraId, lam: Weight, shift: [i64; 2]) -> WeightDiagram {
    let flat = full_diagram(alg, lam);
    let support = flat.iter().map(|&(v, m)| (add2(v, shift), m)).collect();
    WeightDiagram { center: shift, support }
}
