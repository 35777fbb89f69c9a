//! Small quantum cohomology of the Grassmannian of `p`-planes in `C^n` and
//! the unitary product problem.
//!
//! Structure constants come from the rim-hook rule: expand `sigma_I sigma_J`
//! classically over all diagrams with at most `p` rows, then strip `n`-rim
//! hooks from each diagram until it fits in the `p x (n - p)` rectangle.
//! Every hook removed contributes one power of `q` and the sign
//! `(-1)^(p - height)`. Diagrams whose reduction gets stuck outside the
//! rectangle contribute nothing.
//!
//! Hook removal is done on the `p`-bead abacus: a diagram `nu` is the bead
//! set `{nu_i + p - i}`, and removing an `n`-rim hook moves one bead from
//! `x` to an empty `x - n`. The hook's leg length is the number of beads
//! strictly between the two positions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{partition_of_subset, subset_of_partition, Partition, SchubertIndex};
use crate::error::{Error, Result};
use crate::horn::{check_tol, SlackTracker, Verdict, Witness};
use crate::lr::{tensor_decompose, Multiplicity};
use crate::spectrum::{check_same_len, subset_sum_unchecked, Spectrum};

/// One term `coeff * q^d * sigma_K` of a quantum product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumTerm {
    pub k: SchubertIndex,
    pub d: usize,
    pub coeff: Multiplicity,
}

impl QuantumTerm {
    /// `product_weight` is `|sigma_I| + |sigma_J|` of the product that
    /// produced the term.
    fn new(k: SchubertIndex, d: usize, coeff: Multiplicity, product_weight: usize) -> Self {
        assert!(coeff > 0, "quantum terms carry positive coefficients");
        assert_eq!(
            partition_of_subset(&k).weight() + k.n() * d,
            product_weight,
            "quantum term violates degree bookkeeping"
        );
        Self { k, d, coeff }
    }
}

/// Result of stripping `n`-rim hooks from a diagram with at most `p` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookReduction {
    pub core: Partition,
    pub hooks: usize,
    pub sign: i64,
}

/// Strips `n`-rim hooks from `nu` (at most `p` rows). Returns `None` when the
/// diagram cannot be brought inside the `p x (n - p)` rectangle.
pub fn rim_hook_reduce(nu: &Partition, p: usize, n: usize) -> Option<RimHookReduction> {
    assert!(nu.len() <= p, "rim-hook reduction expects at most p rows");
    let mut beads: Vec<usize> = (0..p).map(|i| nu.part(i) + p - 1 - i).collect();
    let mut hooks = 0;
    let mut sign = 1i64;
    // Beads are kept in decreasing order; the top bead always moves first.
    while let Some(pos) = beads.iter().position(|&x| x >= n && !beads.contains(&(x - n))) {
        let from = beads[pos];
        let to = from - n;
        let leg = beads.iter().filter(|&&y| y > to && y < from).count();
        if (p - 1 - leg) % 2 == 1 {
            sign = -sign;
        }
        beads[pos] = to;
        beads.sort_unstable_by(|a, b| b.cmp(a));
        hooks += 1;
    }
    if beads[0] >= n {
        return None;
    }
    let core = Partition::new((0..p).map(|i| beads[i] - (p - 1 - i)).collect()).unwrap();
    Some(RimHookReduction { core, hooks, sign })
}

type ProductKey = (SchubertIndex, SchubertIndex);

fn product_cache() -> &'static RwLock<HashMap<ProductKey, Arc<Vec<QuantumTerm>>>> {
    static CACHE: OnceLock<RwLock<HashMap<ProductKey, Arc<Vec<QuantumTerm>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn product_terms(i: &SchubertIndex, j: &SchubertIndex) -> Result<Arc<Vec<QuantumTerm>>> {
    if i.n() != j.n() || i.p() != j.p() {
        return Err(Error::InvalidArgument(format!(
            "quantum product needs subsets of the same size in the same n, got {i} and {j}"
        )));
    }
    let key = (i.clone(), j.clone());
    if let Some(terms) = product_cache().read().unwrap().get(&key) {
        return Ok(Arc::clone(terms));
    }
    let (n, p) = (i.n(), i.p());
    let lambda = partition_of_subset(i);
    let mu = partition_of_subset(j);
    let weight = lambda.weight() + mu.weight();
    let mut acc: BTreeMap<(usize, Vec<usize>), i64> = BTreeMap::new();
    for (nu, c) in tensor_decompose(&lambda, &mu, p)? {
        let Some(red) = rim_hook_reduce(&nu, p, n) else {
            continue;
        };
        let k = subset_of_partition(&red.core, p, n)?;
        let c = i64::try_from(c).map_err(|_| Error::Overflow)?;
        let slot = acc.entry((red.hooks, k.elements().to_vec())).or_insert(0);
        *slot = red
            .sign
            .checked_mul(c)
            .and_then(|x| slot.checked_add(x))
            .ok_or(Error::Overflow)?;
    }
    let mut terms = Vec::new();
    for ((d, k), c) in acc {
        if c < 0 {
            return Err(Error::Internal(format!(
                "negative quantum coefficient {c} for q^{d} sigma_{k:?} in sigma_{i} * sigma_{j}"
            )));
        }
        if c > 0 {
            let k = SchubertIndex::new(n, k)?;
            terms.push(QuantumTerm::new(k, d, c as Multiplicity, weight));
        }
    }
    let terms = Arc::new(terms);
    product_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::clone(&terms));
    Ok(terms)
}

/// `sigma_I * sigma_J = sum c^K_{IJ}(d) q^d sigma_K`, ordered by `(d, K)`.
pub fn quantum_product(i: &SchubertIndex, j: &SchubertIndex) -> Result<Vec<QuantumTerm>> {
    Ok(product_terms(i, j)?.as_ref().clone())
}

/// The coefficient of `q^d sigma_K` in `sigma_I * sigma_J`.
pub fn quantum_lr(i: &SchubertIndex, j: &SchubertIndex, k: &SchubertIndex, d: usize) -> Result<Multiplicity> {
    if k.n() != i.n() || k.p() != i.p() {
        return Err(Error::InvalidArgument(format!("subset {k} does not match {i}")));
    }
    let w = partition_of_subset(i).weight() + partition_of_subset(j).weight();
    if partition_of_subset(k).weight() + i.n() * d != w {
        // still validate that I and J are compatible
        product_terms(i, j)?;
        return Ok(0);
    }
    Ok(product_terms(i, j)?
        .iter()
        .find(|t| t.d == d && &t.k == k)
        .map_or(0, |t| t.coeff))
}

/// A normalized unitary spectrum; `boundary` marks `lambda_1 - lambda_n = 1`
/// within tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalizedSpectrum {
    pub spectrum: Spectrum,
    pub boundary: bool,
}

/// Chooses representatives `lambda_i = angles_i (mod 1)` that are sorted
/// descending, sum to zero and have spread below one.
///
/// With `x` the fractional parts sorted descending and `m = sum x` (an
/// integer for `SU(n)` input), the unique such lift lowers the `m` largest
/// by one. The residual of the integer projection is spread evenly.
pub fn normalize_unitary_spectrum(angles: &[f64], tol: f64) -> Result<NormalizedSpectrum> {
    check_tol(tol)?;
    if angles.is_empty() {
        return Err(Error::InvalidSpectrum("spectrum must not be empty".into()));
    }
    if angles.iter().any(|a| !a.is_finite()) {
        return Err(Error::InvalidSpectrum("angles must be finite".into()));
    }
    let mut x: Vec<f64> = angles
        .iter()
        .map(|a| {
            let f = a - a.floor();
            if f >= 1.0 {
                f - 1.0
            } else {
                f
            }
        })
        .collect();
    x.sort_by(|a, b| b.total_cmp(a));
    let sum: f64 = x.iter().sum();
    let m = sum.round();
    if (sum - m).abs() > tol {
        return Err(Error::NonIntegerTrace { sum });
    }
    let m = m as usize;
    let mut lifted: Vec<f64> = x[m..].iter().copied().chain(x[..m].iter().map(|v| v - 1.0)).collect();
    let mean = lifted.iter().sum::<f64>() / lifted.len() as f64;
    lifted.iter_mut().for_each(|v| *v -= mean);
    let spectrum = Spectrum::new(lifted)?;
    let boundary = spectrum.spread() >= 1.0 - tol;
    Ok(NormalizedSpectrum { spectrum, boundary })
}

/// Checks the normalization conditions on an already-lifted spectrum.
pub fn check_normalized(lambda: &Spectrum, tol: f64) -> Result<()> {
    if lambda.trace().abs() > tol {
        return Err(Error::NotNormalized(format!("{lambda} sums to {}", lambda.trace())));
    }
    if lambda.spread() > 1.0 + tol {
        return Err(Error::NotNormalized(format!(
            "{lambda} has spread {} > 1",
            lambda.spread()
        )));
    }
    Ok(())
}

/// One inequality `lambda_K(W) <= lambda_I(U) + lambda_J(V) + d` of the
/// unitary problem, present whenever `c^K_{IJ}(d) != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumInequality {
    pub i: SchubertIndex,
    pub j: SchubertIndex,
    pub k: SchubertIndex,
    pub d: usize,
    pub c: Multiplicity,
}

fn quantum_list_cache() -> &'static RwLock<HashMap<usize, Arc<Vec<QuantumInequality>>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<QuantumInequality>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// All unitary inequalities over `{1, ..., n}`, ordered by `(p, I, J, d, K)`.
pub fn quantum_inequalities(n: usize) -> Result<Arc<Vec<QuantumInequality>>> {
    if let Some(list) = quantum_list_cache().read().unwrap().get(&n) {
        return Ok(Arc::clone(list));
    }
    let mut out = Vec::new();
    for p in 1..n {
        let subsets = SchubertIndex::all(n, p);
        for i in &subsets {
            for j in &subsets {
                for t in product_terms(i, j)?.iter() {
                    out.push(QuantumInequality {
                        i: i.clone(),
                        j: j.clone(),
                        k: t.k.clone(),
                        d: t.d,
                        c: t.coeff,
                    });
                }
            }
        }
    }
    let list = Arc::new(out);
    quantum_list_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&list));
    Ok(list)
}

/// Do unitary `U, V` and `W = UV` with the given normalized spectra exist?
///
/// Callers interested in `UVW = 1` pass `-reverse(lambda(W))`, the spectrum
/// of `W^{-1}`.
pub fn check_unitary_product(lu: &Spectrum, lv: &Spectrum, lw: &Spectrum, tol: f64) -> Result<Verdict> {
    check_unitary_product_with(lu, lv, lw, tol, None)
}

/// As [`check_unitary_product`], testing only inequalities with
/// `d <= max_degree` when a bound is given.
pub fn check_unitary_product_with(
    lu: &Spectrum,
    lv: &Spectrum,
    lw: &Spectrum,
    tol: f64,
    max_degree: Option<usize>,
) -> Result<Verdict> {
    check_tol(tol)?;
    let n = check_same_len(&[lu, lv, lw])?;
    for s in [lu, lv, lw] {
        check_normalized(s, tol)?;
    }
    let mut tracker = SlackTracker::default();
    for q in quantum_inequalities(n)?.iter() {
        if max_degree.is_some_and(|m| q.d > m) {
            continue;
        }
        let slack = subset_sum_unchecked(lu, &q.i) + subset_sum_unchecked(lv, &q.j) + q.d as f64
            - subset_sum_unchecked(lw, &q.k);
        tracker.record(slack, tol, || Witness::quantum(&q.i, &q.j, &q.k, q.d, q.c, slack));
    }
    Ok(tracker.finish(lw.trace() - lu.trace() - lv.trace()))
}
