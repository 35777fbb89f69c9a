//! Horn inequalities and the additive spectral deciders built on them.
//!
//! For subsets `I, J, K` of `{1, ..., n}` of equal size `p < n` with
//! `c^{sigma_K}_{sigma_I sigma_J} != 0`, every Hermitian `C = A + B` obeys
//!
//! ```text
//! lambda_K(C) <= lambda_I(A) + lambda_J(B)
//! ```
//!
//! and these inequalities together with the trace identity are also
//! sufficient. For `p = 1` they are Weyl's `lambda_{i+j-1}(A+B) <=
//! lambda_i(A) + lambda_j(B)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{dual_subset, partition_of_subset, subset_of_partition, Partition, SchubertIndex};
use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, multi_lr_boxed, Multiplicity};
use crate::spectrum::{check_same_len, subset_sum_unchecked, Spectrum};

/// Default absolute tolerance for real comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Ambient sizes above this still work but the lists grow quickly.
pub const SOFT_MAX_N: usize = 8;

/// Subsets `(I, J, K)` of equal cardinality over the same `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexTriple {
    pub i: SchubertIndex,
    pub j: SchubertIndex,
    pub k: SchubertIndex,
}

impl IndexTriple {
    pub fn p(&self) -> usize {
        self.i.p()
    }

    pub fn n(&self) -> usize {
        self.i.n()
    }
}

impl Ord for IndexTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p(), self.i.elements(), self.j.elements(), self.k.elements()).cmp(&(
            other.p(),
            other.i.elements(),
            other.j.elements(),
            other.k.elements(),
        ))
    }
}

impl PartialOrd for IndexTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One inequality `lambda_K(C) <= lambda_I(A) + lambda_J(B)` together with
/// its coefficient `c = c^K_{IJ} > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HornTriple {
    pub indices: IndexTriple,
    pub c: Multiplicity,
}

impl HornTriple {
    pub fn new(i: SchubertIndex, j: SchubertIndex, k: SchubertIndex, c: Multiplicity) -> Self {
        let p = i.p();
        assert!(
            j.p() == p && k.p() == p && p < i.n(),
            "Horn triple subsets must share p < n"
        );
        assert!(c > 0, "Horn triple needs a nonzero coefficient");
        assert_eq!(
            partition_of_subset(&i).weight() + partition_of_subset(&j).weight(),
            partition_of_subset(&k).weight(),
            "Horn triple violates weight balance"
        );
        Self {
            indices: IndexTriple { i, j, k },
            c,
        }
    }

    pub fn p(&self) -> usize {
        self.indices.p()
    }

    pub fn i(&self) -> &SchubertIndex {
        &self.indices.i
    }

    pub fn j(&self) -> &SchubertIndex {
        &self.indices.j
    }

    pub fn k(&self) -> &SchubertIndex {
        &self.indices.k
    }

    /// `lambda_I(A) + lambda_J(B) - lambda_K(C)`; negative means violated.
    pub fn slack(&self, a: &Spectrum, b: &Spectrum, c: &Spectrum) -> f64 {
        subset_sum_unchecked(a, self.i()) + subset_sum_unchecked(b, self.j()) - subset_sum_unchecked(c, self.k())
    }
}

/// Which Horn inequalities to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InequalitySet {
    All,
    /// Only those with `c = 1`.
    Facets,
}

/// Evidence for an infeasible verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Trace identity fails by `residual`.
    Trace { residual: f64 },
    /// Violated `(I, J, K)` inequality, with the quantum degree when it comes
    /// from the unitary problem.
    Triple {
        p: usize,
        #[serde(rename = "I")]
        i: Vec<usize>,
        #[serde(rename = "J")]
        j: Vec<usize>,
        #[serde(rename = "K")]
        k: Vec<usize>,
        c: Multiplicity,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        d: Option<usize>,
        slack: f64,
    },
    /// Violated inequality of a zero-sum problem with more than three terms.
    Multi {
        p: usize,
        factors: Vec<Vec<usize>>,
        #[serde(rename = "K")]
        k: Vec<usize>,
        c: Multiplicity,
        slack: f64,
    },
    /// Two-term zero sum: `spectra[1]` differs from `-reverse(spectra[0])`.
    Pairing { position: usize, residual: f64 },
}

impl Witness {
    fn triple(t: &HornTriple, d: Option<usize>, slack: f64) -> Self {
        Witness::Triple {
            p: t.p(),
            i: t.i().elements().to_vec(),
            j: t.j().elements().to_vec(),
            k: t.k().elements().to_vec(),
            c: t.c,
            d,
            slack,
        }
    }

    pub(crate) fn quantum(
        i: &SchubertIndex,
        j: &SchubertIndex,
        k: &SchubertIndex,
        d: usize,
        c: Multiplicity,
        slack: f64,
    ) -> Self {
        Witness::Triple {
            p: i.p(),
            i: i.elements().to_vec(),
            j: j.elements().to_vec(),
            k: k.elements().to_vec(),
            c,
            d: Some(d),
            slack,
        }
    }
}

/// Outcome of a feasibility check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub feasible: bool,
    /// First violated condition; present iff `feasible` is false.
    pub witness: Option<Witness>,
    /// Smallest `rhs - lhs` over all tested inequalities, `None` when there
    /// were none (n = 1).
    pub slack: Option<f64>,
    /// Signed trace (or total) residual.
    pub trace_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl Verdict {
    fn trace_failure(residual: f64) -> Self {
        Verdict {
            feasible: false,
            witness: Some(Witness::Trace { residual }),
            slack: None,
            trace_residual: residual,
            note: None,
        }
    }
}

/// Running minimum of slacks that remembers the first violation.
#[derive(Default)]
pub(crate) struct SlackTracker {
    min: Option<f64>,
    first_violation: Option<Witness>,
}

impl SlackTracker {
    pub(crate) fn record(&mut self, slack: f64, tol: f64, witness: impl FnOnce() -> Witness) {
        self.min = Some(self.min.map_or(slack, |m| m.min(slack)));
        if slack < -tol && self.first_violation.is_none() {
            self.first_violation = Some(witness());
        }
    }

    pub(crate) fn finish(self, trace_residual: f64) -> Verdict {
        Verdict {
            feasible: self.first_violation.is_none(),
            witness: self.first_violation,
            slack: self.min,
            trace_residual,
            note: None,
        }
    }
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be finite and nonnegative, got {tol}"
        )));
    }
    Ok(())
}

type ListKey = (usize, InequalitySet);

fn list_cache() -> &'static RwLock<HashMap<ListKey, Arc<Vec<HornTriple>>>> {
    static CACHE: OnceLock<RwLock<HashMap<ListKey, Arc<Vec<HornTriple>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn triples_at_rank(n: usize, p: usize) -> Vec<HornTriple> {
    let subsets = SchubertIndex::all(n, p);
    let diagrams: Vec<Partition> = subsets.iter().map(partition_of_subset).collect();
    let mut out = Vec::new();
    for (a, i) in subsets.iter().enumerate() {
        for (b, j) in subsets.iter().enumerate() {
            for (c, k) in subsets.iter().enumerate() {
                if diagrams[a].weight() + diagrams[b].weight() != diagrams[c].weight() {
                    continue;
                }
                let coeff = lr_coefficient(&diagrams[a], &diagrams[b], &diagrams[c])
                    .expect("boxed coefficients fit in 64 bits");
                if coeff > 0 {
                    out.push(HornTriple::new(i.clone(), j.clone(), k.clone(), coeff));
                }
            }
        }
    }
    out
}

/// Cached inequality list in canonical order.
pub fn inequalities(n: usize, set: InequalitySet) -> Arc<Vec<HornTriple>> {
    if let Some(list) = list_cache().read().unwrap().get(&(n, set)) {
        return Arc::clone(list);
    }
    let list = match set {
        InequalitySet::All => {
            if n > SOFT_MAX_N {
                log::warn!("generating Horn inequalities for n = {n}; this grows very quickly");
            }
            let per_rank: Vec<Vec<HornTriple>> = (1..n).into_par_iter().map(|p| triples_at_rank(n, p)).collect();
            let mut all: Vec<HornTriple> = per_rank.into_iter().flatten().collect();
            all.sort_by(|x, y| x.indices.cmp(&y.indices));
            all
        }
        InequalitySet::Facets => inequalities(n, InequalitySet::All)
            .iter()
            .filter(|t| t.c == 1)
            .cloned()
            .collect(),
    };
    let list = Arc::new(list);
    list_cache()
        .write()
        .unwrap()
        .entry((n, set))
        .or_insert_with(|| Arc::clone(&list));
    list
}

/// Every Horn triple over `{1, ..., n}` for all ranks `1 <= p < n`, with
/// `c^K_{IJ} != 0` (or `c = 1` when `facets_only`), in `(p, I, J, K)` order.
pub fn horn_list(n: usize, facets_only: bool) -> Vec<HornTriple> {
    let set = if facets_only {
        InequalitySet::Facets
    } else {
        InequalitySet::All
    };
    inequalities(n, set).as_ref().clone()
}

fn recursive_cache() -> &'static RwLock<HashMap<usize, Arc<Vec<IndexTriple>>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<IndexTriple>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn recursive_triples(n: usize) -> Arc<Vec<IndexTriple>> {
    if let Some(list) = recursive_cache().read().unwrap().get(&n) {
        return Arc::clone(list);
    }
    let mut out = Vec::new();
    for p in 1..n {
        let subsets = SchubertIndex::all(n, p);
        let diagrams: Vec<Vec<i64>> = subsets
            .iter()
            .map(|s| partition_of_subset(s).padded(p).into_iter().map(|x| x as i64).collect())
            .collect();
        let weights: Vec<i64> = diagrams.iter().map(|d| d.iter().sum()).collect();
        let lower = if p > 1 { Some(recursive_triples(p)) } else { None };
        let sum = |v: &[i64], s: &SchubertIndex| -> i64 { s.elements().iter().map(|&x| v[x - 1]).sum() };
        for (a, i) in subsets.iter().enumerate() {
            for (b, j) in subsets.iter().enumerate() {
                for (c, k) in subsets.iter().enumerate() {
                    if weights[a] + weights[b] != weights[c] {
                        continue;
                    }
                    let admissible = lower.as_ref().is_none_or(|lower| {
                        lower
                            .iter()
                            .all(|t| sum(&diagrams[c], &t.k) <= sum(&diagrams[a], &t.i) + sum(&diagrams[b], &t.j))
                    });
                    if admissible {
                        out.push(IndexTriple {
                            i: i.clone(),
                            j: j.clone(),
                            k: k.clone(),
                        });
                    }
                }
            }
        }
    }
    out.sort();
    let list = Arc::new(out);
    recursive_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&list));
    list
}

/// The same index set as [`horn_list`], generated without evaluating any
/// coefficient at rank `p`: a triple is kept when its diagrams balance in
/// weight and, read as integer spectra of length `p`, satisfy every Horn
/// inequality of rank below `p`.
pub fn horn_list_recursive(n: usize) -> Vec<IndexTriple> {
    recursive_triples(n).as_ref().clone()
}

/// Does a Hermitian `C = A + B` exist with the given spectra?
pub fn check_hermitian_sum(alpha: &Spectrum, beta: &Spectrum, gamma: &Spectrum, tol: f64) -> Result<Verdict> {
    check_hermitian_sum_with(alpha, beta, gamma, tol, InequalitySet::All)
}

pub fn check_hermitian_sum_with(
    alpha: &Spectrum,
    beta: &Spectrum,
    gamma: &Spectrum,
    tol: f64,
    set: InequalitySet,
) -> Result<Verdict> {
    check_tol(tol)?;
    let n = check_same_len(&[alpha, beta, gamma])?;
    let residual = gamma.trace() - alpha.trace() - beta.trace();
    if residual.abs() > tol {
        return Ok(Verdict::trace_failure(residual));
    }
    let mut tracker = SlackTracker::default();
    for t in inequalities(n, set).iter() {
        let slack = t.slack(alpha, beta, gamma);
        tracker.record(slack, tol, || Witness::triple(t, None, slack));
    }
    Ok(tracker.finish(residual))
}

/// Do Hermitian `H_1, ..., H_N` with the given spectra and `sum H_i = 0` exist?
///
/// Three terms reduce to [`check_hermitian_sum`] with `C = -H_3`. More than
/// three terms use the iterated-coefficient generalization
/// `lambda_K(-H_N) <= sum_t lambda_{I_t}(H_t)` whenever the multiplicity of
/// `sigma_K` in `sigma_{I_1} ... sigma_{I_{N-1}}` is nonzero; that case is
/// flagged in the verdict note.
pub fn check_zero_sum(spectra: &[Spectrum], tol: f64) -> Result<Verdict> {
    check_tol(tol)?;
    if spectra.len() < 2 {
        return Err(Error::InvalidArgument(
            "zero-sum problem needs at least two spectra".into(),
        ));
    }
    let refs: Vec<&Spectrum> = spectra.iter().collect();
    let n = check_same_len(&refs)?;
    let total: f64 = spectra.iter().map(Spectrum::trace).sum();
    if total.abs() > tol {
        return Ok(Verdict::trace_failure(total));
    }
    match spectra.len() {
        2 => {
            let target = spectra[0].negated_reverse();
            let (position, residual) = (0..n)
                .map(|i| (i + 1, spectra[1][i] - target[i]))
                .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
                .unwrap();
            let feasible = residual.abs() <= tol;
            Ok(Verdict {
                feasible,
                witness: (!feasible).then_some(Witness::Pairing { position, residual }),
                slack: Some(-residual.abs()),
                trace_residual: total,
                note: None,
            })
        }
        3 => check_hermitian_sum(&spectra[0], &spectra[1], &spectra[2].negated_reverse(), tol),
        _ => {
            let (last, factors) = spectra.split_last().unwrap();
            let gamma = last.negated_reverse();
            let mut verdict = multi_term(factors, &gamma, n, tol);
            verdict.trace_residual = total;
            verdict.note = Some(format!(
                "{}-term zero sum decided by iterated Littlewood-Richardson inequalities (extension, validated by sampling only)",
                spectra.len()
            ));
            Ok(verdict)
        }
    }
}

fn multi_term(factors: &[Spectrum], gamma: &Spectrum, n: usize, tol: f64) -> Verdict {
    let mut tracker = SlackTracker::default();
    for p in 1..n {
        let subsets = SchubertIndex::all(n, p);
        let diagrams: Vec<Partition> = subsets.iter().map(partition_of_subset).collect();
        let sums: Vec<Vec<f64>> = factors
            .iter()
            .map(|f| subsets.iter().map(|s| subset_sum_unchecked(f, s)).collect())
            .collect();
        for choice in (0..factors.len()).map(|_| 0..subsets.len()).multi_cartesian_product() {
            let parts: Vec<Partition> = choice.iter().map(|&c| diagrams[c].clone()).collect();
            let expansion = multi_lr_boxed(&parts, p, n - p).expect("boxed coefficients fit in 64 bits");
            let lhs: f64 = choice.iter().enumerate().map(|(t, &c)| sums[t][c]).sum();
            for (nu, c) in expansion {
                let k = subset_of_partition(&nu, p, n).expect("expansion stays in the rectangle");
                let slack = lhs - subset_sum_unchecked(gamma, &k);
                tracker.record(slack, tol, || Witness::Multi {
                    p,
                    factors: choice.iter().map(|&c| subsets[c].elements().to_vec()).collect(),
                    k: k.elements().to_vec(),
                    c,
                    slack,
                });
            }
        }
    }
    tracker.finish(0.0)
}

/// Cauchy interlacing for a rank-one nonnegative update `B = diag(b, 0, ...)`:
/// `gamma_1 >= alpha_1 >= gamma_2 >= ... >= gamma_n >= alpha_n` and
/// `sum gamma = sum alpha + b`.
pub fn interlacing_check(alpha: &Spectrum, b: f64, gamma: &Spectrum, tol: f64) -> Result<bool> {
    check_tol(tol)?;
    if !(b >= 0.0 && b.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "rank-one eigenvalue must be nonnegative, got {b}"
        )));
    }
    let n = check_same_len(&[alpha, gamma])?;
    let trace_ok = (gamma.trace() - alpha.trace() - b).abs() <= tol;
    let interlaced = (0..n).all(|i| gamma[i] >= alpha[i] - tol && (i + 1 == n || alpha[i] >= gamma[i + 1] - tol));
    Ok(trace_ok && interlaced)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    SemistableOnly,
    Unstable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub class: Stability,
    /// `min (alpha_I + beta_J + gamma_K) / p - total / n` over the tested
    /// subspace positions; `None` for n = 1.
    pub slack: Option<f64>,
    pub witness: Option<Witness>,
}

/// Stability of the triple of spectral filtrations with spectra `alpha`,
/// `beta`, `gamma` in generic position.
///
/// A `p`-dimensional subspace in positions `(I, J, K)` is tested whenever
/// `sigma_I sigma_J sigma_{K*}` contains the top class, i.e.
/// `c^{sigma_{K*}}_{sigma_I sigma_J} != 0`. The slope condition is oriented
/// so that semistability is equivalent to the existence of Hermitian
/// operators with these spectra summing to a scalar:
///
/// ```text
/// (alpha_I + beta_J + gamma_K) / p  >=  (sum alpha + sum beta + sum gamma) / n
/// ```
///
/// Strict everywhere is stable, weak with some equality (within `tol`) is
/// semistable only, and any violation is unstable.
pub fn toric_stability_check(alpha: &Spectrum, beta: &Spectrum, gamma: &Spectrum, tol: f64) -> Result<StabilityReport> {
    check_tol(tol)?;
    let n = check_same_len(&[alpha, beta, gamma])?;
    let slope = (alpha.trace() + beta.trace() + gamma.trace()) / n as f64;
    let mut min: Option<f64> = None;
    let mut witness = None;
    for t in inequalities(n, InequalitySet::All).iter() {
        let k = dual_subset(t.k());
        let p = t.p() as f64;
        let lhs =
            subset_sum_unchecked(alpha, t.i()) + subset_sum_unchecked(beta, t.j()) + subset_sum_unchecked(gamma, &k);
        let slack = lhs / p - slope;
        min = Some(min.map_or(slack, |m: f64| m.min(slack)));
        if slack < -tol && witness.is_none() {
            witness = Some(Witness::Triple {
                p: t.p(),
                i: t.i().elements().to_vec(),
                j: t.j().elements().to_vec(),
                k: k.elements().to_vec(),
                c: t.c,
                d: None,
                slack,
            });
        }
    }
    let class = match min {
        None => Stability::Stable,
        Some(_) if witness.is_some() => Stability::Unstable,
        Some(m) if m <= tol => Stability::SemistableOnly,
        Some(_) => Stability::Stable,
    };
    Ok(StabilityReport {
        class,
        slack: min,
        witness,
    })
}

/// Multiplicative problem for singular spectra in `SL(n, C)`: do
/// `A_1 ... A_N = 1` exist with `sigma(A_i) = sigmas[i]`? Reduced to the
/// zero-sum Hermitian problem on `log sigma_i`.
pub fn check_singular_product(sigmas: &[Spectrum], tol: f64) -> Result<Verdict> {
    check_tol(tol)?;
    let mut logs = Vec::with_capacity(sigmas.len());
    for s in sigmas {
        let log = s.ln()?;
        let product = log.trace().exp();
        if (product - 1.0).abs() > tol {
            return Err(Error::DeterminantModulus { product });
        }
        logs.push(log);
    }
    check_zero_sum(&logs, tol)
}

/// Density of `C_1 C_2 ... C_N` in `SL(n, C)`:
/// `sum dim C_i >= (n + 1)(n - 2)` and `sum r_i >= n`.
pub fn simpson_density_check(class_dims: &[usize], root_codims: &[usize], n: usize) -> Result<bool> {
    if class_dims.is_empty() || class_dims.len() != root_codims.len() {
        return Err(Error::InvalidArgument(
            "class dimensions and root codimensions must be nonempty lists of equal length".into(),
        ));
    }
    if let Some(r) = root_codims.iter().find(|&&r| r > n) {
        return Err(Error::InvalidArgument(format!("root codimension {r} exceeds n = {n}")));
    }
    let dims: i64 = class_dims.iter().map(|&d| d as i64).sum();
    let codims: usize = root_codims.iter().sum();
    let n = n as i64;
    Ok(dims >= (n + 1) * (n - 2) && codims as i64 >= n)
}
