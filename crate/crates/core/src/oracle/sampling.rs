use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::eigen::{eig_hermitian, eig_unitary, singular_spectrum};
use super::haar::haar_unitary;
use super::rng::{substream_seed, trial_rng, TrialRng};
use super::synth::{hermitian_with_spectrum, matrix_with_singular_values, unitary_with_spectrum};
use crate::error::{Error, Result};
use crate::horn::{check_hermitian_sum, check_zero_sum, Verdict};
use crate::quantum::{check_normalized, check_unitary_product};
use crate::spectrum::{check_same_len, Spectrum};
use crate::SCHEMA_VERSION;

pub const SUM_TOL: f64 = 1e-8;
pub const PRODUCT_TOL: f64 = 1e-7;
pub const SINGULAR_TOL: f64 = 1e-7;
// Input checks on matrices the harness built itself.
const SELF_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleFailure {
    pub trial: u64,
    /// Substream seed of the failing trial.
    pub seed: u64,
    pub spectrum: Spectrum,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub version: String,
    pub trials: u64,
    pub all_pass: bool,
    /// Smallest slack over all samples; `None` when no inequality applies.
    pub worst_slack: Option<f64>,
    pub failures: Vec<SampleFailure>,
}

/// `lambda(A + B)` for independent Haar conjugates of `diag(alpha)`, `diag(beta)`.
pub fn sample_sum(alpha: &Spectrum, beta: &Spectrum, rng: &mut TrialRng) -> Result<Spectrum> {
    let n = check_same_len(&[alpha, beta])?;
    let a = hermitian_with_spectrum(alpha, &haar_unitary(n, rng))?;
    let b = hermitian_with_spectrum(beta, &haar_unitary(n, rng))?;
    eig_hermitian(&(&a + &b), SELF_TOL)
}

/// Normalized `lambda(UV)` for independent Haar conjugates.
pub fn sample_product(lu: &Spectrum, lv: &Spectrum, rng: &mut TrialRng) -> Result<Spectrum> {
    let n = check_same_len(&[lu, lv])?;
    let u = unitary_with_spectrum(lu, &haar_unitary(n, rng))?;
    let v = unitary_with_spectrum(lv, &haar_unitary(n, rng))?;
    Ok(eig_unitary(&(&u * &v), SELF_TOL)?.spectrum)
}

/// `sigma(A_1 ... A_N)` with `A_i = U_i diag(sigma_i) V_i` for Haar `U_i, V_i`.
pub fn sample_singular(sigmas: &[Spectrum], rng: &mut TrialRng) -> Result<Spectrum> {
    let refs: Vec<&Spectrum> = sigmas.iter().collect();
    let n = check_same_len(&refs)?;
    let mut product: Option<super::matrix::ComplexMatrix> = None;
    for s in sigmas {
        let u = haar_unitary(n, rng);
        let v = haar_unitary(n, rng);
        let a = matrix_with_singular_values(s, &u, &v)?;
        product = Some(match product {
            None => a,
            Some(p) => &p * &a,
        });
    }
    singular_spectrum(&product.expect("nonempty factor list"))
}

fn run<F>(trials: u64, seed: u64, jobs: usize, trial: F) -> Result<SampleReport>
where
    F: Fn(&mut TrialRng) -> Result<(Spectrum, Verdict)> + Sync,
{
    let body = || -> Vec<Result<(Spectrum, Verdict)>> {
        (0..trials)
            .into_par_iter()
            .map(|t| trial(&mut trial_rng(seed, t)))
            .collect()
    };
    let results = if jobs == 0 {
        body()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(body)
    };
    let mut worst: Option<f64> = None;
    let mut failures = Vec::new();
    for (t, result) in results.into_iter().enumerate() {
        let (spectrum, verdict) = result?;
        if let Some(s) = verdict.slack {
            worst = Some(worst.map_or(s, |w: f64| w.min(s)));
        }
        if !verdict.feasible {
            failures.push(SampleFailure {
                trial: t as u64,
                seed: substream_seed(seed, t as u64),
                spectrum,
            });
        }
    }
    Ok(SampleReport {
        version: SCHEMA_VERSION.to_string(),
        trials,
        all_pass: failures.is_empty(),
        worst_slack: worst,
        failures,
    })
}

/// Samples `lambda(A + B)` and checks each against the Hermitian sum problem.
/// `jobs = 0` uses the global thread pool. Reports do not depend on `jobs`.
pub fn monte_carlo_sum(alpha: &Spectrum, beta: &Spectrum, trials: u64, seed: u64, jobs: usize) -> Result<SampleReport> {
    check_same_len(&[alpha, beta])?;
    run(trials, seed, jobs, |rng| {
        let gamma = sample_sum(alpha, beta, rng)?;
        let verdict = check_hermitian_sum(alpha, beta, &gamma, SUM_TOL)?;
        Ok((gamma, verdict))
    })
}

/// Samples `lambda(UV)` and checks each against the unitary product problem.
pub fn monte_carlo_product(lu: &Spectrum, lv: &Spectrum, trials: u64, seed: u64, jobs: usize) -> Result<SampleReport> {
    check_same_len(&[lu, lv])?;
    check_normalized(lu, SELF_TOL)?;
    check_normalized(lv, SELF_TOL)?;
    run(trials, seed, jobs, |rng| {
        let lw = sample_product(lu, lv, rng)?;
        let verdict = check_unitary_product(lu, lv, &lw, PRODUCT_TOL)?;
        Ok((lw, verdict))
    })
}

/// Samples `P = A_1 ... A_N` and checks that
/// `(log sigma_1, ..., log sigma_N, -reverse(log sigma(P)))` is a feasible
/// zero sum.
pub fn monte_carlo_singular(sigmas: &[Spectrum], trials: u64, seed: u64, jobs: usize) -> Result<SampleReport> {
    if sigmas.is_empty() {
        return Err(Error::InvalidArgument(
            "at least one singular spectrum is required".into(),
        ));
    }
    let refs: Vec<&Spectrum> = sigmas.iter().collect();
    check_same_len(&refs)?;
    let mut logs = Vec::with_capacity(sigmas.len() + 1);
    for s in sigmas {
        let log = s.ln()?;
        let product = log.trace().exp();
        if (product - 1.0).abs() > SELF_TOL {
            return Err(Error::DeterminantModulus { product });
        }
        logs.push(log);
    }
    run(trials, seed, jobs, |rng| {
        let sigma = sample_singular(sigmas, rng)?;
        let mut all = logs.clone();
        all.push(sigma.ln()?.negated_reverse());
        let verdict = check_zero_sum(&all, SINGULAR_TOL)?;
        Ok((sigma, verdict))
    })
}
