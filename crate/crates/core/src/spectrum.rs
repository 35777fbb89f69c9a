use std::fmt;
use std::ops::Index;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::combinatorics::SchubertIndex;
use crate::error::{Error, Result};

/// Real eigenvalues (or singular values, or unitary exponents) sorted in
/// descending order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Rejects empty, non-finite, or unsorted input. Sorting is never done
    /// silently.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSpectrum("spectrum must not be empty".into()));
        }
        if let Some(pos) = values.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidSpectrum(format!("entry {} is not finite", pos + 1)));
        }
        if let Some(pos) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpectrum(format!(
                "entries must be descending, but entry {} ({}) < entry {} ({})",
                pos + 1,
                values[pos],
                pos + 2,
                values[pos + 1]
            )));
        }
        Ok(Self(values))
    }

    /// Sorts descending first; for values produced by numerical routines.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self> {
        values.sort_by(|a, b| b.total_cmp(a));
        Self::new(values)
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| x as f64).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.iter().sum()
    }

    /// `lambda_1 - lambda_n`.
    pub fn spread(&self) -> f64 {
        self.0[0] - self.0[self.0.len() - 1]
    }

    /// Spectrum of `-H` given the spectrum of `H`.
    pub fn negated_reverse(&self) -> Self {
        Self(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn shifted(&self, t: f64) -> Self {
        Self(self.0.iter().map(|x| x + t).collect())
    }

    /// Entrywise natural logarithm; entries must be positive.
    pub fn ln(&self) -> Result<Self> {
        if let Some(&value) = self.0.iter().find(|&&x| x <= 0.0) {
            return Err(Error::NonPositiveSingularValue { value });
        }
        Self::new(self.0.iter().map(|x| x.ln()).collect())
    }

    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `lambda_I = sum_{i in I} lambda_i`.
pub fn subset_sum(lambda: &Spectrum, index: &SchubertIndex) -> Result<f64> {
    if index.n() != lambda.len() {
        return Err(Error::SizeMismatch {
            expected: lambda.len(),
            found: index.n(),
        });
    }
    Ok(subset_sum_unchecked(lambda, index))
}

pub(crate) fn subset_sum_unchecked(lambda: &Spectrum, index: &SchubertIndex) -> f64 {
    index.elements().iter().map(|&i| lambda.0[i - 1]).sum()
}

impl Index<usize> for Spectrum {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl TryFrom<Vec<f64>> for Spectrum {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<Spectrum> for Vec<f64> {
    fn from(s: Spectrum) -> Self {
        s.0
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Adding 0.0 turns -0 into 0.
        write!(f, "({})", self.0.iter().map(|x| x + 0.0).join(", "))
    }
}

pub(crate) fn check_same_len(spectra: &[&Spectrum]) -> Result<usize> {
    let n = spectra[0].len();
    for s in &spectra[1..] {
        if s.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: s.len(),
            });
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[f64]) -> Spectrum {
        Spectrum::new(v.to_vec()).unwrap()
    }

    #[test]
    fn subset_sum_examples() {
        let i = |n, v: &[usize]| SchubertIndex::new(n, v.to_vec()).unwrap();
        assert_eq!(subset_sum(&s(&[3.0, 1.0]), &i(2, &[1])).unwrap(), 3.0);
        assert_eq!(subset_sum(&s(&[3.0, 1.0]), &i(2, &[1, 2])).unwrap(), 4.0);
        assert_eq!(subset_sum(&s(&[5.0, 2.0, -1.0]), &i(3, &[2, 3])).unwrap(), 1.0);
        assert!(subset_sum(&s(&[5.0, 2.0, -1.0]), &i(2, &[1])).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Spectrum::new(vec![]).is_err());
        assert!(Spectrum::new(vec![0.0, 1.0]).is_err());
        assert!(Spectrum::new(vec![f64::NAN]).is_err());
        assert!(s(&[1.0, 0.0]).ln().is_err());
    }

    #[test]
    fn negated_reverse_is_involutive() {
        let x = s(&[2.0, 0.5, -3.0]);
        assert_eq!(x.negated_reverse(), s(&[3.0, -0.5, -2.0]));
        assert_eq!(x.negated_reverse().negated_reverse(), x);
    }
}
