use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

/// Deviation from unitarity accepted for conjugating matrices.
pub const UNITARY_TOL: f64 = 1e-10;
/// Accepted distance of `sum lambda` from an integer for `SU(n)` synthesis.
pub const SU_TRACE_TOL: f64 = 1e-9;

fn check_conjugator(lambda: &Spectrum, u: &ComplexMatrix) -> Result<()> {
    if u.n() != lambda.len() {
        return Err(Error::SizeMismatch {
            expected: lambda.len(),
            found: u.n(),
        });
    }
    let deviation = u.unitary_deviation();
    if deviation > UNITARY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(())
}

fn conjugate(diag: &[Complex64], u: &ComplexMatrix) -> ComplexMatrix {
    let n = u.n();
    let mut scaled = u.clone();
    for i in 0..n {
        for j in 0..n {
            scaled[(i, j)] *= diag[j];
        }
    }
    &scaled * &u.adjoint()
}

/// `U diag(lambda) U*`, exactly Hermitian up to rounding.
pub fn hermitian_with_spectrum(lambda: &Spectrum, u: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_conjugator(lambda, u)?;
    let diag: Vec<Complex64> = lambda.values().iter().map(|&x| Complex64::new(x, 0.0)).collect();
    Ok(conjugate(&diag, u).hermitian_part())
}

/// `U diag(e^{2 pi i lambda_j}) U*`; `sum lambda` must be an integer so the
/// result lies in `SU(n)`.
pub fn unitary_with_spectrum(lambda: &Spectrum, u: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_conjugator(lambda, u)?;
    let sum = lambda.trace();
    if (sum - sum.round()).abs() > SU_TRACE_TOL {
        return Err(Error::NonIntegerTrace { sum });
    }
    let diag: Vec<Complex64> = lambda
        .values()
        .iter()
        .map(|&x| Complex64::from_polar(1.0, std::f64::consts::TAU * x))
        .collect();
    Ok(conjugate(&diag, u))
}

/// `U diag(sigma) V` with `sigma` as singular values.
pub fn matrix_with_singular_values(sigma: &Spectrum, u: &ComplexMatrix, v: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_conjugator(sigma, u)?;
    check_conjugator(sigma, v)?;
    let n = u.n();
    let mut scaled = u.clone();
    for i in 0..n {
        for j in 0..n {
            scaled[(i, j)] *= sigma[j];
        }
    }
    Ok(&scaled * v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::eigen::{eig_hermitian, eig_unitary};
    use crate::oracle::haar::haar_unitary;
    use crate::oracle::rng::trial_rng;

    fn s(v: &[f64]) -> Spectrum {
        Spectrum::new(v.to_vec()).unwrap()
    }

    #[test]
    fn identity_conjugator_gives_diagonal() {
        let l = s(&[2.0, -1.0, -3.5]);
        let m = hermitian_with_spectrum(&l, &ComplexMatrix::identity(3)).unwrap();
        assert_eq!(m, ComplexMatrix::from_real_diagonal(l.values()));
    }

    #[test]
    fn hermitian_round_trip() {
        let mut rng = trial_rng(4, 0);
        let l = s(&[3.0, 1.0, 1.0, -2.0, -2.5, -4.0]);
        let u = haar_unitary(6, &mut rng);
        let m = hermitian_with_spectrum(&l, &u).unwrap();
        assert!(m.hermitian_deviation() < 1e-12);
        assert!((m.trace().re - l.trace()).abs() < 1e-12);
        assert!(eig_hermitian(&m, 1e-9).unwrap().max_abs_diff(&l) < 1e-10);
    }

    #[test]
    fn rejects_non_unitary_conjugator() {
        let l = s(&[1.0, 0.0]);
        let m = ComplexMatrix::from_real_diagonal(&[2.0, 1.0]);
        assert!(matches!(hermitian_with_spectrum(&l, &m), Err(Error::NotUnitary { .. })));
        assert!(hermitian_with_spectrum(&l, &ComplexMatrix::identity(3)).is_err());
    }

    #[test]
    fn unitary_examples() {
        let mut rng = trial_rng(6, 0);
        let u = haar_unitary(3, &mut rng);
        let m = unitary_with_spectrum(&Spectrum::zeros(3), &u).unwrap();
        assert!((&m - &ComplexMatrix::identity(3)).max_abs() < 1e-12);
        let half = unitary_with_spectrum(&s(&[0.5, -0.5]), &ComplexMatrix::identity(2)).unwrap();
        assert!((&half + &ComplexMatrix::identity(2)).max_abs() < 1e-15);
        let l = s(&[0.4, 0.1, -0.2, -0.3]);
        let u = haar_unitary(4, &mut rng);
        let m = unitary_with_spectrum(&l, &u).unwrap();
        assert!((m.determinant() - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        assert!(eig_unitary(&m, 1e-9).unwrap().spectrum.max_abs_diff(&l) < 1e-10);
        assert!(matches!(
            unitary_with_spectrum(&s(&[0.3, 0.0]), &ComplexMatrix::identity(2)),
            Err(Error::NonIntegerTrace { .. })
        ));
    }
}
