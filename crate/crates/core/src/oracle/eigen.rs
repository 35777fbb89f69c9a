//! Cyclic complex Jacobi for Hermitian matrices, and the unitary and
//! singular-value spectra derived from it.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::quantum::{normalize_unitary_spectrum, NormalizedSpectrum};
use crate::spectrum::Spectrum;

/// Off-diagonal Frobenius norm at which iteration stops, relative to `||M||_F`.
pub const JACOBI_REL_THRESHOLD: f64 = 1e-13;
pub const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.n();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigen-decomposition `H = V diag(values) V*` of a Hermitian matrix.
/// Only the Hermitian part of `h` is used. Values are unsorted and column
/// `k` of `V` belongs to `values[k]`.
pub fn jacobi_eigh(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = h.n();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = JACOBI_REL_THRESHOLD * a.frobenius();
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let values = (0..n).map(|i| a[(i, i)].re).collect();
    Ok((values, v))
}

// Zero a[p][q] with J = D R, where D rotates the phase of column q so that
// the pivot is real and R is the real Jacobi rotation of that 2x2 block.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    if g < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let phase = apq / g;
    let tau = (aqq - app) / (2.0 * g);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = phase.conj() * -s;
    let jqq = phase.conj() * c;

    let n = a.n();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn eig_hermitian(m: &ComplexMatrix, tol: f64) -> Result<Spectrum> {
    if !m.is_finite() {
        return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
    }
    let deviation = m.hermitian_deviation();
    if deviation > tol {
        return Err(Error::NotHermitian { deviation });
    }
    let (values, _) = jacobi_eigh(m)?;
    Spectrum::from_unsorted(values)
}

// Generic real combinations of the commuting pair (M + M*)/2, (M - M*)/2i.
// A combination only merges eigenvectors of M with distinct eigenvalues
// when those eigenvalues project to the same point; trying several picks
// one without such a collision.
const COMBINATIONS: [(f64, f64); 4] = [
    (1.0, 0.618_033_988_749_894_9),
    (0.381_966_011_250_105_1, 1.0),
    (1.0, -0.414_213_562_373_095),
    (-0.267_949_192_431_122_7, 1.0),
];

/// Eigenvalues `e^{2 pi i lambda_j}` of a special unitary matrix, returned as
/// a normalized spectrum of exponents.
pub fn eig_unitary(m: &ComplexMatrix, tol: f64) -> Result<NormalizedSpectrum> {
    if !m.is_finite() {
        return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
    }
    let deviation = m.unitary_deviation();
    if deviation > tol {
        return Err(Error::NotUnitary { deviation });
    }
    let re = m.hermitian_part();
    let im = m.skew_part();
    let mut best: Option<(f64, Vec<Complex64>)> = None;
    for (a, b) in COMBINATIONS {
        let h = &re.scale(Complex64::new(a, 0.0)) + &im.scale(Complex64::new(b, 0.0));
        let (_, v) = jacobi_eigh(&h)?;
        let d = &(&v.adjoint() * m) * &v;
        let residual = off_diagonal_norm(&d);
        let eig: Vec<Complex64> = (0..m.n()).map(|i| d[(i, i)]).collect();
        if best.as_ref().is_none_or(|(r, _)| residual < *r) {
            best = Some((residual, eig));
        }
        if residual < 1e-12 {
            break;
        }
    }
    let (_, eig) = best.expect("at least one combination is tried");
    let angles: Vec<f64> = eig.iter().map(|z| z.arg() / std::f64::consts::TAU).collect();
    normalize_unitary_spectrum(&angles, tol)
}

/// `sigma(M) = lambda(sqrt(M* M))`, descending.
pub fn singular_spectrum(m: &ComplexMatrix) -> Result<Spectrum> {
    if !m.is_finite() {
        return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
    }
    let gram = &m.adjoint() * m;
    let (values, _) = jacobi_eigh(&gram)?;
    Spectrum::from_unsorted(values.into_iter().map(|x| x.max(0.0).sqrt()).collect())
}
