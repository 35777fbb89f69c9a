use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::matrix::ComplexMatrix;

/// A Haar-distributed `n x n` unitary.
///
/// Columns of a complex standard Gaussian matrix are orthonormalized by
/// modified Gram-Schmidt with one re-orthogonalization pass. Gram-Schmidt
/// yields the QR factor with a positive real diagonal in `R`, which is the
/// phase convention that makes `Q` exactly Haar.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let re: f64 = rng.sample(StandardNormal);
                    let im: f64 = rng.sample(StandardNormal);
                    Complex64::new(re * scale, im * scale)
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for _pass in 0..2 {
            for j in 0..k {
                let (done, rest) = cols.split_at_mut(k);
                let (q, v) = (&done[j], &mut rest[0]);
                let proj: Complex64 = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
                v.iter_mut().zip(q).for_each(|(x, &y)| *x -= proj * y);
            }
        }
        let norm = cols[k].iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in cols[k].iter_mut() {
            *x /= norm;
        }
    }
    let mut q = ComplexMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            q[(i, j)] = x;
        }
    }
    q
}
