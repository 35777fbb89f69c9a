// Singular values of products in SL(n), reduced to a Hermitian zero sum on logarithms.

use horn_spectra::horn::check_singular_product;
use horn_spectra::oracle::{haar_unitary, matrix_with_singular_values, singular_spectrum, trial_rng};
use horn_spectra::Spectrum;

fn main() {
    let e = std::f64::consts::E;
    let s = Spectrum::new(vec![e, 1.0 / e]).unwrap();

    let mut rng = trial_rng(1, 0);
    let a = matrix_with_singular_values(&s, &haar_unitary(2, &mut rng), &haar_unitary(2, &mut rng)).unwrap();
    let b = matrix_with_singular_values(&s, &haar_unitary(2, &mut rng), &haar_unitary(2, &mut rng)).unwrap();
    let ab = singular_spectrum(&(&a * &b)).unwrap();
    println!("sigma(AB) = {ab}  (bound sigma_1(AB) <= e^2 = {:.6})", e * e);

    // (AB)^{-1} has singular values reversed and inverted, closing A B C = 1.
    let inv = Spectrum::from_unsorted(ab.values().iter().map(|x| 1.0 / x).collect()).unwrap();
    let v = check_singular_product(&[s.clone(), s.clone(), inv], 1e-7).unwrap();
    println!("A B (AB)^-1 = 1 accepted: {}", v.feasible);

    let too_big = Spectrum::new(vec![e * e * e, 1.0 / (e * e * e)]).unwrap();
    let v = check_singular_product(&[s.clone(), s, too_big], 1e-9).unwrap();
    println!("factor with sigma_1 = e^3 accepted: {}", v.feasible);
}
