// Which eigenvalues can A + B have? Exact decisions plus a numerical witness.

use horn_spectra::horn::{check_hermitian_sum, check_zero_sum, DEFAULT_TOL};
use horn_spectra::oracle::{eig_hermitian, haar_unitary, hermitian_with_spectrum, trial_rng};
use horn_spectra::Spectrum;

fn spec(v: &[f64]) -> Spectrum {
    Spectrum::new(v.to_vec()).expect("sorted spectrum")
}

fn main() {
    let (a, b) = (spec(&[1.0, 0.0]), spec(&[1.0, 0.0]));
    for g in [spec(&[2.0, 0.0]), spec(&[1.0, 1.0]), spec(&[3.0, -1.0])] {
        let v = check_hermitian_sum(&a, &b, &g, DEFAULT_TOL).unwrap();
        println!("{a} + {b} -> {g}: feasible = {}, witness = {:?}", v.feasible, v.witness);
    }

    // Draw a random pair with the given spectra; the sum is always accepted.
    let a = spec(&[3.0, 1.0, -1.0]);
    let b = spec(&[2.0, 0.0, 0.0]);
    let mut rng = trial_rng(2024, 0);
    let ma = hermitian_with_spectrum(&a, &haar_unitary(3, &mut rng)).unwrap();
    let mb = hermitian_with_spectrum(&b, &haar_unitary(3, &mut rng)).unwrap();
    let c = eig_hermitian(&(&ma + &mb), 1e-9).unwrap();
    let v = check_hermitian_sum(&a, &b, &c, 1e-8).unwrap();
    println!(
        "sampled lambda(A+B) = {c}, feasible = {}, slack = {:?}",
        v.feasible, v.slack
    );

    // Three multiples of 2P - (1 - P) with orthogonal rank-one P sum to zero.
    let s = spec(&[2.0, -1.0, -1.0]);
    let v = check_zero_sum(&[s.clone(), s.clone(), s], DEFAULT_TOL).unwrap();
    println!("(2,-1,-1) x 3 sums to zero: {}", v.feasible);
}
