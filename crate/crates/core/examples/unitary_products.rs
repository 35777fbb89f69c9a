// Eigenvalues of products of special unitary matrices via quantum Schubert calculus.

use horn_spectra::oracle::{eig_unitary, haar_unitary, trial_rng, unitary_with_spectrum};
use horn_spectra::quantum::{check_unitary_product, quantum_product};
use horn_spectra::{SchubertIndex, Spectrum};

fn main() {
    let i = SchubertIndex::new(4, vec![2, 4]).unwrap();
    print!("sigma_{i} * sigma_{i} in QH*(Gr(2,4)) =");
    for t in quantum_product(&i, &i).unwrap() {
        print!(" + {} q^{} sigma_{}", t.coeff, t.d, t.k);
    }
    println!();

    // In SU(2) with lambda_U = lambda_V = (1/10, -1/10), lambda_1(UV) ranges over [0, 1/5].
    let q = Spectrum::new(vec![0.1, -0.1]).unwrap();
    for t in [0.0, 0.1, 0.2, 0.3] {
        let w = Spectrum::new(vec![t, -t]).unwrap();
        let v = check_unitary_product(&q, &q, &w, 1e-9).unwrap();
        println!("lambda(W) = {w}: feasible = {}", v.feasible);
    }

    let mut rng = trial_rng(7, 0);
    let u = unitary_with_spectrum(&q, &haar_unitary(2, &mut rng)).unwrap();
    let v = unitary_with_spectrum(&q, &haar_unitary(2, &mut rng)).unwrap();
    let w = eig_unitary(&(&u * &v), 1e-9).unwrap();
    println!("a sampled product has lambda(UV) = {}", w.spectrum);
}
