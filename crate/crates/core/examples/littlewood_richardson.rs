// Littlewood-Richardson coefficients and tensor product decompositions.

use horn_spectra::lr::{lr_coefficient, multi_lr, tensor_decompose};
use horn_spectra::Partition;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

fn main() {
    let c = lr_coefficient(&part(&[2, 1]), &part(&[2, 1]), &part(&[3, 2, 1])).unwrap();
    println!("c^(3,2,1)_(2,1),(2,1) = {c}");

    println!("V_(2,1) (x) V_(2,1) for GL(3):");
    for (gamma, mult) in tensor_decompose(&part(&[2, 1]), &part(&[2, 1]), 3).unwrap() {
        println!("  {mult} x V_{gamma}");
    }

    let box1 = part(&[1]);
    let m = multi_lr(&[box1.clone(), box1.clone(), box1], &part(&[2, 1])).unwrap();
    println!("multiplicity of (2,1) in V_(1)^(x3): {m}");
}
