// Rank-one interlacing, saturation, toric stability and the density criterion.

use horn_spectra::horn::{interlacing_check, simpson_density_check, toric_stability_check, DEFAULT_TOL};
use horn_spectra::lr::saturation_pair;
use horn_spectra::{Partition, Spectrum};

fn spec(v: &[f64]) -> Spectrum {
    Spectrum::new(v.to_vec()).unwrap()
}

fn main() {
    let alpha = spec(&[3.0, 1.0, 0.0]);
    for gamma in [spec(&[3.5, 1.0, 0.5]), spec(&[4.5, 0.0, -0.5])] {
        println!(
            "{alpha} + rank one (1) -> {gamma}: interlaces = {}",
            interlacing_check(&alpha, 1.0, &gamma, DEFAULT_TOL).unwrap()
        );
    }

    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let (plain, scaled) = saturation_pair(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 3).unwrap();
    println!("c^(3,2,1) != 0: {plain}; after scaling by 3: {scaled}");

    let zero = Spectrum::zeros(2);
    for (a, b, g) in [
        (spec(&[1.0, -1.0]), spec(&[1.0, -1.0]), spec(&[0.5, -0.5])),
        (zero.clone(), zero.clone(), zero.clone()),
        (spec(&[2.0, -2.0]), zero.clone(), zero.clone()),
    ] {
        let r = toric_stability_check(&a, &b, &g, DEFAULT_TOL).unwrap();
        println!("filtrations {a}, {b}, {g}: {:?}", r.class);
    }

    println!(
        "three regular semisimple classes in SL(2) are dense: {}",
        simpson_density_check(&[2, 2, 2], &[1, 1, 1], 2).unwrap()
    );
}
