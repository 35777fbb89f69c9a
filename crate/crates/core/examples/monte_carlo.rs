// Seeded Monte-Carlo validation of the exact deciders.

use horn_spectra::oracle::{monte_carlo_product, monte_carlo_singular, monte_carlo_sum};
use horn_spectra::Spectrum;

fn main() {
    let spec = |v: &[f64]| Spectrum::new(v.to_vec()).unwrap();
    let report = monte_carlo_sum(
        &spec(&[2.0, 1.0, -1.0, -2.0]),
        &spec(&[3.0, 0.0, 0.0, -1.0]),
        2000,
        42,
        0,
    )
    .unwrap();
    println!(
        "sum:      all_pass = {}, worst slack = {:?}",
        report.all_pass, report.worst_slack
    );

    let report = monte_carlo_product(&spec(&[0.3, 0.0, -0.3]), &spec(&[0.5, -0.1, -0.4]), 2000, 42, 0).unwrap();
    println!(
        "product:  all_pass = {}, worst slack = {:?}",
        report.all_pass, report.worst_slack
    );

    let e = std::f64::consts::E;
    let s = spec(&[e, 1.0, 1.0 / e]);
    let report = monte_carlo_singular(&[s.clone(), s], 2000, 42, 0).unwrap();
    println!(
        "singular: all_pass = {}, worst slack = {:?}",
        report.all_pass, report.worst_slack
    );

    println!(
        "{}",
        serde_json::to_string_pretty(&monte_carlo_sum(&spec(&[1.0, 0.0]), &spec(&[1.0, 0.0]), 5, 1, 1).unwrap())
            .unwrap()
    );
}
