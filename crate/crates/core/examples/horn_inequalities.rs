// The Horn inequalities for small n, from both generators.

use horn_spectra::horn::{horn_list, horn_list_recursive};

fn main() {
    for n in 2..=4 {
        let all = horn_list(n, false);
        let facets = horn_list(n, true);
        let recursive = horn_list_recursive(n);
        println!(
            "n = {n}: {} inequalities, {} with c = 1, {} from the recursion",
            all.len(),
            facets.len(),
            recursive.len()
        );
    }
    println!("n = 3:");
    for t in horn_list(3, false) {
        println!(
            "  lambda_{}(C) <= lambda_{}(A) + lambda_{}(B)   (c = {})",
            t.k(),
            t.i(),
            t.j(),
            t.c
        );
    }
}
