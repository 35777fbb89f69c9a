// Driving the command-line interface in-process.

use horn_spectra::cli::run;

fn main() {
    for argv in [
        vec!["horn-spectra", "lr", "2,1", "2,1", "3,2,1"],
        vec!["horn-spectra", "horn", "2"],
        vec!["horn-spectra", "check", "hermitian", "1,0", "1,0", "3,-1"],
        vec![
            "horn-spectra",
            "--json",
            "check",
            "unitary",
            "0.25,-0.25",
            "0.25,-0.25",
            "0.5,-0.5",
        ],
        vec![
            "horn-spectra",
            "--json",
            "sample",
            "product",
            "0.25,-0.25",
            "0.25,-0.25",
            "--trials",
            "3",
            "--seed",
            "9",
        ],
    ] {
        let out = run(&argv);
        println!("$ {}  [exit {}]", argv[1..].join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
