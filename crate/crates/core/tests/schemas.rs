// Every JSON response validates against the shipped schemas and re-parses.

use std::path::PathBuf;

use horn_spectra::cli::run;
use horn_spectra::horn::{StabilityReport, Verdict};
use horn_spectra::oracle::SampleReport;
use serde_json::Value;

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas/v1")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn assert_valid(schema_name: &str, instance: &Value) {
    let validator = jsonschema::validator_for(&schema(schema_name)).unwrap();
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}\n{instance:#}");
}

fn respond(args: &[&str]) -> Value {
    let out = run(std::iter::once("horn-spectra")
        .chain(["--json"])
        .chain(args.iter().copied()));
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    assert_valid("envelope.schema.json", &v);
    v
}

#[test]
fn lr_tensor_and_horn() {
    assert_valid("lr.schema.json", &respond(&["lr", "2,1", "2,1", "3,2,1"])["result"]);
    assert_valid(
        "tensor.schema.json",
        &respond(&["tensor", "2,1", "2,1", "--rows", "3"])["result"],
    );
    for extra in [&[][..], &["--facets-only"][..], &["--recursive"][..]] {
        let mut args = vec!["horn", "4"];
        args.extend_from_slice(extra);
        assert_valid("horn_list.schema.json", &respond(&args)["result"]);
    }
}

#[test]
fn verdicts() {
    let cases: &[&[&str]] = &[
        &["check", "hermitian", "1,0", "1,0", "2,0"],
        &["check", "hermitian", "1,0", "1,0", "3,-1"],
        &["check", "hermitian", "1,0", "1,0", "3,0"],
        &["check", "unitary", "0.25,-0.25", "0.25,-0.25", "0.5,-0.5"],
        &["check", "unitary", "0.1,-0.1", "0.1,-0.1", "0.3,-0.3"],
        &["check", "zero-sum", "1,0,-1", "1,0,-1", "1,0,-1"],
        &["check", "zero-sum", "1,-1", "1,-1", "1,-1", "3,-3"],
        &["check", "zero-sum", "1,-1", "2,-2"],
        &["check", "singular", "1,1", "1,1"],
    ];
    for args in cases {
        let v = respond(args);
        assert_valid("verdict.schema.json", &v["result"]);
        let back: Verdict = serde_json::from_value(v["result"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&back).unwrap(), v["result"]);
    }
}

#[test]
fn stability_and_yes_no() {
    for g in ["0.5,-0.5", "0,0", "-3,-3"] {
        let v = respond(&["check", "stability", "1,-1", "1,-1", g]);
        assert_valid("stability_report.schema.json", &v["result"]);
        let _: StabilityReport = serde_json::from_value(v["result"].clone()).unwrap();
    }
    assert_valid(
        "boolean_check.schema.json",
        &respond(&["check", "interlace", "1,0", "1", "2,0"])["result"],
    );
    assert_valid(
        "boolean_check.schema.json",
        &respond(&["check", "simpson", "2,2", "1,1", "2"])["result"],
    );
}

#[test]
fn sample_reports() {
    for args in [
        &["sample", "sum", "1,0,-1", "1,1,0", "--trials", "20"][..],
        &["sample", "product", "0.25,-0.25", "0.25,-0.25", "--trials", "20"][..],
        &["sample", "singular", "2,0.5", "2,0.5", "--trials", "20"][..],
    ] {
        let v = respond(args);
        assert_valid("sample_report.schema.json", &v["result"]);
        let back: SampleReport = serde_json::from_value(v["result"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&back).unwrap(), v["result"]);
    }
    let failing = SampleReport {
        version: horn_spectra::SCHEMA_VERSION.into(),
        trials: 1,
        all_pass: false,
        worst_slack: Some(-0.5),
        failures: vec![horn_spectra::oracle::SampleFailure {
            trial: 0,
            seed: u64::MAX,
            spectrum: horn_spectra::Spectrum::new(vec![1.0, -1.0]).unwrap(),
        }],
    };
    assert_valid("sample_report.schema.json", &serde_json::to_value(&failing).unwrap());
}

#[test]
fn errors_use_the_envelope() {
    let v = respond(&["lr", "1,2", "1", "1"]);
    assert!(v["error"].is_string());
}

#[test]
fn spectra_file_schema() {
    assert_valid("spectra_file.schema.json", &serde_json::json!([[1, 0], [0.5, -0.5]]));
}
