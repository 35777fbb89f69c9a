//! Command-line front end. [`run`] is pure: it takes argv and returns what
//! the process should print and its exit code, so it can be tested without
//! spawning anything.
//!
//! Exit codes: 0 feasible (or stable, or all samples pass), 1 infeasible,
//! 2 invalid input.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::Partition;
use crate::error::Error;
use crate::horn::{
    check_hermitian_sum_with, check_singular_product, check_zero_sum, horn_list, horn_list_recursive,
    interlacing_check, simpson_density_check, toric_stability_check, InequalitySet, Stability, Verdict, DEFAULT_TOL,
    SOFT_MAX_N,
};
use crate::lr::{lr_coefficient, tensor_decompose};
use crate::oracle::sampling::{monte_carlo_product, monte_carlo_singular, monte_carlo_sum, SampleReport};
use crate::quantum::check_unitary_product;
use crate::spectrum::Spectrum;
use crate::SCHEMA_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "horn-spectra",
    version,
    about = "Eigenvalue problems for sums and products of matrices"
)]
struct Cli {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Absolute tolerance for real comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood-Richardson coefficient c^gamma_{alpha beta}.
    Lr { alpha: String, beta: String, gamma: String },
    /// Decompose V_alpha (x) V_beta for GL(rows).
    Tensor {
        alpha: String,
        beta: String,
        #[arg(long)]
        rows: usize,
    },
    /// List the Horn inequalities for n x n matrices.
    Horn {
        n: usize,
        /// Only inequalities with coefficient 1.
        #[arg(long)]
        facets_only: bool,
        /// Generate from the recursive description instead of LR coefficients.
        #[arg(long)]
        recursive: bool,
    },
    /// Decide a spectral problem.
    Check(CheckArgs),
    /// Sample random matrices and check every sample.
    Sample(SampleArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    /// A + B = C for Hermitian A, B, C: alpha beta gamma.
    Hermitian,
    /// UV = W in SU(n): lambda_U lambda_V lambda_W.
    Unitary,
    /// A_1 ... A_N = 1 in SL(n): sigma_1 ... sigma_N.
    Singular,
    /// Rank-one update: alpha b gamma.
    Interlace,
    /// Generic triple of filtrations: alpha beta gamma.
    Stability,
    /// A_1 + ... + A_N = 0: lambda_1 ... lambda_N.
    ZeroSum,
    /// Density of a product of conjugacy classes: dims codims n.
    Simpson,
}

#[derive(Args, Debug)]
struct CheckArgs {
    kind: CheckKind,
    /// Comma-separated values, or @file holding a JSON array of arrays.
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Hermitian only: test the c = 1 inequalities.
    #[arg(long)]
    facets_only: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SampleKind {
    Sum,
    Product,
    Singular,
}

#[derive(Args, Debug)]
struct SampleArgs {
    kind: SampleKind,
    #[arg(required = true)]
    spectra: Vec<String>,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses every core. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    version: &'a str,
    schema: &'a str,
    inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

struct Reply {
    inputs: Value,
    result: Value,
    text: String,
    code: i32,
}

#[derive(Debug)]
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = std::result::Result<Reply, InputError>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = args.into_iter().map(|a| protect_negative(a.into()));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            } else {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    let name = command_name(&cli.command);
    let mut stderr = String::new();
    let result = if !(cli.tol >= 0.0 && cli.tol.is_finite()) {
        Err(InputError(format!(
            "--tol must be a finite nonnegative number, got {}",
            cli.tol
        )))
    } else {
        dispatch(&cli, &mut stderr)
    };
    match result {
        Ok(reply) => {
            let stdout = if cli.json {
                let env = Envelope {
                    command: &name,
                    version: env!("CARGO_PKG_VERSION"),
                    schema: SCHEMA_VERSION,
                    inputs: reply.inputs,
                    result: Some(reply.result),
                    error: None,
                };
                serde_json::to_string_pretty(&env).expect("envelope serializes") + "\n"
            } else {
                reply.text
            };
            Outcome {
                stdout,
                stderr,
                code: reply.code,
            }
        }
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            let stdout = if cli.json {
                let env = Envelope {
                    command: &name,
                    version: env!("CARGO_PKG_VERSION"),
                    schema: SCHEMA_VERSION,
                    inputs: Value::Null,
                    result: None,
                    error: Some(msg),
                };
                serde_json::to_string_pretty(&env).expect("envelope serializes") + "\n"
            } else {
                String::new()
            };
            Outcome {
                stdout,
                stderr,
                code: EXIT_INPUT,
            }
        }
    }
}

// Lists such as "-1,0" would be read as flags. A leading space keeps them
// values; parsers trim it.
fn protect_negative(arg: std::ffi::OsString) -> std::ffi::OsString {
    match arg.to_str() {
        Some(s)
            if s.len() > 1 && s.starts_with('-') && s[1..].starts_with(|c: char| c.is_ascii_digit() || c == '.') =>
        {
            format!(" {s}").into()
        }
        _ => arg,
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Lr { .. } => "lr".into(),
        Command::Tensor { .. } => "tensor".into(),
        Command::Horn { .. } => "horn".into(),
        Command::Check(a) => format!("check {}", a.kind.to_possible_value().unwrap().get_name()),
        Command::Sample(a) => format!("sample {}", a.kind.to_possible_value().unwrap().get_name()),
    }
}

fn dispatch(cli: &Cli, stderr: &mut String) -> CmdResult {
    match &cli.command {
        Command::Lr { alpha, beta, gamma } => cmd_lr(alpha, beta, gamma),
        Command::Tensor { alpha, beta, rows } => cmd_tensor(alpha, beta, *rows),
        Command::Horn {
            n,
            facets_only,
            recursive,
        } => cmd_horn(*n, *facets_only, *recursive, stderr),
        Command::Check(args) => cmd_check(args, cli.tol),
        Command::Sample(args) => cmd_sample(args),
    }
}

fn parse_numbers<T: std::str::FromStr>(s: &str, what: &str) -> std::result::Result<Vec<T>, InputError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, tok)| {
            tok.trim().parse::<T>().map_err(|_| {
                InputError(format!(
                    "invalid {what} '{}' at position {} in '{s}'",
                    tok.trim(),
                    i + 1
                ))
            })
        })
        .collect()
}

fn parse_partition(s: &str) -> std::result::Result<Partition, InputError> {
    Ok(Partition::new(parse_numbers(s, "partition part")?)?)
}

fn parse_spectrum(s: &str) -> std::result::Result<Spectrum, InputError> {
    let v: Vec<f64> = parse_numbers(s, "number")?;
    if let Some(i) = v.iter().position(|x| !x.is_finite()) {
        return Err(InputError(format!("non-finite number at position {} in '{s}'", i + 1)));
    }
    Spectrum::new(v).map_err(|e| InputError(format!("'{s}': {e}")))
}

fn read_spectrum_file(path: &str) -> std::result::Result<Vec<Spectrum>, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {path}: {e}")))?;
    let rows: Vec<Vec<f64>> =
        serde_json::from_str(&text).map_err(|e| InputError(format!("{path}: expected a JSON array of arrays: {e}")))?;
    rows.into_iter()
        .enumerate()
        .map(|(i, r)| Spectrum::new(r).map_err(|e| InputError(format!("{path}: spectrum {}: {e}", i + 1))))
        .collect()
}

/// Each argument is one comma-separated spectrum, or `@path` to a JSON file
/// holding several.
fn parse_spectra(args: &[String]) -> std::result::Result<Vec<Spectrum>, InputError> {
    let mut out = Vec::new();
    for a in args {
        match a.strip_prefix('@') {
            Some(path) => out.extend(read_spectrum_file(path)?),
            None => out.push(parse_spectrum(a)?),
        }
    }
    Ok(out)
}

fn expect_count<T>(items: Vec<T>, n: usize, what: &str) -> std::result::Result<Vec<T>, InputError> {
    if items.len() != n {
        return Err(InputError(format!("{what} takes {n} spectra, got {}", items.len())));
    }
    Ok(items)
}

fn spectra_json(s: &[Spectrum]) -> Value {
    json!(s.iter().map(|x| x.values().to_vec()).collect::<Vec<_>>())
}

fn verdict_code(feasible: bool) -> i32 {
    if feasible {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    }
}

fn cmd_lr(alpha: &str, beta: &str, gamma: &str) -> CmdResult {
    let (a, b, g) = (parse_partition(alpha)?, parse_partition(beta)?, parse_partition(gamma)?);
    let c = lr_coefficient(&a, &b, &g)?;
    Ok(Reply {
        inputs: json!({ "alpha": a, "beta": b, "gamma": g }),
        result: json!({ "multiplicity": c }),
        text: format!("{c}\n"),
        code: EXIT_OK,
    })
}

fn cmd_tensor(alpha: &str, beta: &str, rows: usize) -> CmdResult {
    let (a, b) = (parse_partition(alpha)?, parse_partition(beta)?);
    let terms = tensor_decompose(&a, &b, rows)?;
    let mut text = String::new();
    for (g, c) in &terms {
        let _ = writeln!(text, "{c}\t{g}");
    }
    let table: Vec<Value> = terms
        .iter()
        .map(|(g, c)| json!({ "gamma": g, "multiplicity": c }))
        .collect();
    Ok(Reply {
        inputs: json!({ "alpha": a, "beta": b, "rows": rows }),
        result: json!({ "terms": table }),
        text,
        code: EXIT_OK,
    })
}

// (p, I, J, K, c); c is unknown for the recursive generator.
type HornRow = (usize, Vec<usize>, Vec<usize>, Vec<usize>, Option<u64>);

fn cmd_horn(n: usize, facets_only: bool, recursive: bool, stderr: &mut String) -> CmdResult {
    if n < 2 {
        return Err(InputError(format!("horn needs n >= 2, got {n}")));
    }
    if n > SOFT_MAX_N {
        let _ = writeln!(
            stderr,
            "warning: n = {n} is above {SOFT_MAX_N}; enumeration may be slow"
        );
    }
    let rows: Vec<HornRow> = if recursive {
        if facets_only {
            return Err(InputError(
                "--facets-only needs coefficients, which --recursive does not compute".into(),
            ));
        }
        horn_list_recursive(n)
            .into_iter()
            .map(|t| {
                (
                    t.p(),
                    t.i.elements().to_vec(),
                    t.j.elements().to_vec(),
                    t.k.elements().to_vec(),
                    None,
                )
            })
            .collect()
    } else {
        horn_list(n, facets_only)
            .into_iter()
            .map(|t| {
                (
                    t.p(),
                    t.i().elements().to_vec(),
                    t.j().elements().to_vec(),
                    t.k().elements().to_vec(),
                    Some(t.c),
                )
            })
            .collect()
    };
    let fmt = |v: &[usize]| format!("{{{}}}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    let mut text = String::from("p\tI\tJ\tK\tc\n");
    for (p, i, j, k, c) in &rows {
        let c = c.map_or("-".to_string(), |c| c.to_string());
        let _ = writeln!(text, "{p}\t{}\t{}\t{}\t{c}", fmt(i), fmt(j), fmt(k));
    }
    let list: Vec<Value> = rows
        .iter()
        .map(|(p, i, j, k, c)| json!({ "p": p, "I": i, "J": j, "K": k, "c": c }))
        .collect();
    Ok(Reply {
        inputs: json!({ "n": n, "facets_only": facets_only, "recursive": recursive }),
        result: json!({ "count": list.len(), "inequalities": list }),
        text,
        code: EXIT_OK,
    })
}

fn verdict_text(v: &Verdict) -> String {
    let mut text = String::from(if v.feasible { "feasible\n" } else { "infeasible\n" });
    if let Some(w) = &v.witness {
        let _ = writeln!(
            text,
            "witness: {}",
            serde_json::to_string(w).expect("witness serializes")
        );
    }
    if let Some(s) = v.slack {
        let _ = writeln!(text, "slack: {s}");
    }
    let _ = writeln!(text, "trace residual: {}", v.trace_residual);
    if let Some(note) = &v.note {
        let _ = writeln!(text, "note: {note}");
    }
    text
}

fn verdict_reply(inputs: Value, v: Verdict) -> Reply {
    Reply {
        inputs,
        text: verdict_text(&v),
        code: verdict_code(v.feasible),
        result: serde_json::to_value(&v).expect("verdict serializes"),
    }
}

fn cmd_check(args: &CheckArgs, tol: f64) -> CmdResult {
    if args.facets_only && args.kind != CheckKind::Hermitian {
        return Err(InputError("--facets-only applies to `check hermitian` only".into()));
    }
    match args.kind {
        CheckKind::Hermitian => {
            let s = expect_count(parse_spectra(&args.inputs)?, 3, "hermitian")?;
            let set = if args.facets_only {
                InequalitySet::Facets
            } else {
                InequalitySet::All
            };
            let v = check_hermitian_sum_with(&s[0], &s[1], &s[2], tol, set)?;
            let inputs = json!({ "spectra": spectra_json(&s), "tol": tol, "facets_only": args.facets_only });
            Ok(verdict_reply(inputs, v))
        }
        CheckKind::Unitary => {
            let s = expect_count(parse_spectra(&args.inputs)?, 3, "unitary")?;
            let v = check_unitary_product(&s[0], &s[1], &s[2], tol)?;
            Ok(verdict_reply(json!({ "spectra": spectra_json(&s), "tol": tol }), v))
        }
        CheckKind::Singular => {
            let s = parse_spectra(&args.inputs)?;
            let v = check_singular_product(&s, tol)?;
            Ok(verdict_reply(json!({ "spectra": spectra_json(&s), "tol": tol }), v))
        }
        CheckKind::ZeroSum => {
            let s = parse_spectra(&args.inputs)?;
            let v = check_zero_sum(&s, tol)?;
            Ok(verdict_reply(json!({ "spectra": spectra_json(&s), "tol": tol }), v))
        }
        CheckKind::Interlace => {
            let [alpha, b, gamma] = args.inputs.as_slice() else {
                return Err(InputError("interlace takes alpha, b, gamma".into()));
            };
            let alpha = parse_spectrum(alpha)?;
            let b: f64 = b
                .trim()
                .parse()
                .map_err(|_| InputError(format!("invalid rank-one eigenvalue '{b}'")))?;
            let gamma = parse_spectrum(gamma)?;
            let ok = interlacing_check(&alpha, b, &gamma, tol)?;
            Ok(Reply {
                inputs: json!({ "alpha": alpha, "b": b, "gamma": gamma, "tol": tol }),
                result: json!({ "feasible": ok }),
                text: if ok {
                    "interlaced\n".into()
                } else {
                    "not interlaced\n".into()
                },
                code: verdict_code(ok),
            })
        }
        CheckKind::Stability => {
            let s = expect_count(parse_spectra(&args.inputs)?, 3, "stability")?;
            let r = toric_stability_check(&s[0], &s[1], &s[2], tol)?;
            let class = serde_json::to_value(r.class).expect("class serializes");
            let mut text = format!("{}\n", class.as_str().unwrap_or_default());
            if let Some(sl) = r.slack {
                let _ = writeln!(text, "slack: {sl}");
            }
            if let Some(w) = &r.witness {
                let _ = writeln!(
                    text,
                    "witness: {}",
                    serde_json::to_string(w).expect("witness serializes")
                );
            }
            Ok(Reply {
                inputs: json!({ "spectra": spectra_json(&s), "tol": tol }),
                code: verdict_code(r.class != Stability::Unstable),
                result: serde_json::to_value(&r).expect("report serializes"),
                text,
            })
        }
        CheckKind::Simpson => {
            let [dims, codims, n] = args.inputs.as_slice() else {
                return Err(InputError("simpson takes dims, codims, n".into()));
            };
            let dims: Vec<usize> = parse_numbers(dims, "class dimension")?;
            let codims: Vec<usize> = parse_numbers(codims, "root codimension")?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| InputError(format!("invalid matrix size '{n}'")))?;
            let dense = simpson_density_check(&dims, &codims, n)?;
            Ok(Reply {
                inputs: json!({ "class_dims": dims, "root_codims": codims, "n": n }),
                result: json!({ "feasible": dense }),
                text: if dense { "dense\n".into() } else { "not dense\n".into() },
                code: verdict_code(dense),
            })
        }
    }
}

fn report_text(r: &SampleReport) -> String {
    let mut text = format!(
        "{} trials, {}\n",
        r.trials,
        if r.all_pass { "all pass" } else { "FAILURES" }
    );
    if let Some(s) = r.worst_slack {
        let _ = writeln!(text, "worst slack: {s}");
    }
    for f in &r.failures {
        let _ = writeln!(text, "trial {} (seed {:#018x}): {}", f.trial, f.seed, f.spectrum);
    }
    text
}

fn cmd_sample(args: &SampleArgs) -> CmdResult {
    let s = parse_spectra(&args.spectra)?;
    let report = match args.kind {
        SampleKind::Sum => {
            let s = expect_count(s.clone(), 2, "sample sum")?;
            monte_carlo_sum(&s[0], &s[1], args.trials, args.seed, args.jobs)?
        }
        SampleKind::Product => {
            let s = expect_count(s.clone(), 2, "sample product")?;
            monte_carlo_product(&s[0], &s[1], args.trials, args.seed, args.jobs)?
        }
        SampleKind::Singular => monte_carlo_singular(&s, args.trials, args.seed, args.jobs)?,
    };
    Ok(Reply {
        // --jobs is left out so output is identical for every thread count.
        inputs: json!({ "spectra": spectra_json(&s), "trials": args.trials, "seed": args.seed }),
        text: report_text(&report),
        code: verdict_code(report.all_pass),
        result: serde_json::to_value(&report).expect("report serializes"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("horn-spectra").chain(args.iter().copied()))
    }

    fn json_of(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn lr_and_tensor() {
        let o = go(&["lr", "2,1", "2,1", "3,2,1"]);
        assert_eq!((o.stdout.as_str(), o.code), ("2\n", 0));
        let o = go(&["--json", "tensor", "1", "1", "--rows", "2"]);
        let v = json_of(&o);
        assert_eq!(v["command"], "tensor");
        assert_eq!(v["result"]["terms"][0]["gamma"], json!([2]));
        assert_eq!(v["result"]["terms"][1]["gamma"], json!([1, 1]));
        assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn parse_errors_report_position() {
        let o = go(&["lr", "2,x", "1", "3"]);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(o.stderr.contains("position 2"), "{}", o.stderr);
        let o = go(&["check", "hermitian", "0,1", "0,0", "0,0"]);
        assert_eq!(o.code, EXIT_INPUT);
        let o = go(&["check", "hermitian", "1,0"]);
        assert_eq!(o.code, EXIT_INPUT);
        let o = go(&["check", "hermitian", "0,-1", "-1,-2", "-1,-3"]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        let o = go(&["frobnicate"]);
        assert_eq!(o.code, EXIT_INPUT);
    }

    #[test]
    fn horn_listing_sizes() {
        let o = go(&["horn", "2"]);
        assert_eq!(o.stdout.lines().count(), 1 + 3);
        let o = go(&["--json", "horn", "3"]);
        assert_eq!(json_of(&o)["result"]["count"], 12);
        let o = go(&["--json", "horn", "3", "--recursive"]);
        assert_eq!(json_of(&o)["result"]["count"], 12);
        assert_eq!(go(&["horn", "1"]).code, EXIT_INPUT);
    }

    #[test]
    fn hermitian_exit_codes() {
        assert_eq!(go(&["check", "hermitian", "1,0", "1,0", "2,0"]).code, EXIT_OK);
        assert_eq!(go(&["check", "hermitian", "1,0", "1,0", "1,1"]).code, EXIT_OK);
        let o = go(&["--json", "check", "hermitian", "1,0", "1,0", "3,-1"]);
        assert_eq!(o.code, EXIT_INFEASIBLE);
        assert_eq!(json_of(&o)["result"]["witness"]["kind"], "triple");
    }

    #[test]
    fn other_checks() {
        assert_eq!(go(&["check", "interlace", "1,0", "1", "2,0"]).code, EXIT_OK);
        assert_eq!(go(&["check", "interlace", "1,0", "1", "1.5,0.5"]).code, EXIT_OK);
        assert_eq!(go(&["check", "interlace", "1,0", "1", "3,-1"]).code, EXIT_INFEASIBLE);
        assert_eq!(go(&["check", "zero-sum", "1,-1", "1,-1"]).code, EXIT_OK);
        assert_eq!(go(&["check", "unitary", "0,0", "0,0", "0,0"]).code, EXIT_OK);
        assert_eq!(go(&["check", "simpson", "2,2,2", "1,1,1", "2"]).code, EXIT_OK);
        assert_eq!(go(&["check", "stability", "0,0", "0,0", "0,0"]).code, EXIT_OK);
        assert_eq!(go(&["check", "singular", "1,1", "1,1"]).code, EXIT_OK);
        assert_eq!(
            go(&["check", "singular", "2.718281828459045,0.36787944117144233", "1,1"]).code,
            EXIT_INFEASIBLE
        );
    }

    #[test]
    fn spectra_from_file() {
        let dir = std::env::temp_dir().join(format!("horn-spectra-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("s.json");
        std::fs::write(&path, "[[1,0],[1,0],[2,0]]").unwrap();
        let arg = format!("@{}", path.display());
        assert_eq!(go(&["check", "hermitian", &arg]).code, EXIT_OK);
        std::fs::write(&path, "[[0,1]]").unwrap();
        assert_eq!(go(&["check", "zero-sum", &arg]).code, EXIT_INPUT);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn sample_is_deterministic() {
        let args = [
            "--json", "sample", "sum", "1,0,-1", "2,0,0", "--trials", "40", "--seed", "5",
        ];
        let a = go(&args);
        let mut with_jobs = args.to_vec();
        with_jobs.extend(["--jobs", "3"]);
        let b = go(&with_jobs);
        assert_eq!(a.code, EXIT_OK);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(json_of(&a)["result"]["all_pass"], true);
    }

    #[test]
    fn help_goes_to_stdout() {
        let o = go(&["--help"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("horn"));
    }
}
