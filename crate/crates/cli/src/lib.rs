//! Command-line front end for `symquot`.
//!
//! Every subcommand produces a JSON document (`--format json`) with stable key
//! order, or a short text rendering. Exit codes: 0 success, 1 bad flags,
//! 2 invalid input or failed validation, 3 a `verify` mismatch.

mod output;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symquot::bwb::{bott, bwb_cohomology, schur_dim, BundleWeight, BwbResult, GLWeight};
use symquot::engine::{
    boissiere_diff, corrected_conjecture_rhs, deformation_summary, hh_series_product, hh_with_coefficients_sym,
    hs_sym, orbifold_hodge_age,
};
use symquot::geometry::{line_bundle_family, load_variety, preset_by_name, serre_family, VarietyData, PRESET_NAMES};
use symquot::quiver::{coxeter, hh_euler_characteristic, sym2_p1_cartan, sym2_p1_series, CartanMatrix};
use symquot::{AxisSystem, GradedDimension, MultiDegree};

pub use output::{graded_from_json, Report, VERSION};
pub use verify::SUITES;

/// Default series truncation.
pub const DEFAULT_MAX_N: usize = 6;
/// Default truncation for `verify`.
pub const DEFAULT_VERIFY_MAX_N: usize = 4;

#[derive(Parser)]
#[command(name = "symquot", version, about = "Hochschild and Hodge invariants of symmetric quotient stacks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in variety.
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
    /// Variety JSON file.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Range {
    /// A single number of points.
    #[arg(long, conflicts_with = "series")]
    n: Option<usize>,
    /// Generating series over all n up to --max-n (the default when --n is absent).
    #[arg(long)]
    series: bool,
    /// Series truncation.
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Hochschild-Serre cohomology HS_k of [Sym^n X].
    Hs {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        range: Range,
    },
    /// Hochschild homology of [Sym^n X] with coefficients in L^{[n]}.
    Hh {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LABEL", default_value = "O")]
        line_bundle: String,
        #[command(flatten)]
        range: Range,
    },
    /// Twisted Hodge numbers of Hilb^n S via the corrected product formula.
    HodgeHilb {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LABEL", default_value = "O")]
        line_bundle: String,
        #[command(flatten)]
        range: Range,
    },
    /// Monomials where the corrected and original product formulas differ.
    BoissiereDiff {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LABEL")]
        line_bundle: String,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Deformation invariants of Hilb^n S.
    Deformation {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Dimension of the Schur module of a dominant GL weight, e.g. 1,0,-1.
    SchurDim {
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        weight: String,
    },
    /// Borel-Weil-Bott on Gr(k, n+1) for S^{λ_S} S^∨ ⊗ S^{λ_Q} Q^∨.
    Bwb {
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        lambda_s: String,
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        lambda_q: String,
    },
    /// Cohomology of Ω^p(j) on P^n.
    Bott {
        #[arg(long)]
        p: usize,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[arg(long)]
        n: usize,
    },
    /// Coxeter matrix and Hochschild Euler characteristic of a Cartan matrix.
    Quiver {
        /// JSON array of rows; defaults to the Sym^2 P^1 algebra.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
        /// Restrict variety-dependent suites to one preset.
        #[arg(long, value_name = "NAME", conflicts_with = "input")]
        preset: Option<String>,
        /// Run variety-dependent suites on a variety JSON file.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_VERIFY_MAX_N)]
        max_n: usize,
    },
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&'static str> = SUITES.to_vec();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

enum Failure {
    Usage(String),
    Invalid(String),
    Mismatch(Report),
}

impl From<symquot::Error> for Failure {
    fn from(e: symquot::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{}", e.render());
                1
            };
        }
    };
    let (report, code) = match dispatch(&cli.command) {
        Ok(r) => (r, 0),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 1;
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
        Err(Failure::Mismatch(r)) => (r, 3),
    };
    let rendered = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.json).expect("json value")),
        Format::Text => report.text,
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &rendered).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(rendered.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return 2;
    }
    if code == 3 {
        if let Some(first) = report.json.get("first_mismatch").and_then(Value::as_str) {
            let _ = writeln!(err, "mismatch: {first}");
        }
    }
    code
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Hs { source, k, range } => hs(source, *k, range),
        Command::Hh { source, line_bundle, range } => hh(source, line_bundle, range),
        Command::HodgeHilb { source, line_bundle, range } => hodge_hilb(source, line_bundle, range),
        Command::BoissiereDiff { source, line_bundle, max_n } => diff(source, line_bundle, *max_n),
        Command::Deformation { source, n } => deformation(source, *n),
        Command::SchurDim { weight } => schur(weight),
        Command::Bwb { lambda_s, lambda_q } => bwb(lambda_s, lambda_q),
        Command::Bott { p, j, n } => bott_cmd(*p, *j, *n),
        Command::Quiver { input } => quiver(input.as_ref()),
        Command::Verify { suite, preset, input, max_n } => verify_cmd(suite, preset.as_deref(), input.as_ref(), *max_n),
    }
}

fn load(source: &Source) -> std::result::Result<(VarietyData, Value), Failure> {
    match (&source.preset, &source.input) {
        (Some(name), _) => {
            if !PRESET_NAMES.contains(&name.as_str()) {
                return Err(Failure::Usage(format!("unknown preset `{name}`; known: {}", PRESET_NAMES.join(", "))));
            }
            Ok((preset_by_name(name)?, json!({ "preset": name })))
        }
        (None, Some(path)) => Ok((load_variety(path)?, json!({ "input": path.display().to_string() }))),
        (None, None) => Err(Failure::Usage("one of --preset or --input is required".into())),
    }
}

enum Mode {
    Single(usize),
    Series(usize),
}

impl Range {
    fn mode(&self) -> std::result::Result<Mode, Failure> {
        match (self.n, self.max_n) {
            (Some(n), Some(max)) if max < n => Err(Failure::Usage(format!("--max-n {max} is smaller than --n {n}"))),
            (Some(n), _) => Ok(Mode::Single(n)),
            (None, max) => Ok(Mode::Series(max.unwrap_or(DEFAULT_MAX_N))),
        }
    }
}

fn truncation(mode: &Mode) -> Value {
    match mode {
        Mode::Single(n) => json!({ "n": n }),
        Mode::Series(max) => json!({ "max_n": max }),
    }
}

fn graded_report(command: &str, inputs: Value, mode: &Mode, g: &GradedDimension, vars: &[&str], title: String) -> Report {
    let json = Value::Object(output::envelope(command, inputs, truncation(mode), g));
    let text = match mode {
        Mode::Single(n) => format!("{title}, n = {n}\n{}", output::breakdown_text(g, vars)),
        Mode::Series(max) => format!(
            "{title}, n <= {max}\n{}degrees ({}):\n{}",
            output::series_text(g, *max, vars),
            g.axes().names().join(","),
            output::terms_text(g)
        ),
    };
    Report { json, text }
}

fn hs(source: &Source, k: i64, range: &Range) -> Outcome {
    let (x, mut inputs) = load(source)?;
    inputs["k"] = json!(k);
    let mode = range.mode()?;
    let g = match mode {
        Mode::Single(n) => hs_sym(&x, k, n)?.dims,
        Mode::Series(max) => hh_series_product(&serre_family(&x, k, max)?, max)?,
    };
    Ok(graded_report("hs", inputs, &mode, &g, &["t"], format!("HS_{k}(Sym^n {})", x.name())))
}

fn hh(source: &Source, label: &str, range: &Range) -> Outcome {
    let (x, mut inputs) = load(source)?;
    inputs["line_bundle"] = json!(label);
    let mode = range.mode()?;
    let g = match mode {
        Mode::Single(n) => hh_with_coefficients_sym(&line_bundle_family(&x, label, n)?, n)?.dims,
        Mode::Series(max) => hh_series_product(&line_bundle_family(&x, label, max)?, max)?,
    };
    Ok(graded_report("hh", inputs, &mode, &g, &["t"], format!("HH_*(Sym^n {}, {label})", x.name())))
}

fn hodge_hilb(source: &Source, label: &str, range: &Range) -> Outcome {
    let (x, mut inputs) = load(source)?;
    inputs["line_bundle"] = json!(label);
    let mode = range.mode()?;
    let g = match mode {
        Mode::Single(n) => orbifold_hodge_age(&line_bundle_family(&x, label, n)?, n)?.dims,
        Mode::Series(max) => corrected_conjecture_rhs(&line_bundle_family(&x, label, max)?, max)?,
    };
    Ok(graded_report("hodge-hilb", inputs, &mode, &g, &["x", "y"], format!("h^(p,q)(Hilb^n {}, {label})", x.name())))
}

fn diff(source: &Source, label: &str, max_n: usize) -> Outcome {
    let (x, mut inputs) = load(source)?;
    inputs["line_bundle"] = json!(label);
    let f = line_bundle_family(&x, label, max_n)?;
    let entries = boissiere_diff(&f, max_n)?;
    let mut text = format!("{} {label}, t <= {max_n}: {} differing monomials (corrected vs original)\n", x.name(), entries.len());
    let mut rows = Vec::new();
    for e in &entries {
        text.push_str(&format!("  {}: {} vs {}\n", e.monomial, e.corrected, e.original));
        rows.push(json!({
            "degree": e.degree.to_string(),
            "monomial": e.monomial,
            "corrected": output::big(&e.corrected),
            "original": output::big(&e.original),
        }));
    }
    let json = json!({
        "command": "boissiere-diff",
        "version": VERSION,
        "inputs": inputs,
        "truncation": { "max_n": max_n },
        "axes": ["x", "y", "t"],
        "differences": rows,
    });
    Ok(Report { json, text })
}

fn deformation(source: &Source, n: usize) -> Outcome {
    let (x, mut inputs) = load(source)?;
    inputs["n"] = json!(n);
    let s = deformation_summary(&x, n)?;
    let fields = [
        ("h0_tangent", &s.h0_tangent),
        ("h1_structure", &s.h1_structure),
        ("h1_tangent", &s.h1_tangent),
        ("h2_structure", &s.h2_structure),
        ("h0_bivectors", &s.h0_bivectors),
        ("engine_hh1", &s.engine_hh1),
        ("engine_hh2", &s.engine_hh2),
    ];
    let mut text = format!("Hilb^{n} {}\n", x.name());
    let mut values = serde_json::Map::new();
    for (k, v) in fields {
        text.push_str(&format!("  {k}: {v}\n"));
        values.insert(k.into(), output::big(v));
    }
    text.push_str(&format!("  consistent: {}\n", s.consistent()));
    let json = json!({
        "command": "deformation",
        "version": VERSION,
        "inputs": inputs,
        "values": values,
        "consistent": s.consistent(),
    });
    if !s.consistent() {
        return Err(Failure::Invalid(format!("deformation summary disagrees with the engine: {text}")));
    }
    Ok(Report { json, text })
}

fn parse_weight(s: &str, flag: &str) -> std::result::Result<Vec<i64>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("{flag}: bad weight `{s}`"))))
        .collect()
}

fn schur(weight: &str) -> Outcome {
    let w = parse_weight(weight, "--weight")?;
    let d = schur_dim(&GLWeight(w.clone()))?;
    let json = json!({ "command": "schur-dim", "version": VERSION, "inputs": { "weight": w }, "dimension": output::big(&d) });
    Ok(Report { json, text: format!("dim S_{w:?} = {d}\n") })
}

fn bwb(lambda_s: &str, lambda_q: &str) -> Outcome {
    let s = parse_weight(lambda_s, "--lambda-s")?;
    let q = parse_weight(lambda_q, "--lambda-q")?;
    if s.is_empty() || q.is_empty() {
        return Err(Failure::Usage("both --lambda-s and --lambda-q need at least one entry".into()));
    }
    let n = s.len() + q.len() - 1;
    let w = BundleWeight::new(s.clone(), q.clone());
    let inputs = json!({ "lambda_s": s, "lambda_q": q, "grassmannian": format!("Gr({}, {})", s.len(), n + 1) });
    let (json, text) = match bwb_cohomology(&w, n)? {
        BwbResult::Zero => (
            json!({ "command": "bwb", "version": VERSION, "inputs": inputs, "acyclic": true }),
            "all cohomology vanishes\n".to_string(),
        ),
        BwbResult::Cohomology { degree, weight } => {
            let d = schur_dim(&weight)?;
            (
                json!({
                    "command": "bwb",
                    "version": VERSION,
                    "inputs": inputs,
                    "acyclic": false,
                    "degree": degree,
                    "weight": weight.0,
                    "dimension": output::big(&d),
                }),
                format!("H^{degree} = S_{:?} V, dimension {d}\n", weight.0),
            )
        }
    };
    Ok(Report { json, text })
}

fn bott_cmd(p: usize, j: i64, n: usize) -> Outcome {
    let h = bott(p, j, n)?;
    let mut dims = serde_json::Map::new();
    let mut text = format!("H^q(P^{n}, Omega^{p}({j}))\n");
    for (q, v) in &h {
        dims.insert(q.to_string(), output::big(v));
        text.push_str(&format!("  q = {q}: {v}\n"));
    }
    if h.is_empty() {
        text.push_str("  all cohomology vanishes\n");
    }
    let json = json!({ "command": "bott", "version": VERSION, "inputs": { "p": p, "j": j, "n": n }, "axes": ["q"], "dims": dims });
    Ok(Report { json, text })
}

fn quiver(input: Option<&PathBuf>) -> Outcome {
    let (a, source) = match input {
        None => (sym2_p1_cartan(), json!("sym2_p1")),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            (CartanMatrix::new(rows)?, json!(path.display().to_string()))
        }
    };
    let c = coxeter(&a)?;
    let trace: i64 = (0..c.len()).map(|i| c[i][i]).sum();
    let chi = hh_euler_characteristic(&a)?;
    let mut json = json!({
        "command": "quiver",
        "version": VERSION,
        "inputs": { "cartan": source },
        "coxeter": c,
        "trace": trace,
        "euler_characteristic": chi,
    });
    let mut text = format!("tr C = {trace}\nchi(HH) = {chi}\n");
    if input.is_none() {
        let series = sym2_p1_series()?;
        json["series"] = Value::Array(series.iter().map(output::big).collect());
        let g = GradedDimension::from_terms(
            AxisSystem::hochschild(),
            series.iter().enumerate().map(|(j, v)| (MultiDegree::new(vec![j as i64]), v.clone())),
        )?;
        text.push_str(&format!("HH = {}\n", g.to_polynomial_string(&["t"])));
    }
    Ok(Report { json, text })
}

fn verify_cmd(suite: &str, preset: Option<&str>, input: Option<&PathBuf>, max_n: usize) -> Outcome {
    let (varieties, names) = match (preset, input) {
        (_, Some(path)) => {
            let x = load_variety(path)?;
            let name = x.name().to_string();
            (vec![x], vec![name])
        }
        (Some(p), None) => {
            let source = Source { preset: Some(p.to_string()), input: None };
            (vec![load(&source)?.0], vec![p.to_string()])
        }
        (None, None) => {
            let all = PRESET_NAMES.iter().map(|n| preset_by_name(n)).collect::<symquot::Result<Vec<_>>>()?;
            (all, PRESET_NAMES.iter().map(|n| n.to_string()).collect())
        }
    };
    let outcomes = verify::run_suite(suite, &varieties, max_n)?;
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).collect();
    let mut text = String::new();
    for o in &outcomes {
        if !o.passed() {
            text.push_str(&format!("{o}\n"));
        }
    }
    text.push_str(&format!("{suite}: {} checks, {} failed\n", outcomes.len(), failed.len()));
    let first = failed.first().map(|o| o.to_string());
    let json = json!({
        "command": "verify",
        "version": VERSION,
        "inputs": { "suite": suite, "varieties": names },
        "truncation": { "max_n": max_n },
        "checks": outcomes.len(),
        "failed": failed.len(),
        "first_mismatch": first,
    });
    let report = Report { json, text };
    if failed.is_empty() {
        Ok(report)
    } else {
        Err(Failure::Mismatch(report))
    }
}

