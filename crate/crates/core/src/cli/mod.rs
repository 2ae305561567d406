//! Command-line front end. `run` is the whole program; `main` only forwards to it.

pub mod doc;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand};
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::classes::{is_column_sufficient_with, is_m, is_nondegenerate, is_p, is_z};
use crate::csw::{
    check_column_ndw_def_with, check_cone_csw_with, check_csw_with, check_x_column_sufficiency_with,
    verify_csw_witness, verify_ndw_witness, CswOptions,
};
use crate::error::{Error, Result};
use crate::harness::{gen_instance, gen_tuple, golden_suite_with, sub_seed, verify_theorem_with, GenSpec, Oracles};
use crate::harness::theorems::GOLDEN_ID;
use crate::ratcore::{det, inverse};
use crate::representatives::{
    check_column_ndw_det_with, check_column_w0_with, check_column_w_with, representative_matrix, MatrixTuple,
    RepOptions,
};
use crate::solver::{is_solution, solve_all, solve_m_fast, EhlcpInstance};
use crate::verdict::{PropertyVerdict, Witness};
use crate::RatMatrix;
use doc::{csw_verdict_json, piece_json, solution_json, theorem_report_json, verdict_json, InstanceDocument};

pub const PROPS: [&str; 12] = [
    "column_w",
    "column_w0",
    "column_ndw",
    "column_ndw_def",
    "csw",
    "cone_csw",
    "x_col_suff",
    "z",
    "m",
    "p",
    "nondegenerate",
    "column_sufficient",
];

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "ehlcp", version, about = "Exact column-property checks and an exact solver for the extended horizontal LCP")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run property oracles on an instance file's matrix tuple.
    Check(CheckArgs),
    /// Solve an instance by branch enumeration.
    Solve(SolveArgs),
    /// Run a randomized theorem suite.
    Verify(VerifyArgs),
    /// Generate an instance file.
    Gen(GenArgs),
    /// Re-derive every verdict in a report and compare.
    Recheck(RecheckArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Re-derive the report in-process and record whether it agrees.
    #[arg(long)]
    recheck: bool,
    /// Include wall-clock timing (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
    /// Also write the report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_delimiter = ',', required = true, value_parser = PossibleValuesParser::new(PROPS))]
    props: Vec<String>,
    /// Scan every column representative and list all violations.
    #[arg(long)]
    exhaustive: bool,
    /// Lift the column-representative cap.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    file: PathBuf,
    /// With --fast-m, run the full enumeration as well and compare.
    #[arg(long)]
    all: bool,
    /// Try the M-matrix closed form first.
    #[arg(long = "fast-m")]
    fast_m: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value = "generic")]
    family: String,
    /// Entries are drawn from {-B, ..., B}.
    #[arg(long = "entry-range", default_value_t = 2)]
    entry_range: i64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long = "entry-range", default_value_t = 2)]
    entry_range: i64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct RecheckArgs {
    #[arg(long)]
    report: PathBuf,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Internal(_) => EXIT_INVARIANT,
        _ => EXIT_INPUT,
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Runs the program on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, oracles: &Oracles) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(cli.command, echo, oracles) {
        Ok((report, code)) => {
            let _ = out.write_all(render(&report).as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn header(command: &str, echo: Vec<String>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("args".into(), json!(echo));
    m.insert("tool".into(), json!("ehlcp"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m
}

fn finish(mut report: Map<String, Value>, common: &Common, started: Instant, oracles: &Oracles) -> Result<(Value, i32)> {
    let mut code = EXIT_OK;
    if common.recheck {
        let summary = recheck_report(&Value::Object(report.clone()), oracles)?;
        if summary["agree"] != json!(true) || summary["witnesses_valid"] != json!(true) {
            code = EXIT_INVARIANT;
        }
        report.insert("recheck".into(), summary);
    }
    if common.timing {
        report.insert("timing".into(), json!({"elapsed_ms": started.elapsed().as_millis() as u64}));
    }
    let report = Value::Object(report);
    if let Some(path) = &common.out {
        write_file(path, &render(&report))?;
    }
    Ok((report, code))
}

fn dispatch(command: Command, echo: Vec<String>, oracles: &Oracles) -> Result<(Value, i32)> {
    let started = Instant::now();
    match command {
        Command::Check(a) => {
            let doc = InstanceDocument::parse(&read_file(&a.file)?)?;
            let inst = doc.to_instance()?;
            let csw_opts = CswOptions::from_env()?;
            let rep_opts = RepOptions { exhaustive: a.exhaustive, force: a.force };
            let verdicts = evaluate_props(inst.tuple(), &a.props, &rep_opts, &csw_opts)?;
            let mut r = header("check", echo);
            r.insert("instance".into(), doc.to_json());
            r.insert("props".into(), json!(a.props));
            r.insert("options".into(), options_json(&rep_opts, &csw_opts));
            r.insert("verdicts".into(), Value::Array(verdicts.into_iter().map(|(v, _)| v).collect()));
            finish(r, &a.common, started, oracles)
        }
        Command::Solve(a) => {
            let doc = InstanceDocument::parse(&read_file(&a.file)?)?;
            let inst = doc.to_instance()?;
            let mut r = header("solve", echo);
            r.insert("instance".into(), doc.to_json());
            r.insert("flags".into(), json!({"all": a.all, "fast_m": a.fast_m}));
            for (key, value) in solve_fields(&inst, a.fast_m, a.all)? {
                r.insert(key, value);
            }
            finish(r, &a.common, started, oracles)
        }
        Command::Verify(a) => {
            let spec = GenSpec::new(a.n, a.k, a.family.parse()?, a.entry_range, a.seed);
            let mut r = header("verify", echo);
            r.insert("seed".into(), json!(a.seed));
            r.insert("theorem_id".into(), json!(a.theorem));
            r.insert("spec".into(), spec_json(&spec, a.trials));
            let report = run_suite(&a.theorem, a.trials, &spec, oracles)?;
            let passed = report["passed"] == json!(true);
            r.insert("report".into(), report);
            let (value, code) = finish(r, &a.common, started, oracles)?;
            Ok((value, if passed { code } else { EXIT_INVARIANT }))
        }
        Command::Gen(a) => {
            let spec = GenSpec::new(a.n, a.k, a.family.parse()?, a.entry_range, a.seed);
            let doc = gen_document(&spec)?;
            write_file(&a.out, &render(&doc))?;
            let mut r = header("gen", echo);
            r.insert("seed".into(), json!(a.seed));
            r.insert("spec".into(), spec_json(&spec, 0));
            r.insert("out".into(), json!(a.out.display().to_string()));
            r.insert("instance".into(), doc);
            Ok((Value::Object(r), EXIT_OK))
        }
        Command::Recheck(a) => {
            let text = read_file(&a.report)?;
            let report: Value =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid report JSON: {e}")))?;
            let summary = recheck_report(&report, oracles)?;
            let ok = summary["agree"] == json!(true) && summary["witnesses_valid"] == json!(true);
            let mut r = header("recheck", echo);
            r.insert("report".into(), json!(a.report.display().to_string()));
            r.insert("result".into(), summary);
            Ok((Value::Object(r), if ok { EXIT_OK } else { EXIT_INVARIANT }))
        }
    }
}

fn options_json(rep: &RepOptions, csw: &CswOptions) -> Value {
    json!({"exhaustive": rep.exhaustive, "force": rep.force, "max_pattern_components": csw.max_components})
}

fn spec_json(spec: &GenSpec, trials: usize) -> Value {
    json!({
        "n": spec.n,
        "k": spec.k,
        "family": spec.family.as_str(),
        "entry_range": spec.entry_range,
        "seed": spec.seed,
        "trials": trials,
    })
}

fn spec_from_json(v: &Value) -> Result<(GenSpec, usize)> {
    let field = |key: &str| v.get(key).and_then(Value::as_u64).ok_or_else(|| Error::Parse(format!("report spec lacks `{key}`")));
    let family = v.get("family").and_then(Value::as_str).ok_or_else(|| Error::Parse("report spec lacks `family`".into()))?;
    let range = v.get("entry_range").and_then(Value::as_i64).ok_or_else(|| Error::Parse("report spec lacks `entry_range`".into()))?;
    let spec = GenSpec::new(field("n")? as usize, field("k")? as usize, family.parse()?, range, field("seed")?);
    Ok((spec, field("trials")? as usize))
}

/// Tuple from `spec.seed`, instance from the first sub-seed.
pub fn gen_document(spec: &GenSpec) -> Result<Value> {
    let tuple = gen_tuple(spec)?;
    let inst = gen_instance(&tuple, sub_seed(spec.seed, 0), spec.entry_range)?;
    Ok(InstanceDocument::from_instance(&inst).to_json())
}

fn run_suite(id: &str, trials: usize, spec: &GenSpec, oracles: &Oracles) -> Result<Value> {
    let report = if id == GOLDEN_ID { golden_suite_with(oracles)? } else { verify_theorem_with(id, trials, spec, oracles)? };
    Ok(theorem_report_json(&report))
}

/// Each verdict's JSON paired with whether its witness re-checks independently.
fn evaluate_props(
    t: &MatrixTuple,
    props: &[String],
    rep: &RepOptions,
    csw: &CswOptions,
) -> Result<Vec<(Value, bool)>> {
    let mut out = Vec::new();
    let k = t.k();
    for prop in props {
        match prop.as_str() {
            "column_w" | "column_w0" | "column_ndw" => {
                let v = match prop.as_str() {
                    "column_w" => check_column_w_with(t, rep)?,
                    "column_w0" => check_column_w0_with(t, rep)?,
                    _ => check_column_ndw_det_with(t, rep)?,
                };
                let ok = tuple_witness_ok(t, &v)?;
                out.push((verdict_json(&v, "tuple", None), ok));
            }
            "column_ndw_def" => {
                let v = check_column_ndw_def_with(t, csw)?;
                let ok = match &v.witness {
                    None => v.holds,
                    Some(Witness::Vectors { xs, .. }) => verify_ndw_witness(t, xs),
                    Some(_) => false,
                };
                out.push((verdict_json(&v, "tuple", None), ok));
            }
            "csw" | "cone_csw" => {
                let cone = prop == "cone_csw";
                let v = if cone { check_cone_csw_with(t, csw)? } else { check_csw_with(t, csw)? };
                let ok = v.witness.as_ref().map_or(v.holds, |w| verify_csw_witness(t, &w.xs, cone));
                out.push((csw_verdict_json(&v, prop, "tuple"), ok));
            }
            "x_col_suff" => {
                for i in 0..k {
                    let v = check_x_column_sufficiency_with(t.mat(i), t.mat(i + 1), csw)?;
                    let pair = MatrixTuple::new(vec![t.mat(i).clone(), t.mat(i + 1).clone()])?;
                    let ok = pair_witness_ok(&pair, &v);
                    out.push((verdict_json(&v, &format!("(C{i},C{})", i + 1), None), ok));
                }
            }
            _ => {
                for (i, m) in t.mats().iter().enumerate() {
                    let v = match prop.as_str() {
                        "z" => is_z(m)?,
                        "m" => is_m(m)?,
                        "p" => is_p(m)?,
                        "nondegenerate" => is_nondegenerate(m)?,
                        "column_sufficient" => is_column_sufficient_with(m, csw)?,
                        other => return Err(Error::Invalid(format!("unknown property `{other}`"))),
                    };
                    let ok = matrix_witness_ok(m, &v)?;
                    out.push((verdict_json(&v, &format!("C{i}"), None), ok));
                }
            }
        }
    }
    Ok(out)
}

fn tuple_witness_ok(t: &MatrixTuple, v: &PropertyVerdict) -> Result<bool> {
    let Some(w) = &v.witness else { return Ok(v.holds) };
    Ok(match w {
        Witness::Selector { selector, det: d } => det(&representative_matrix(t, selector)?)? == *d,
        Witness::OppositeSigns { first, first_det, second, second_det } => {
            let a = det(&representative_matrix(t, first)?)?;
            let b = det(&representative_matrix(t, second)?)?;
            a == *first_det && b == *second_det && (a.is_positive() && b.is_negative() || a.is_negative() && b.is_positive())
        }
        _ => false,
    })
}

fn pair_witness_ok(pair: &MatrixTuple, v: &PropertyVerdict) -> bool {
    match &v.witness {
        None => v.holds,
        Some(Witness::Vectors { xs, .. }) => verify_csw_witness(pair, xs, false),
        Some(_) => false,
    }
}

fn matrix_witness_ok(m: &RatMatrix, v: &PropertyVerdict) -> Result<bool> {
    let Some(w) = &v.witness else { return Ok(v.holds) };
    Ok(match w {
        Witness::Entry { row, col, value } => row != col && m.get(*row, *col) == value && value.is_positive(),
        Witness::InverseEntry { row, col, value } => {
            inverse(m)?.is_some_and(|inv| inv.get(*row, *col) == value) && value.is_negative()
        }
        Witness::Singular => det(m)?.is_zero(),
        Witness::PrincipalMinor { index_set, value } => det(&m.submatrix(index_set, index_set)?)? == *value,
        Witness::Vectors { xs, .. } => {
            let pair = MatrixTuple::new(vec![RatMatrix::identity(m.n_rows()), m.clone()])?;
            verify_csw_witness(&pair, xs, false)
        }
        _ => false,
    })
}

fn solve_fields(inst: &EhlcpInstance, fast_m: bool, all: bool) -> Result<Vec<(String, Value)>> {
    let mut fields = Vec::new();
    let fast = if fast_m { solve_m_fast(inst)? } else { None };
    if fast_m {
        fields.push(("fast_m_applicable".to_string(), json!(fast.is_some())));
    }
    let enumerate = fast.is_none() || all;
    let pieces = if enumerate { Some(solve_all(inst)?) } else { None };
    for p in pieces.iter().flatten() {
        if !is_solution(inst, &p.point)? {
            return Err(Error::Internal(format!("branch {} returned a non-solution", p.pattern)));
        }
    }
    match (&fast, &pieces) {
        (Some(x), _) => {
            fields.push(("path".into(), json!("fast_m")));
            fields.push((
                "pieces".into(),
                json!([{
                    "pattern": Value::Null,
                    "point": solution_json(x),
                    "piece_dimension": 0,
                    "kernel_basis": [],
                    "branch_kernel_dimension": 0,
                }]),
            ));
            if let Some(ps) = &pieces {
                let agrees = ps.len() == 1 && ps[0].piece_dimension == 0 && ps[0].point == *x;
                fields.push(("enumeration_pieces".into(), Value::Array(ps.iter().map(piece_json).collect())));
                fields.push(("fast_m_agrees".into(), json!(agrees)));
            }
        }
        (None, Some(ps)) => {
            fields.push(("path".into(), json!("enumeration")));
            fields.push(("pieces".into(), Value::Array(ps.iter().map(piece_json).collect())));
        }
        (None, None) => unreachable!("enumeration runs whenever the fast path is absent"),
    }
    Ok(fields)
}

fn flag(v: &Value, key: &str) -> bool {
    v.get(key).and_then(Value::as_bool).unwrap_or(false)
}

/// Re-derives a report's verdicts, pieces or suite results and compares them exactly.
pub fn recheck_report(report: &Value, oracles: &Oracles) -> Result<Value> {
    let command = report.get("command").and_then(Value::as_str).ok_or_else(|| Error::Parse("report lacks `command`".into()))?;
    let instance = || -> Result<InstanceDocument> {
        InstanceDocument::from_json(report.get("instance").ok_or_else(|| Error::Parse("report lacks `instance`".into()))?)
    };
    let mut mismatches: Vec<String> = Vec::new();
    let mut compare = |key: &str, fresh: &Value| {
        if report.get(key) != Some(fresh) {
            mismatches.push(key.to_string());
        }
    };
    let mut witnesses_checked = 0usize;
    let mut witnesses_valid = true;
    match command {
        "check" => {
            let doc = instance()?;
            let inst = doc.to_instance()?;
            let props: Vec<String> = report
                .get("props")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("report lacks `props`".into()))?
                .iter()
                .map(|p| p.as_str().map(str::to_string).ok_or_else(|| Error::Parse("non-string prop".into())))
                .collect::<Result<_>>()?;
            let opts = report.get("options").cloned().unwrap_or(Value::Null);
            let rep = RepOptions { exhaustive: flag(&opts, "exhaustive"), force: flag(&opts, "force") };
            let mut csw = CswOptions::default();
            if let Some(c) = opts.get("max_pattern_components").and_then(Value::as_u64) {
                csw.max_components = c as usize;
            }
            let verdicts = evaluate_props(inst.tuple(), &props, &rep, &csw)?;
            witnesses_checked = verdicts.len();
            witnesses_valid = verdicts.iter().all(|(_, ok)| *ok);
            compare("verdicts", &Value::Array(verdicts.into_iter().map(|(v, _)| v).collect()));
        }
        "solve" => {
            let doc = instance()?;
            let inst = doc.to_instance()?;
            let flags = report.get("flags").cloned().unwrap_or(Value::Null);
            for (key, value) in solve_fields(&inst, flag(&flags, "fast_m"), flag(&flags, "all"))? {
                compare(&key, &value);
            }
        }
        "verify" => {
            let (spec, trials) = spec_from_json(report.get("spec").ok_or_else(|| Error::Parse("report lacks `spec`".into()))?)?;
            let id = report.get("theorem_id").and_then(Value::as_str).ok_or_else(|| Error::Parse("report lacks `theorem_id`".into()))?;
            compare("report", &run_suite(id, trials, &spec, oracles)?);
        }
        "gen" => {
            let (spec, _) = spec_from_json(report.get("spec").ok_or_else(|| Error::Parse("report lacks `spec`".into()))?)?;
            compare("instance", &gen_document(&spec)?);
        }
        other => return Err(Error::Parse(format!("cannot recheck a `{other}` report"))),
    }
    Ok(json!({
        "agree": mismatches.is_empty(),
        "mismatches": mismatches,
        "witnesses_checked": witnesses_checked,
        "witnesses_valid": witnesses_valid,
    }))
}
