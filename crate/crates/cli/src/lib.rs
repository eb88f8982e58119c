//! Command-line front end for the qcpaul catalog, evaluator and rewriter.
//!
//! [`run_with`] does all the work and writes to caller-supplied streams so
//! the binary stays a thin wrapper and tests can drive it in-process.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use qcpaul::catalog::{self, VerificationReport, DEFAULT_SEED};
use qcpaul::qft::{self, QftForm};
use qcpaul::rewrite::{self, Conversion, Site};
use qcpaul::{evaluate, parse, to_text, Circuit, ComplexMatrix, EvalResult};

/// Default verification tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Environment variable holding the default tolerance.
pub const TOL_ENV: &str = "QCPAUL_TOL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Operations that are not window rules but can be named with `--rule`.
pub const EXTRA_OPS: [(&str, &str); 2] = [
    ("lower-n3-cnot", "n³-controlled NOT as four n²-controlled NOTs on a borrowed wire"),
    ("nearest-neighbour", "every CNOT replaced by CNOTs on adjacent wires (ignores --at)"),
];

#[derive(Parser, Debug)]
#[command(name = "qcpaul", version, about = "Verify, evaluate and rewrite Pauli-algebra circuit identities")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalOpts {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Absolute tolerance (default: $QCPAUL_TOL or 1e-10).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for sampled parameters; decimal or 0x-prefixed hex.
    #[arg(long, global = true, value_parser = parse_seed)]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalog identities or rewrite rules.
    List {
        #[arg(value_enum)]
        what: ListWhat,
    },
    /// Check identities numerically.
    Verify {
        #[arg(long, conflicts_with = "id")]
        all: bool,
        #[arg(long)]
        id: Option<String>,
        /// Report wall time per identity (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate a circuit file to its matrix.
    Eval { file: PathBuf },
    /// Apply a rewrite rule or conversion at an element index.
    Rewrite {
        file: PathBuf,
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = 0)]
        at: usize,
        /// Spare wire for conversions and n³ lowering; picked automatically if absent.
        #[arg(long)]
        ancilla: Option<String>,
        /// Outcome bits k,j1,j2 for cnot-to-2meas.
        #[arg(long, value_delimiter = ',', default_value = "0,0,0")]
        bits: Vec<u8>,
    },
    /// Emit a QFT circuit.
    Qft {
        #[arg(long)]
        nb: usize,
        #[arg(long, default_value = "123", value_parser = ["123", "321"])]
        form: String,
        /// Compare the circuit against the DFT matrix.
        #[arg(long)]
        check: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListWhat {
    Identities,
    Rules,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

/// Resolved settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub tolerance: f64,
    pub json: bool,
    pub seed: u64,
}

impl CliConfig {
    /// `--tol` wins over the environment value, which wins over the default.
    pub fn resolve(opts: &GlobalOpts, env_tol: Option<&str>) -> Result<Self, String> {
        let tolerance = match (opts.tol, env_tol) {
            (Some(t), _) => t,
            (None, Some(s)) => s.trim().parse().map_err(|e| format!("invalid {TOL_ENV} `{s}`: {e}"))?,
            (None, None) => DEFAULT_TOL,
        };
        if tolerance.is_nan() || tolerance < 0.0 {
            return Err(format!("tolerance must be non-negative, got {tolerance}"));
        }
        Ok(Self { tolerance, json: opts.json, seed: opts.seed.unwrap_or(DEFAULT_SEED) })
    }
}

/// Deviation with three significant digits in scientific notation.
pub fn fmt_dev(d: f64) -> String {
    format!("{d:.2e}")
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

/// The verification report document. Keys appear in a fixed order and
/// deviations keep three significant digits; a non-finite deviation is
/// `null`. `ms` is zero unless `timing` is set.
pub fn report_json(reports: &[VerificationReport], tolerance: f64, seed: u64, timing: bool) -> String {
    let mut out = String::from("{\n");
    out += &format!("  \"tolerance\": {tolerance:e},\n");
    out += &format!("  \"seed\": {seed},\n");
    out += "  \"results\": [";
    for (i, r) in reports.iter().enumerate() {
        let dev = if r.max_deviation.is_finite() { fmt_dev(r.max_deviation) } else { "null".into() };
        let ms = if timing { r.elapsed.as_millis() } else { 0 };
        out += if i == 0 { "\n" } else { ",\n" };
        out += &format!(
            "    {{\"id\": {}, \"citation\": {}, \"points\": {}, \"max_deviation\": {}, \"pass\": {}, \"ms\": {}}}",
            json_str(&r.id),
            json_str(&r.citation),
            r.points,
            dev,
            r.pass,
            ms
        );
    }
    if !reports.is_empty() {
        out += "\n  ";
    }
    out += "],\n";
    out += &format!("  \"all_pass\": {}\n}}\n", reports.iter().all(|r| r.pass));
    out
}

fn report_line(r: &VerificationReport, timing: bool) -> String {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let mut line = format!("{verdict}  {:<24} points={:<4} max_dev={}", r.id, r.points, fmt_dev(r.max_deviation));
    if timing {
        line += &format!(" ms={}", r.elapsed.as_millis());
    }
    if let Some(e) = &r.error {
        line += &format!("  error: {e}");
    }
    line
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

/// `{"rows", "cols", "in_wires", "out_wires", "matrix"}` with entries as
/// `[re, im]` pairs.
pub fn eval_json(r: &EvalResult) -> Value {
    let m = &r.matrix;
    let rows: Vec<Value> = (0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| complex_json(m.get(i, j))).collect())).collect();
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "in_wires": r.in_wires.iter().collect::<Vec<_>>(),
        "out_wires": r.out_wires.iter().collect::<Vec<_>>(),
        "matrix": rows,
    })
}

fn eval_text(r: &EvalResult) -> String {
    format!("in: {}\nout: {}\n{}\n", r.in_wires, r.out_wires, r.matrix)
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "qcpaul: {msg}");
        code
    }
}

fn read_circuit(path: &Path) -> Result<Circuit, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Parse `args` (including the program name) and run. Returns the exit code.
pub fn run_with<I, S>(args: I, env_tol: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(io.out, "{text}") } else { write!(io.err, "{text}") };
            return code;
        }
    };
    let cfg = match CliConfig::resolve(&cli.global, env_tol) {
        Ok(c) => c,
        Err(e) => return io.fail(EXIT_USAGE, e),
    };
    match cli.command {
        Command::List { what } => list(&mut io, &cfg, what),
        Command::Verify { all, id, timing } => verify(&mut io, &cfg, all, id.as_deref(), timing),
        Command::Eval { file } => eval(&mut io, &cfg, &file),
        Command::Rewrite { file, rule, at, ancilla, bits } => rewrite_cmd(&mut io, &cfg, &file, &rule, at, ancilla.as_deref(), &bits),
        Command::Qft { nb, form, check } => qft_cmd(&mut io, &cfg, nb, &form, check),
    }
}

/// Run with the process arguments and environment.
pub fn run() -> i32 {
    let env = std::env::var(TOL_ENV).ok();
    run_with(std::env::args_os(), env.as_deref(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn list(io: &mut Io, cfg: &CliConfig, what: ListWhat) -> i32 {
    let rows: Vec<(String, String)> = match what {
        ListWhat::Identities => catalog::list_identities().iter().map(|i| (i.id.to_string(), i.citation.to_string())).collect(),
        ListWhat::Rules => {
            let mut v: Vec<(String, String)> = rewrite::rules().iter().map(|r| (r.id.to_string(), r.summary.to_string())).collect();
            let convs = Conversion::IDS.iter().filter(|id| rewrite::find_rule(id).is_err());
            v.extend(convs.map(|id| (id.to_string(), "measurement conversion".to_string())));
            v.extend(EXTRA_OPS.iter().map(|(id, s)| (id.to_string(), s.to_string())));
            v
        }
    };
    let written = if cfg.json {
        let arr: Vec<Value> = rows.iter().map(|(id, d)| json!({"id": id, "description": d})).collect();
        writeln!(io.out, "{}", serde_json::to_string_pretty(&arr).expect("serializes"))
    } else {
        rows.iter().try_for_each(|(id, d)| writeln!(io.out, "{id:<24} {d}"))
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => io.fail(EXIT_FAIL, e),
    }
}

fn verify(io: &mut Io, cfg: &CliConfig, all: bool, id: Option<&str>, timing: bool) -> i32 {
    let reports = match (all, id) {
        (_, Some(id)) => match catalog::verify_with_seed(id, cfg.tolerance, cfg.seed) {
            Ok(r) => vec![r],
            Err(e) => return io.fail(EXIT_USAGE, e),
        },
        (true, None) => catalog::verify_all(cfg.tolerance, cfg.seed),
        (false, None) => return io.fail(EXIT_USAGE, "verify needs --all or --id ID"),
    };
    let all_pass = reports.iter().all(|r| r.pass);
    let written = if cfg.json {
        write!(io.out, "{}", report_json(&reports, cfg.tolerance, cfg.seed, timing))
    } else {
        let passed = reports.iter().filter(|r| r.pass).count();
        reports
            .iter()
            .try_for_each(|r| writeln!(io.out, "{}", report_line(r, timing)))
            .and_then(|()| writeln!(io.out, "{passed}/{} identities pass at tolerance {:e}", reports.len(), cfg.tolerance))
    };
    if let Err(e) = written {
        return io.fail(EXIT_FAIL, e);
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn eval(io: &mut Io, cfg: &CliConfig, file: &Path) -> i32 {
    let circ = match read_circuit(file) {
        Ok(c) => c,
        Err(e) => return io.fail(EXIT_USAGE, e),
    };
    let r = match evaluate(&circ) {
        Ok(r) => r,
        Err(e) => return io.fail(EXIT_USAGE, e),
    };
    let written = if cfg.json {
        writeln!(io.out, "{}", eval_json(&r))
    } else {
        write!(io.out, "{}", eval_text(&r))
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => io.fail(EXIT_FAIL, e),
    }
}

/// First declared wire no element touches.
fn spare_wire(c: &Circuit) -> Option<String> {
    c.wires().iter().find(|w| !c.elements().iter().any(|e| e.wires().contains(w))).map(String::from)
}

/// Apply a rule, conversion or lowering by name.
pub fn apply_named(c: &Circuit, rule: &str, at: usize, ancilla: Option<&str>, bits: [u8; 3]) -> Result<Circuit, String> {
    let err = |e: rewrite::RewriteError| e.to_string();
    if rewrite::find_rule(rule).is_ok() {
        return rewrite::apply_at(c, rule, at).map_err(err);
    }
    if Conversion::IDS.contains(&rule) {
        let site = Site::at(c, at).map_err(err)?;
        let anc = ancilla.map(String::from).or_else(|| spare_wire(c));
        let conv = Conversion::from_id(rule, anc.as_deref(), bits).map_err(err)?;
        return rewrite::convert_measurement(c, &site, &conv).map_err(err);
    }
    match rule {
        "nearest-neighbour" => rewrite::nearest_neighborize(c).map_err(err),
        "lower-n3-cnot" => {
            let site = Site::at(c, at).map_err(err)?;
            match ancilla {
                Some(a) => rewrite::lower_n3_cnot(c, &site, a).map_err(err),
                None => {
                    let mut last = format!("no wire can serve as ancilla at {at}");
                    for w in c.wires().iter() {
                        match rewrite::lower_n3_cnot(c, &site, w) {
                            Ok(out) => return Ok(out),
                            Err(rewrite::RewriteError::NoAncilla(_)) => {}
                            Err(e) => last = e.to_string(),
                        }
                    }
                    Err(last)
                }
            }
        }
        other => Err(rewrite::RewriteError::UnknownRule(other.to_string()).to_string()),
    }
}

/// Deviation between the maps of two circuits; ancilla closure changes the
/// open wires, in which case the original is compared with the ancilla
/// closed by `|0>` and `<0|`.
fn witness(before: &Circuit, after: &Circuit) -> Result<(EvalResult, EvalResult, f64), String> {
    let a = evaluate(before).map_err(|e| e.to_string())?;
    let b = evaluate(after).map_err(|e| e.to_string())?;
    if let Ok(d) = a.max_deviation(&b) {
        return Ok((a, b, d));
    }
    let closed: Vec<&str> = a
        .in_wires
        .iter()
        .filter(|w| !b.in_wires.contains(w) && a.out_wires.contains(w) && !b.out_wires.contains(w))
        .collect();
    let mut els: Vec<qcpaul::Element> = closed.iter().map(|w| qcpaul::Element::ket(w, qcpaul::circuit::StateSpec::Zero)).collect();
    els.extend(before.elements().iter().cloned());
    els.extend(closed.iter().map(|w| qcpaul::Element::bra(w, qcpaul::circuit::StateSpec::Zero)));
    let a = Circuit::new(before.wires().clone(), els).and_then(|c| evaluate(&c)).map_err(|e| e.to_string())?;
    let d = a.max_deviation(&b).map_err(|e| e.to_string())?;
    Ok((a, b, d))
}

fn rewrite_cmd(io: &mut Io, cfg: &CliConfig, file: &Path, rule: &str, at: usize, ancilla: Option<&str>, bits: &[u8]) -> i32 {
    let circ = match read_circuit(file) {
        Ok(c) => c,
        Err(e) => return io.fail(EXIT_USAGE, e),
    };
    let bits: [u8; 3] = match bits.try_into() {
        Ok(b) => b,
        Err(_) => return io.fail(EXIT_USAGE, "--bits takes three comma-separated values k,j1,j2"),
    };
    let out = match apply_named(&circ, rule, at, ancilla, bits) {
        Ok(c) => c,
        Err(e) => return io.fail(EXIT_USAGE, e),
    };
    let text = to_text(&out);
    if !cfg.json {
        return match write!(io.out, "{text}") {
            Ok(()) => EXIT_OK,
            Err(e) => io.fail(EXIT_FAIL, e),
        };
    }
    let (a, b, d) = match witness(&circ, &out) {
        Ok(w) => w,
        Err(e) => return io.fail(EXIT_FAIL, e),
    };
    let doc = json!({
        "rule": rule,
        "at": at,
        "circuit": text,
        "before": eval_json(&a),
        "after": eval_json(&b),
        "max_deviation": fmt_dev(d).parse::<f64>().unwrap_or(d),
        "pass": d <= cfg.tolerance,
    });
    if let Err(e) = writeln!(io.out, "{doc}") {
        return io.fail(EXIT_FAIL, e);
    }
    if d <= cfg.tolerance {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn qft_cmd(io: &mut Io, cfg: &CliConfig, nb: usize, form: &str, check: bool) -> i32 {
    let f = QftForm::parse(form).expect("validated by clap");
    let circ = match qft::build_qft(nb, f) {
        Ok(c) => c,
        Err(e) => return io.fail(EXIT_USAGE, e),
    };
    let text = to_text(&circ);
    let dev = if check {
        let got = evaluate(&circ).map(|r| r.matrix);
        match (got, qft::dft_matrix(nb)) {
            (Ok(m), Ok(u)) => Some(max_dev(&m, &u)),
            (Err(e), _) => return io.fail(EXIT_FAIL, e),
            (_, Err(e)) => return io.fail(EXIT_FAIL, e),
        }
    } else {
        None
    };
    let pass = dev.is_none_or(|d| d <= cfg.tolerance);
    let written = if cfg.json {
        let mut doc = json!({"nb": nb, "form": form, "circuit": text});
        if let Some(d) = dev {
            doc["max_deviation"] = json!(fmt_dev(d).parse::<f64>().unwrap_or(d));
            doc["pass"] = json!(pass);
        }
        writeln!(io.out, "{}", serde_json::to_string_pretty(&doc).expect("serializes"))
    } else {
        write!(io.out, "{text}").and_then(|()| match dev {
            Some(d) => writeln!(io.out, "# check: max deviation from DFT {} {}", fmt_dev(d), if pass { "PASS" } else { "FAIL" }),
            None => Ok(()),
        })
    };
    if let Err(e) = written {
        return io.fail(EXIT_FAIL, e);
    }
    if pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn max_dev(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.max_abs_diff(b).unwrap_or(f64::INFINITY)
}
