//! Command-line front end.
//!
//! Every subcommand validates its flags before computing anything. Errors
//! go to stderr as one JSON line; exit codes are 1 for usage errors, 2 for
//! mathematical precondition failures, 3 for internal invariant failures.
//! JSON objects are emitted with sorted keys and big integers as decimal
//! strings so outputs are byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::completion::{
    reduce, series_realize, to_digits, ChainKind, FiltrationChain, ProductEnumeration, SeriesSpec,
    TruncatedElement, TruncatedElementJson,
};
use crate::cyclotomic::{self, connected_components, phi, pochhammer, AdjacencyGraph, RingDescriptor};
use crate::error::Error;
use crate::polyring::{IntPolynomial, RatPolynomial};
use crate::qcrt::{crt_split, rho_q_kernel_witness, ExponentVector};
use crate::rootexp::{series_expansion, series_values, CyclotomicInteger};
use crate::selfcheck;

pub const CACHE_ENV: &str = "HABIRO_CACHE_DIR";
const CACHE_FILE: &str = "cyclotomic_cache.json";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "cyclo", about = "Exact arithmetic in cyclotomic completions of Z[q] and Q[q]")]
pub struct CommandRequest {
    /// TOML file with guardrail budgets (`max_level`, `max_order`).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FormatArg {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The n-th cyclotomic polynomial.
    Cyclotomic {
        n: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// The q-Pochhammer symbol (q)_n.
    Pochhammer {
        n: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Connected components of the index graph over a coefficient ring.
    Graph {
        /// Z, Q, 0, or Z1/m
        #[arg(long)]
        ring: String,
        /// comma-separated positive integers
        #[arg(long)]
        set: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Truncated elements of completions of Z[q].
    #[command(subcommand)]
    Habiro(HabiroCommand),
    /// Chinese-remainder structure of Q[q]^S.
    #[command(subcommand)]
    Qcrt(QcrtCommand),
    /// Run the exact invariant suite.
    Selfcheck {
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum HabiroCommand {
    /// Reduce a polynomial to a level of a chain.
    Reduce {
        /// JSON array of coefficient strings, lowest power first
        #[arg(long)]
        poly: String,
        /// pochhammer | adic:<n> | adic:<json poly> | product:<n,..> | explicit:<n,..>
        #[arg(long)]
        chain: String,
        #[arg(long)]
        level: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Digit expansion of a reduced polynomial.
    Digits {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        chain: String,
        #[arg(long)]
        level: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Restrict a serialized element to a coarser chain level.
    Rho {
        /// serialized truncated element
        #[arg(long)]
        element: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        level: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Realize a named series (qinv, kz, one) at a level.
    Series {
        #[arg(long)]
        name: String,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value = "pochhammer")]
        chain: String,
        /// verify q * series == 1 (qinv only)
        #[arg(long)]
        check_unit: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Values of a named series at roots of unity.
    Eval {
        #[arg(long)]
        series: String,
        #[arg(long)]
        orders: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Expansion of a named series in powers of q - zeta.
    Expand {
        #[arg(long)]
        series: String,
        /// order of the root of unity zeta
        #[arg(long)]
        center: u64,
        #[arg(long)]
        terms: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum QcrtCommand {
    /// Split a rational polynomial into its CRT components.
    Split {
        /// n:exponent pairs, e.g. 1:2,2:2
        #[arg(long)]
        lambda: String,
        /// JSON array of rational coefficient strings
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Kernel witness of Q[q]^{1,2} -> Q[q]^{1} at level N.
    Witness {
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

/// Guardrail budgets read from `--config`.
#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Budget {
    pub max_level: Option<usize>,
    pub max_order: Option<u64>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(Error),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Math(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn line(&self) -> String {
        let (kind, message) = match self {
            CliError::Usage(m) => ("Usage".to_string(), m.clone()),
            CliError::Math(e) => (e.kind().to_string(), e.to_string()),
            CliError::Internal(m) => ("Internal".to_string(), m.clone()),
        };
        json!({"error": {"exit_code": self.exit_code(), "kind": kind, "message": message}}).to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(m) => CliError::Usage(m),
            Error::Internal(m) => CliError::Internal(m),
            other => CliError::Math(other),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Internal(format!("write failed: {e}"))
}

/// Parse arguments (including the program name) and run, writing to the
/// given sinks. Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let req = match CommandRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect::<Vec<_>>()
                .join(" ")
                .trim_start_matches("error: ")
                .to_string();
            let _ = writeln!(err, "{}", usage(first).line());
            return 1;
        }
    };
    let cache_dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    if let Some(dir) = &cache_dir {
        load_cache(dir);
    }
    let code = match run_command(&req, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", e.line());
            e.exit_code()
        }
    };
    if let Some(dir) = &cache_dir {
        if let Err(e) = save_cache(dir) {
            let _ = writeln!(err, "{}", CliError::Internal(format!("cache not saved: {e}")).line());
        }
    }
    code
}

fn load_cache(dir: &Path) {
    let Ok(text) = std::fs::read_to_string(dir.join(CACHE_FILE)) else { return };
    let Ok(map) = serde_json::from_str::<BTreeMap<u64, IntPolynomial>>(&text) else { return };
    cyclotomic::preload_cache(map);
}

fn save_cache(dir: &Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let text = serde_json::to_string(&cyclotomic::cache_snapshot())?;
    let tmp = dir.join(format!("{CACHE_FILE}.tmp"));
    std::fs::write(&tmp, text + "\n")?;
    std::fs::rename(tmp, dir.join(CACHE_FILE))
}

fn load_budget(path: &Option<PathBuf>) -> CliResult<Budget> {
    match path {
        None => Ok(Budget::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| usage(format!("cannot read config {}: {e}", p.display())))?;
            toml::from_str(&text).map_err(|e| usage(format!("bad config: {}", e.message())))
        }
    }
}

impl Budget {
    fn level(&self, level: usize) -> CliResult<()> {
        match self.max_level {
            Some(max) if level > max => Err(usage(format!("level {level} exceeds configured max_level {max}"))),
            _ => Ok(()),
        }
    }

    fn order(&self, n: u64) -> CliResult<()> {
        match self.max_order {
            Some(max) if n > max => Err(usage(format!("order {n} exceeds configured max_order {max}"))),
            _ => Ok(()),
        }
    }
}

fn parse_list(s: &str) -> CliResult<Vec<u64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<u64>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(usage(format!("expected positive integer, got {t:?}"))),
            }
        })
        .collect()
}

fn parse_int_poly(s: &str) -> CliResult<IntPolynomial> {
    serde_json::from_str(s).map_err(|e| usage(format!("bad polynomial JSON: {e}")))
}

fn parse_rat_poly(s: &str) -> CliResult<RatPolynomial> {
    serde_json::from_str(s).map_err(|e| usage(format!("bad polynomial JSON: {e}")))
}

/// Chain syntax accepted on the command line.
pub fn parse_chain(s: &str) -> CliResult<Arc<FiltrationChain>> {
    let s = s.trim();
    let kind = if s.starts_with('{') {
        serde_json::from_str::<ChainKind>(s).map_err(|e| usage(format!("bad chain JSON: {e}")))?
    } else if s == "pochhammer" {
        ChainKind::Pochhammer {}
    } else if let Some(rest) = s.strip_prefix("adic:") {
        let f = if rest.starts_with('[') {
            parse_int_poly(rest)?
        } else {
            let n = parse_list(rest)?;
            match n.as_slice() {
                [n] => (*phi(*n)).clone(),
                _ => return Err(usage("adic:<n> takes a single index")),
            }
        };
        ChainKind::Adic { f }
    } else if let Some(rest) = s.strip_prefix("product:") {
        ChainKind::Product(ProductEnumeration::RoundRobin { set: parse_list(rest)? })
    } else if let Some(rest) = s.strip_prefix("explicit:") {
        ChainKind::Product(ProductEnumeration::Explicit { sequence: parse_list(rest)? })
    } else {
        return Err(usage(format!("unknown chain {s:?}")));
    };
    FiltrationChain::new(kind).map_err(|e| match e {
        Error::EmptySet => usage("empty chain index set"),
        other => other.into(),
    })
}

fn series_by_name(name: &str) -> CliResult<SeriesSpec> {
    SeriesSpec::by_name(name).ok_or_else(|| usage(format!("unknown series {name:?} (expected qinv, kz or one)")))
}

fn coeff_strings(p: &IntPolynomial) -> Value {
    json!(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn poly_csv(p: &IntPolynomial) -> String {
    let mut s = String::from("power,coefficient\n");
    for (i, c) in p.coeffs().iter().enumerate() {
        let _ = writeln!(s, "{i},{c}");
    }
    s
}

fn emit(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes()).map_err(io_err)?;
    if !text.ends_with('\n') {
        out.write_all(b"\n").map_err(io_err)?;
    }
    Ok(())
}

fn element_json(a: &TruncatedElement) -> Value {
    serde_json::to_value(a.to_json()).expect("serializable")
}

fn element_text(a: &TruncatedElement, format: Format) -> String {
    match format {
        Format::Json => element_json(a).to_string(),
        Format::Csv => poly_csv(a.rep()),
        Format::Plain => format!("{} mod g_{} of {}", a.rep(), a.level(), a.chain().label()),
    }
}

fn cyc_value(c: &CyclotomicInteger) -> Value {
    serde_json::to_value(c.to_json()).expect("serializable")
}

/// Execute a parsed request.
pub fn run_command(req: &CommandRequest, out: &mut dyn Write) -> CliResult<()> {
    let budget = load_budget(&req.config)?;
    match &req.command {
        Command::Cyclotomic { n, fmt } | Command::Pochhammer { n, fmt } => {
            let is_phi = matches!(req.command, Command::Cyclotomic { .. });
            if is_phi && *n == 0 {
                return Err(usage("cyclotomic index must be positive"));
            }
            budget.order(*n)?;
            let p = if is_phi { (*phi(*n)).clone() } else { pochhammer(*n) };
            let text = match fmt.format.unwrap_or(Format::Json) {
                Format::Json => json!({"n": n, "coeffs": coeff_strings(&p)}).to_string(),
                Format::Csv => poly_csv(&p),
                Format::Plain => p.to_string(),
            };
            emit(out, &text)
        }
        Command::Graph { ring, set, fmt } => {
            let desc: RingDescriptor = ring.parse()?;
            let vertices = parse_list(set)?;
            for &v in &vertices {
                budget.order(v)?;
            }
            let graph = AdjacencyGraph::new(desc.clone(), vertices)?;
            let comps = connected_components(&desc, graph.vertices())?;
            let text = match fmt.format.unwrap_or(Format::Json) {
                Format::Json => json!({
                    "ring": desc.name(),
                    "vertices": graph.vertices(),
                    "edges": graph.edges().iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
                    "components": comps,
                    "connected": comps.len() == 1,
                })
                .to_string(),
                Format::Csv => {
                    let mut s = String::from("vertex,component\n");
                    for (i, c) in comps.iter().enumerate() {
                        for v in c {
                            let _ = writeln!(s, "{v},{i}");
                        }
                    }
                    s
                }
                Format::Plain => comps
                    .iter()
                    .map(|c| c.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(out, &text)
        }
        Command::Habiro(cmd) => run_habiro(cmd, &budget, out),
        Command::Qcrt(cmd) => run_qcrt(cmd, &budget, out),
        Command::Selfcheck { fmt } => {
            let results = selfcheck::run_all();
            let all = results.iter().all(|r| r.passed);
            let text = match fmt.format.unwrap_or(Format::Plain) {
                Format::Json => json!({
                    "all_passed": all,
                    "checks": results.iter().map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail})).collect::<Vec<_>>(),
                })
                .to_string(),
                Format::Csv => {
                    let mut s = String::from("check,passed,detail\n");
                    for r in &results {
                        let _ = writeln!(s, "{},{},\"{}\"", r.name, r.passed, r.detail.replace('"', "'"));
                    }
                    s
                }
                Format::Plain => results
                    .iter()
                    .map(|r| format!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(out, &text)?;
            if all {
                Ok(())
            } else {
                Err(CliError::Internal("selfcheck failed".into()))
            }
        }
    }
}

fn run_habiro(cmd: &HabiroCommand, budget: &Budget, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        HabiroCommand::Reduce { poly, chain, level, fmt } => {
            budget.level(*level)?;
            let (f, chain) = (parse_int_poly(poly)?, parse_chain(chain)?);
            let a = reduce(&f, &chain, *level)?;
            emit(out, &element_text(&a, fmt.format.unwrap_or(Format::Json)))
        }
        HabiroCommand::Digits { poly, chain, level, fmt } => {
            budget.level(*level)?;
            let (f, chain) = (parse_int_poly(poly)?, parse_chain(chain)?);
            let d = to_digits(&reduce(&f, &chain, *level)?)?;
            let text = match fmt.format.unwrap_or(Format::Json) {
                Format::Json => json!({
                    "chain": serde_json::to_value(chain.kind()).expect("serializable"),
                    "level": level,
                    "digits": d.digits().iter().map(coeff_strings).collect::<Vec<_>>(),
                })
                .to_string(),
                Format::Csv => {
                    let mut s = String::from("index,power,coefficient\n");
                    for (i, a) in d.digits().iter().enumerate() {
                        for (j, c) in a.coeffs().iter().enumerate() {
                            let _ = writeln!(s, "{i},{j},{c}");
                        }
                    }
                    s
                }
                Format::Plain => d
                    .digits()
                    .iter()
                    .enumerate()
                    .map(|(i, a)| format!("a_{i} = {a}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(out, &text)
        }
        HabiroCommand::Rho { element, target, level, fmt } => {
            budget.level(*level)?;
            let js: TruncatedElementJson =
                serde_json::from_str(element).map_err(|e| usage(format!("bad element JSON: {e}")))?;
            budget.level(js.level)?;
            let a = TruncatedElement::from_json(js)?;
            let r = a.rho(&parse_chain(target)?, *level)?;
            emit(out, &element_text(&r, fmt.format.unwrap_or(Format::Json)))
        }
        HabiroCommand::Series { name, level, chain, check_unit, fmt } => {
            budget.level(*level)?;
            let spec = series_by_name(name)?;
            if *check_unit && name != "qinv" {
                return Err(usage("--check-unit applies to the qinv series only"));
            }
            let chain = parse_chain(chain)?;
            let a = series_realize(&spec, &chain, *level)?;
            let format = fmt.format.unwrap_or(Format::Json);
            let check = if *check_unit {
                let q = reduce(&IntPolynomial::q(), &chain, *level)?;
                let holds = q.mul(&a)? == TruncatedElement::one(&chain, *level)?;
                let modulus = if chain.is_pochhammer() {
                    format!("(q)_{level}")
                } else {
                    format!("g_{level} of {}", chain.label())
                };
                Some(format!("q*inv == 1 mod {modulus}: {holds}"))
            } else {
                None
            };
            let text = match (format, &check) {
                (Format::Json, Some(line)) => {
                    json!({"element": element_json(&a), "verification": line}).to_string()
                }
                (_, Some(line)) => format!("{}\n{line}", element_text(&a, format).trim_end()),
                (_, None) => element_text(&a, format),
            };
            emit(out, &text)
        }
        HabiroCommand::Eval { series, orders, fmt } => {
            let spec = series_by_name(series)?;
            let orders = parse_list(orders)?;
            for &n in &orders {
                budget.order(n)?;
            }
            let level = *orders.iter().max().expect("nonempty") as usize;
            budget.level(level)?;
            let values = series_values(&spec, &orders)?;
            let text = match fmt.format.unwrap_or(Format::Json) {
                Format::Json => json!({
                    "series": series,
                    "level": level,
                    "values": values.values().map(cyc_value).collect::<Vec<_>>(),
                })
                .to_string(),
                Format::Csv => {
                    let mut s = String::from("order,value\n");
                    for (n, v) in &values {
                        let _ = writeln!(s, "{n},{v}");
                    }
                    s
                }
                Format::Plain => values
                    .iter()
                    .map(|(n, v)| format!("tau_{n} = {v}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(out, &text)
        }
        HabiroCommand::Expand { series, center, terms, fmt } => {
            let spec = series_by_name(series)?;
            if *center == 0 {
                return Err(usage("center must be a positive order"));
            }
            budget.order(*center)?;
            budget.level(*center as usize * *terms)?;
            let s = series_expansion(&spec, *center, *terms)?;
            let text = match fmt.format.unwrap_or(Format::Csv) {
                Format::Json => serde_json::to_value(s.to_json()).expect("serializable").to_string(),
                Format::Csv => {
                    let mut out = String::from("j,coefficient\n");
                    for (j, c) in s.coeffs.iter().enumerate() {
                        let _ = writeln!(out, "{j},{c}");
                    }
                    out
                }
                Format::Plain => s
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, c)| format!("c_{j} = {c}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(out, &text)
        }
    }
}

fn run_qcrt(cmd: &QcrtCommand, budget: &Budget, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        QcrtCommand::Split { lambda, poly, fmt } => {
            let lambda = ExponentVector::parse(lambda)?;
            for (&n, &e) in lambda.entries() {
                budget.order(n)?;
                budget.level(e as usize)?;
            }
            let f = parse_rat_poly(poly)?;
            let comps = crt_split(&f, &lambda);
            let rows: Vec<(u64, u32, &RatPolynomial)> = lambda
                .entries()
                .iter()
                .map(|(&n, &e)| (n, e, &comps.0[&n]))
                .collect();
            let text = match fmt.format.unwrap_or(Format::Json) {
                Format::Json => json!({
                    "components": rows.iter().map(|(n, e, c)| json!({
                        "n": n,
                        "exponent": e,
                        "residue": serde_json::to_value(c).expect("serializable"),
                    })).collect::<Vec<_>>(),
                })
                .to_string(),
                Format::Csv => {
                    let mut s = String::from("n,exponent,power,coefficient\n");
                    for (n, e, c) in &rows {
                        for (i, x) in c.coeffs().iter().enumerate() {
                            let _ = writeln!(s, "{n},{e},{i},{}", crate::polyring::Coeff::to_decimal(x));
                        }
                    }
                    s
                }
                Format::Plain => rows
                    .iter()
                    .map(|(n, e, c)| format!("mod Phi_{n}^{e}: {c}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(out, &text)
        }
        QcrtCommand::Witness { level, fmt } => {
            budget.level(*level as usize)?;
            let w = rho_q_kernel_witness(*level)?;
            if !w.is_valid() {
                return Err(CliError::Internal(format!("kernel witness at level {level} failed its certificates")));
            }
            let a = w.vanishing_quotient.as_ref().expect("valid");
            let b = w.unit_quotient.as_ref().expect("valid");
            let text = match fmt.format.unwrap_or(Format::Json) {
                Format::Json => json!({
                    "level": level,
                    "witness": serde_json::to_value(&w.witness).expect("serializable"),
                    "certificates": {
                        "witness_over_(q-1)^N": serde_json::to_value(a).expect("serializable"),
                        "(witness-1)_over_(q+1)^N": serde_json::to_value(b).expect("serializable"),
                    },
                })
                .to_string(),
                Format::Csv => {
                    let mut s = String::from("polynomial,power,coefficient\n");
                    for (name, p) in [("witness", &w.witness), ("quotient_q_minus_1", a), ("quotient_q_plus_1", b)] {
                        for (i, x) in p.coeffs().iter().enumerate() {
                            let _ = writeln!(s, "{name},{i},{}", crate::polyring::Coeff::to_decimal(x));
                        }
                    }
                    s
                }
                Format::Plain => format!(
                    "e_{level} = {}\ne_{level} = (q - 1)^{level} * ({a})\ne_{level} - 1 = (q + 1)^{level} * ({b})",
                    w.witness
                ),
            };
            emit(out, &text)
        }
    }
}

/// The fixed corpus of invocations whose outputs are kept as golden files.
pub fn golden_corpus() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("cyclotomic_12", vec!["cyclotomic", "12"]),
        ("cyclotomic_105_csv", vec!["cyclotomic", "105", "--format", "csv"]),
        ("cyclotomic_30_plain", vec!["cyclotomic", "30", "--format", "plain"]),
        ("pochhammer_4", vec!["pochhammer", "4"]),
        ("graph_q", vec!["graph", "--ring", "Q", "--set", "1,2,6"]),
        ("graph_z", vec!["graph", "--ring", "Z", "--set", "1,2,6"]),
        ("graph_z_half_csv", vec!["graph", "--ring", "Z1/2", "--set", "1,2,4,8,3", "--format", "csv"]),
        ("reduce_q5", vec!["habiro", "reduce", "--poly", r#"["0","0","0","0","0","1"]"#, "--chain", "pochhammer", "--level", "2"]),
        ("reduce_adic", vec!["habiro", "reduce", "--poly", r#"["1","2","3","4","5","6"]"#, "--chain", "adic:3", "--level", "2", "--format", "plain"]),
        ("digits_q", vec!["habiro", "digits", "--poly", r#"["0","1"]"#, "--chain", "pochhammer", "--level", "3"]),
        ("digits_random_csv", vec!["habiro", "digits", "--poly", r#"["7","-3","0","11","5","-8","2","9","1"]"#, "--chain", "pochhammer", "--level", "4", "--format", "csv"]),
        ("rho_to_adic", vec!["habiro", "rho", "--element", r#"{"chain":{"kind":"pochhammer","params":{}},"level":6,"rep":["2","0","5","-1","0","0","0","9"]}"#, "--target", "adic:1", "--level", "3"]),
        ("series_qinv_check", vec!["habiro", "series", "--name", "qinv", "--level", "5", "--check-unit", "--format", "plain"]),
        ("series_qinv_json", vec!["habiro", "series", "--name", "qinv", "--level", "5", "--check-unit"]),
        ("series_kz", vec!["habiro", "series", "--name", "kz", "--level", "4"]),
        ("eval_kz", vec!["habiro", "eval", "--series", "kz", "--orders", "1,2,3,5"]),
        ("eval_kz_plain", vec!["habiro", "eval", "--series", "kz", "--orders", "1,2,3,4,6", "--format", "plain"]),
        ("expand_kz", vec!["habiro", "expand", "--series", "kz", "--center", "1", "--terms", "8"]),
        ("expand_qinv_json", vec!["habiro", "expand", "--series", "qinv", "--center", "1", "--terms", "5", "--format", "json"]),
        ("expand_kz_center3", vec!["habiro", "expand", "--series", "kz", "--center", "3", "--terms", "3"]),
        ("qcrt_split", vec!["qcrt", "split", "--lambda", "1:2,2:2", "--poly", r#"["1","1/2","0","3"]"#]),
        ("qcrt_witness_1", vec!["qcrt", "witness", "--level", "1"]),
        ("qcrt_witness_3_plain", vec!["qcrt", "witness", "--level", "3", "--format", "plain"]),
    ]
}
