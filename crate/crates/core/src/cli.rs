//! Command-line front end. `run` parses arguments, executes one subcommand
//! and returns the process exit code:
//!
//! * 0 success
//! * 1 verification mismatch
//! * 2 usage error
//! * 3 data error

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coeffs::published::{verify_published, EntryStatus, KNOWN_TYPOS};
use crate::coeffs::{
    check_invariants, direct, inverse_identity_failure, recurrence, Family, DEFAULT_R_MAX,
    R_MAX_CAP,
};
use crate::error::Error;
use crate::evaluator::{QiConfig, QuasiInterpolant, SampleSet};
use crate::exactalg::{int, parse_rational, Rational};
use crate::experiments::published::{
    norm_tolerance, ERROR_N, ERROR_R, ERROR_TABLES, NORM_N, NORM_R, NORM_TABLE,
};
use crate::experiments::{
    asymptotic_scaling, closed_form_worst, compare_error_table, error_table, exactness_worst,
    poly_report_f64, polynomial_voronovskaya, tau_consistency, voronovskaya_check, Parity,
    TauVariant, TestFunction, TruncationRule,
};
use crate::lebesgue::{
    norm_estimate, LebesgueEstimate, DEFAULT_COARSE_STEP, DEFAULT_REFINE_LEVELS, DEFAULT_X_MAX,
};

/// Thread count for the parallel scans.
pub const THREADS_ENV: &str = "BASKAKOV_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "baskakov",
    version,
    about = "Baskakov operators and their left quasi-interpolants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print θ or η coefficient polynomials as exact rationals.
    Coeffs(CoeffsArgs),
    /// Sup-norm error tables, or a single value with --at.
    Approx(ApproxArgs),
    /// Maxima of the Lebesgue function.
    Norms(NormsArgs),
    /// Scaled errors n^(r+1) (f - V f)(x) against their limit.
    Rates(RatesArgs),
    /// Run the consistency checks and compare with the printed tables.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
    Markdown,
}

#[derive(Args, Debug)]
pub struct CoeffsArgs {
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value = "eta")]
    pub family: Family,
    /// Print only this index.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long = "r-max", default_value_t = DEFAULT_R_MAX)]
    pub r_max: usize,
    #[arg(long, value_enum, default_value = "recurrence")]
    pub method: MethodArg,
    /// Cross-check recurrence against direct construction and the printed tables.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Recurrence,
    Direct,
}

#[derive(Args, Debug)]
pub struct ApproxArgs {
    /// Registry function: exp-neg, runge, gauss, log1p, sin6, mono:<s>, const:<c>.
    #[arg(
        long = "fn",
        conflicts_with = "samples",
        required_unless_present = "samples"
    )]
    pub function: Option<TestFunction>,
    /// CSV file with header `k,value`, rows k = 0..K.
    #[arg(long)]
    pub samples: Option<PathBuf>,
    /// Comma-separated list.
    #[arg(long, value_parser = parse_u32_list, default_value = "10,20,30,40,50")]
    pub n: NList,
    /// Comma-separated list or range `a..b`.
    #[arg(long, value_parser = parse_usize_list, default_value = "1,3,5,7,9,11")]
    pub r: IndexList,
    /// `5n`, `6n`, ... or an absolute N.
    #[arg(long = "truncation", default_value = "5n")]
    pub truncation: TruncationRule,
    #[arg(long, value_parser = parse_interval, default_value = "0,2")]
    pub interval: (f64, f64),
    #[arg(long, default_value_t = 0.002)]
    pub step: f64,
    /// Evaluate V_{n,N}^(r) f at one point instead of building a table.
    #[arg(long)]
    pub at: Option<f64>,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
    /// Cells as d.d(-e).
    #[arg(long = "paper-style")]
    pub paper_style: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct NormsArgs {
    #[arg(long, value_parser = parse_u32_list, default_value = "8,16,24,32,40,48")]
    pub n: NList,
    #[arg(long, value_parser = parse_usize_list, default_value = "2..9")]
    pub r: IndexList,
    #[arg(long = "x-max", default_value_t = DEFAULT_X_MAX)]
    pub x_max: f64,
    #[arg(long, default_value_t = DEFAULT_COARSE_STEP)]
    pub step: f64,
    #[arg(long, default_value_t = DEFAULT_REFINE_LEVELS)]
    pub refine: u32,
    /// Decimals in text and markdown output.
    #[arg(long, default_value_t = 2)]
    pub digits: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityArg {
    Odd,
    Even,
}

#[derive(Args, Debug)]
pub struct RatesArgs {
    #[arg(long = "fn", default_value = "exp-neg")]
    pub function: TestFunction,
    /// Quasi-interpolant of order 2r+1 (odd) or 2r (even).
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, value_enum, default_value = "odd")]
    pub parity: ParityArg,
    #[arg(long, default_value_t = 1.0)]
    pub x: f64,
    #[arg(long, value_parser = parse_u32_list, default_value = "32,64,128,256")]
    pub n: NList,
    /// Exact rational evaluation for a monomial `mono:<s>`; --x is read as a rational.
    #[arg(long)]
    pub exact: bool,
    #[arg(long = "x-exact")]
    pub x_exact: Option<String>,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section {
    Coeffs,
    Published,
    Identity,
    Exactness,
    Closed,
    Tau,
    Scaling,
    Norms,
    Errors,
    Rates,
}

impl Section {
    const EXACT: [Section; 5] = [
        Section::Coeffs,
        Section::Published,
        Section::Identity,
        Section::Exactness,
        Section::Closed,
    ];
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Sections to run (default: the exact and internal checks).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub section: Vec<Section>,
    /// Run every section.
    #[arg(long)]
    pub all: bool,
    /// Count differences from the printed tables as failures.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Comma list or range, parsed as a single argument.
pub type NList = Vec<u32>;
pub type IndexList = Vec<usize>;

fn parse_u32_list(s: &str) -> Result<Vec<u32>, String> {
    Ok(parse_usize_list(s)?.into_iter().map(|v| v as u32).collect())
}

/// `"1,3,5"`, `"2..9"` (inclusive) or a mix such as `"2..4,8"`.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: usize = a
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad range '{part}'"))?;
                let b: usize = b
                    .trim_start_matches('=')
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad range '{part}'"))?;
                if b < a {
                    return Err(format!("empty range '{part}'"));
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| format!("bad integer '{part}'"))?),
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected 'a,b', got '{s}'"))?;
    let a: f64 = a.trim().parse().map_err(|_| format!("bad number '{a}'"))?;
    let b: f64 = b.trim().parse().map_err(|_| format!("bad number '{b}'"))?;
    Ok((a, b))
}

/// Failure of a subcommand, mapped onto an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::MalformedSamples(_) | Error::InsufficientSamples { .. } => {
                CliError::Data(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Text produced by a subcommand and whether its checks passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing to stdout or `--output`.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return EXIT_USAGE;
    }
    let output = match &cli.command {
        Command::Coeffs(a) => a.output.clone(),
        Command::Approx(a) => a.output.clone(),
        Command::Norms(a) => a.output.clone(),
        Command::Rates(a) => a.output.clone(),
        Command::Verify(a) => a.output.clone(),
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome.text, output.as_ref()) {
                eprintln!("error: {e}");
                return EXIT_DATA;
            }
            if outcome.passed {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            EXIT_DATA
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| format!("{THREADS_ENV} must be an integer, got '{value}'"))?;
    // a second call in the same process (tests) finds the pool already built
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

fn emit(text: &str, output: Option<&PathBuf>) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

pub fn execute(command: &Command) -> CliResult<Outcome> {
    match command {
        Command::Coeffs(a) => cmd_coeffs(a),
        Command::Approx(a) => cmd_approx(a),
        Command::Norms(a) => cmd_norms(a),
        Command::Rates(a) => cmd_rates(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn cmd_coeffs(a: &CoeffsArgs) -> CliResult<Outcome> {
    if a.verify {
        return coeffs_verify(a.n, a.r_max);
    }
    let n =
        a.n.ok_or_else(|| CliError::Usage("--n is required unless --verify".into()))?;
    let top = a.r.unwrap_or(a.r_max);
    if top > R_MAX_CAP {
        return Err(CliError::Usage(format!(
            "r = {top} exceeds the cap {R_MAX_CAP}"
        )));
    }
    let table = match a.method {
        MethodArg::Recurrence => recurrence(a.family, n, top)?,
        MethodArg::Direct => direct(a.family, n, top)?,
    };
    let text = match (a.format, a.r) {
        (Format::Json, _) => table.to_json() + "\n",
        (_, Some(r)) => format!("{}\n", table.polys[r]),
        (Format::Csv, None) => {
            let mut s = String::from("r,poly\n");
            for (r, p) in table.polys.iter().enumerate() {
                let _ = writeln!(s, "{r},\"{p}\"");
            }
            s
        }
        (Format::Markdown, None) => {
            let mut s = format!(
                "{} coefficients, n = {n}\n\n| r | polynomial |\n|---|---|\n",
                a.family.name()
            );
            for (r, p) in table.polys.iter().enumerate() {
                let _ = writeln!(s, "| {r} | {p} |");
            }
            s
        }
        (Format::Text, None) => {
            let mut s = String::new();
            for (r, p) in table.polys.iter().enumerate() {
                let _ = writeln!(s, "{}_{r} = {p}", a.family.name());
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

/// Recurrence vs direct construction, structural invariants, printed tables.
fn coeffs_verify(n: Option<u32>, r_max: usize) -> CliResult<Outcome> {
    let mut s = String::new();
    let mut passed = true;
    let n_list: Vec<u32> = match n {
        Some(n) => vec![n],
        None => (1..=8).collect(),
    };
    for family in [Family::Theta, Family::Eta] {
        for &n in &n_list {
            let rec = recurrence(family, n, r_max)?;
            let dir = direct(family, n, r_max)?;
            let same = rec.polys == dir.polys;
            let inv = check_invariants(&rec);
            let ok = same && inv.is_ok();
            passed &= ok;
            let _ = writeln!(
                s,
                "{} n={n} r<={r_max}: recurrence {} direct{}",
                family.name(),
                if same { "==" } else { "!=" },
                inv.err()
                    .map(|e| format!(", invariant violated: {e}"))
                    .unwrap_or_default()
            );
        }
    }
    s.push('\n');
    s.push_str(&published_report(&mut passed));
    Ok(Outcome { text: s, passed })
}

fn published_report(passed: &mut bool) -> String {
    let mut s = String::from("printed coefficient tables:\n");
    for rep in verify_published() {
        let label = format!("{}_{}", rep.family.name(), rep.r);
        match &rep.status {
            EntryStatus::Match => {
                let _ = writeln!(s, "  {label}: matches");
            }
            EntryStatus::KnownTypo {
                description,
                corrected,
                ..
            } => {
                let _ = writeln!(s, "  {label}: erratum ({description})");
                if rep.differing_coefficients.is_empty() {
                    let _ = writeln!(s, "    coefficients unchanged, prefactor corrected");
                }
                for &j in &rep.differing_coefficients {
                    if let Some(c) = corrected.get(j) {
                        let _ = writeln!(s, "    c_{j} = {c}");
                    }
                }
            }
            EntryStatus::Unexpected { detail } => {
                *passed = false;
                let _ = writeln!(s, "  {label}: MISMATCH {detail}");
            }
        }
    }
    let _ = writeln!(s, "  {} entries on the known-typo list", KNOWN_TYPOS.len());
    s
}

fn load_samples(path: &PathBuf, n: u32) -> CliResult<SampleSet> {
    let file = std::fs::File::open(path)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    Ok(SampleSet::from_csv(n, file)?)
}

fn single<T: Copy>(list: &[T], what: &str) -> CliResult<T> {
    match list {
        [v] => Ok(*v),
        _ => Err(CliError::Usage(format!("--at needs a single {what}"))),
    }
}

pub fn cmd_approx(a: &ApproxArgs) -> CliResult<Outcome> {
    if let Some(x) = a.at {
        let n = single(&a.n, "n")?;
        let r = single(&a.r, "r")?;
        let samples = match (&a.function, &a.samples) {
            (_, Some(path)) => load_samples(path, n)?,
            (Some(f), None) => SampleSet::from_fn(n, a.truncation.truncation(n), |t| f.eval(t))?,
            (None, None) => return Err(CliError::Usage("--fn or --samples required".into())),
        };
        let truncation = match a.truncation {
            TruncationRule::Multiple(_) if a.samples.is_some() => {
                a.truncation.truncation(n).min(samples.last_index())
            }
            rule => rule.truncation(n),
        };
        if a.samples.is_some() && truncation < r {
            return Err(Error::InsufficientSamples {
                truncation: r,
                available: samples.last_index(),
            }
            .into());
        }
        let qi = QuasiInterpolant::new(&samples, QiConfig::new(n, r, truncation)?)?;
        let v = qi.eval(x)?;
        let text = match a.format {
            Format::Json => json(&serde_json::json!({
                "n": n, "r": r, "N": truncation, "x": x, "value": v
            })),
            _ => format!("{v}\n"),
        };
        return Ok(Outcome::ok(text));
    }
    let f = match (&a.function, &a.samples) {
        (Some(f), _) => *f,
        _ => {
            return Err(CliError::Usage(
                "error tables need --fn; with --samples use --at".into(),
            ))
        }
    };
    let table = error_table(&f, &a.n, &a.r, a.interval, a.step, a.truncation)?;
    let text = match a.format {
        Format::Json => table.to_json() + "\n",
        Format::Csv => table.to_csv()?,
        Format::Markdown | Format::Text => table.to_markdown(a.paper_style),
    };
    Ok(Outcome::ok(text))
}

fn norm_grid(a: &NormsArgs) -> CliResult<Vec<LebesgueEstimate>> {
    let mut out = Vec::new();
    for &n in &a.n {
        for &r in &a.r {
            out.push(norm_estimate(n, r, a.x_max, a.step, a.refine)?);
        }
    }
    Ok(out)
}

pub fn cmd_norms(a: &NormsArgs) -> CliResult<Outcome> {
    let grid = norm_grid(a)?;
    let d = a.digits;
    let text = match a.format {
        Format::Json => json(&grid),
        Format::Csv => {
            let mut s = String::from("n,r,norm,argmax\n");
            for e in &grid {
                let _ = writeln!(s, "{},{},{:.6},{:.6}", e.n, e.r, e.value, e.argmax);
            }
            s
        }
        Format::Text if grid.len() == 1 => format!("{:.d$}\n", grid[0].value),
        Format::Text | Format::Markdown => {
            let md = a.format == Format::Markdown;
            let mut s = String::new();
            if md {
                s.push_str("| n \\ r |");
                for r in &a.r {
                    let _ = write!(s, " {r} |");
                }
                s.push_str("\n|---|");
                s.push_str(&"---|".repeat(a.r.len()));
                s.push('\n');
            } else {
                s.push_str("n\\r");
                for r in &a.r {
                    let _ = write!(s, "\t{r}");
                }
                s.push('\n');
            }
            for (i, n) in a.n.iter().enumerate() {
                let cells = &grid[i * a.r.len()..(i + 1) * a.r.len()];
                if md {
                    let _ = write!(s, "| {n} |");
                    for e in cells {
                        let _ = write!(s, " {:.d$} |", e.value);
                    }
                } else {
                    let _ = write!(s, "{n}");
                    for e in cells {
                        let _ = write!(s, "\t{:.d$}", e.value);
                    }
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

pub fn cmd_rates(a: &RatesArgs) -> CliResult<Outcome> {
    let parity = match a.parity {
        ParityArg::Odd => Parity::Odd,
        ParityArg::Even => Parity::Even,
    };
    if a.exact {
        let TestFunction::Monomial(degree) = a.function else {
            return Err(CliError::Usage("--exact needs --fn mono:<s>".into()));
        };
        let x: Rational = match &a.x_exact {
            Some(t) => {
                parse_rational(t).ok_or_else(|| CliError::Usage(format!("bad rational '{t}'")))?
            }
            None => rational_from_f64(a.x)?,
        };
        let rep = polynomial_voronovskaya(degree as usize, a.r, parity, &x, &a.n)?;
        let (scaled, target) = poly_report_f64(&rep);
        let mut s = format!(
            "x^{degree} at x = {}, order {}: target {}\n",
            rep.x,
            parity.qi_order(a.r),
            rep.target
        );
        for (n, approx) in rep.n_list.iter().zip(&scaled) {
            let _ = writeln!(
                s,
                "n = {n}: {approx:.12e} (deviation {:.3e})",
                approx - target
            );
        }
        if let Some((c, holds)) = rep.fitted_bound_holds() {
            let _ = writeln!(
                s,
                "C = {:.6e} fitted on the first {} values; bound at n = {} {}",
                crate::exactalg::to_f64(&c),
                rep.n_list.len() - 1,
                rep.n_list.last().unwrap(),
                if holds { "holds" } else { "FAILS" }
            );
        }
        return Ok(Outcome::ok(s));
    }
    let rep = voronovskaya_check(&a.function, a.r, parity, a.x, &a.n)?;
    let text = match a.format {
        Format::Json => json(&rep),
        Format::Csv => rep.to_csv(),
        Format::Markdown | Format::Text => rep.to_markdown(),
    };
    Ok(Outcome::ok(text))
}

fn rational_from_f64(x: f64) -> CliResult<Rational> {
    Rational::from_float(x).ok_or_else(|| CliError::Usage(format!("bad point {x}")))
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn cmd_verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let sections: Vec<Section> = if a.all {
        Section::value_variants().to_vec()
    } else if a.section.is_empty() {
        Section::EXACT.to_vec()
    } else {
        a.section.clone()
    };
    let mut s = String::new();
    let mut internal_ok = true;
    let mut printed_ok = true;
    for section in sections {
        let (text, internal, printed) = verify_section(section)?;
        internal_ok &= internal;
        printed_ok &= printed;
        s.push_str(&text);
        s.push('\n');
    }
    let passed = internal_ok && (printed_ok || !a.strict);
    let _ = writeln!(
        s,
        "internal checks: {}; printed tables: {}",
        status(internal_ok),
        if printed_ok {
            "reproduced"
        } else {
            "differences reported above"
        }
    );
    Ok(Outcome { text: s, passed })
}

/// Report text, internal consistency, agreement with printed values.
fn verify_section(section: Section) -> CliResult<(String, bool, bool)> {
    let mut s = String::new();
    match section {
        Section::Coeffs => {
            let out = coeffs_verify(None, DEFAULT_R_MAX)?;
            let _ = writeln!(
                s,
                "[coeffs] recurrence vs direct, n = 1..8, r <= {DEFAULT_R_MAX}"
            );
            for line in out.text.lines().take_while(|l| !l.is_empty()) {
                let _ = writeln!(s, "  {line}");
            }
            Ok((s, out.passed, true))
        }
        Section::Published => {
            let mut ok = true;
            s.push_str("[published] ");
            s.push_str(&published_report(&mut ok));
            Ok((s, ok, ok))
        }
        Section::Identity => {
            let mut ok = true;
            s.push_str("[identity] inverse composition on degree <= 10\n");
            for n in [2, 5, 10] {
                let fail = inverse_identity_failure(n, 10)?;
                ok &= fail.is_none();
                let _ = writeln!(
                    s,
                    "  n={n}: {}",
                    fail.map(|d| format!("FAIL at degree {d}"))
                        .unwrap_or_else(|| "ok".into())
                );
            }
            Ok((s, ok, true))
        }
        Section::Exactness => {
            s.push_str("[exactness] |V^(r) x^s - x^s| <= 1e-8 max(1, x^s), s <= r <= 9, N = 10n\n");
            let mut ok = true;
            for n in [10u32, 20] {
                let worst = exactness_worst(n, 10 * n as usize)?;
                ok &= worst <= 1e-8;
                let _ = writeln!(
                    s,
                    "  n={n}: worst scaled error {worst:.2e} {}",
                    status(worst <= 1e-8)
                );
            }
            Ok((s, ok, true))
        }
        Section::Closed => {
            s.push_str("[closed] closed forms r = 2..4 vs generic evaluation\n");
            let mut ok = true;
            for f in TestFunction::REFERENCE_EXAMPLES {
                let worst = closed_form_worst(&f, 20)?;
                ok &= worst <= 1e-12;
                let _ = writeln!(
                    s,
                    "  {f}: max relative difference {worst:.2e} {}",
                    status(worst <= 1e-12)
                );
            }
            Ok((s, ok, true))
        }
        Section::Tau => {
            s.push_str("[tau] r = 5..9 single-term closed forms, exp-neg, n = 10, N = 50\n");
            let rows = tau_consistency(
                &TestFunction::ExpNeg,
                &[5, 6, 7, 8, 9],
                10,
                50,
                &[0.5, 1.0, 2.0],
            )?;
            let mut corrected_ok = true;
            let mut printed_ok = true;
            for r in 5..=9 {
                for variant in [TauVariant::Printed, TauVariant::Corrected] {
                    let sel: Vec<_> = rows
                        .iter()
                        .filter(|t| t.r == r && t.variant == variant)
                        .collect();
                    let agree = sel.iter().all(|t| t.agrees);
                    let worst = sel
                        .iter()
                        .map(|t| t.relative_difference)
                        .fold(0.0, f64::max);
                    match variant {
                        TauVariant::Printed => printed_ok &= agree,
                        TauVariant::Corrected => corrected_ok &= agree,
                    }
                    let note = sel.first().map(|t| t.note).unwrap_or("");
                    let _ = writeln!(
                        s,
                        "  tau_{r} {:<9} max relative difference {worst:.2e} {}{}",
                        format!("{variant:?}").to_lowercase(),
                        if agree { "agrees" } else { "MISMATCH" },
                        if note.is_empty() {
                            String::new()
                        } else {
                            format!(" ({note})")
                        }
                    );
                }
            }
            Ok((s, corrected_ok, printed_ok))
        }
        Section::Scaling => {
            s.push_str(
                "[scaling] n^l c_r(x) / limit(x) at n = 10^4, x in {1/2, 1, 2}, tolerance 1e-3\n",
            );
            let xs: Vec<Rational> = ["1/2", "1", "2"]
                .iter()
                .map(|t| parse_rational(t).unwrap())
                .collect();
            let mut ok = true;
            for family in [Family::Theta, Family::Eta] {
                let rows = asymptotic_scaling(family, &[3, 4, 5, 6, 7, 8], &xs, &[10_000])?;
                for r in 3..=8 {
                    let worst = rows
                        .iter()
                        .filter(|w| w.index == r)
                        .map(|w| w.deviation())
                        .fold(0.0, f64::max);
                    ok &= worst <= 1e-3;
                    let _ = writeln!(
                        s,
                        "  {}_{r}: max |ratio - 1| = {worst:.2e} {}",
                        family.name(),
                        status(worst <= 1e-3)
                    );
                }
            }
            Ok((s, true, ok))
        }
        Section::Norms => {
            s.push_str("[norms] Lebesgue maxima on [0, 10] vs printed table\n");
            let mut ok = true;
            for (i, &n) in NORM_N.iter().enumerate() {
                for (j, &r) in NORM_R.iter().enumerate() {
                    let Some(printed) = NORM_TABLE[i][j] else {
                        continue;
                    };
                    let e = norm_estimate(
                        n,
                        r,
                        DEFAULT_X_MAX,
                        DEFAULT_COARSE_STEP,
                        DEFAULT_REFINE_LEVELS,
                    )?;
                    let good = (e.value - printed).abs() <= norm_tolerance(printed);
                    ok &= good;
                    if !good {
                        let _ = writeln!(
                            s,
                            "  n={n} r={r}: computed {:.4} printed {printed} (x = {:.4})",
                            e.value, e.argmax
                        );
                    }
                }
            }
            let _ = writeln!(
                s,
                "  {}",
                if ok {
                    "all cells within tolerance"
                } else {
                    "other cells within tolerance"
                }
            );
            Ok((s, true, ok))
        }
        Section::Errors => {
            s.push_str(
                "[errors] sup errors on [0, 2], step 0.002, N = 5n vs printed tables (20%)\n",
            );
            let mut ok = true;
            for printed in &ERROR_TABLES {
                let table = error_table(
                    &printed.function,
                    &ERROR_N,
                    &ERROR_R,
                    (0.0, 2.0),
                    0.002,
                    TruncationRule::Multiple(5),
                )?;
                let (good, total, lines) = compare_error_table(&table, &printed.cells);
                ok &= good == total;
                let _ = writeln!(s, "  {}: {good}/{total} cells within 20%", printed.function);
                for l in lines {
                    let _ = writeln!(s, "    {l}");
                }
            }
            Ok((s, true, ok))
        }
        Section::Rates => {
            let rep = voronovskaya_check(
                &TestFunction::ExpNeg,
                1,
                Parity::Odd,
                1.0,
                &[32, 64, 128, 256],
            )?;
            let dev = rep.final_relative_deviation();
            let ok = rep.is_monotone() && dev < 0.15;
            let _ = writeln!(
                s,
                "[rates] exp-neg, order 3, x = 1: monotone {}, final deviation {:.1}% {}",
                rep.is_monotone(),
                100.0 * dev,
                status(ok)
            );
            let poly = polynomial_voronovskaya(4, 1, Parity::Odd, &int(1), &[100, 200, 1000])?;
            let (c, holds) = poly.fitted_bound_holds().expect("three points");
            let _ = writeln!(
                s,
                "  x^4 exact: C = {:.4e}, bound at n = 1000 {}",
                crate::exactalg::to_f64(&c),
                status(holds)
            );
            Ok((s, ok && holds, true))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(args: &[&str]) -> Outcome {
        let cli =
            Cli::try_parse_from(std::iter::once("baskakov").chain(args.iter().copied())).unwrap();
        execute(&cli.command).ok().unwrap()
    }

    #[test]
    fn lists() {
        assert_eq!(parse_usize_list("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_usize_list("1,3, 5").unwrap(), vec![1, 3, 5]);
        assert_eq!(parse_usize_list("2..=3,7").unwrap(), vec![2, 3, 7]);
        assert!(parse_usize_list("5..2").is_err());
        assert!(parse_usize_list("").is_err());
        assert!(parse_usize_list("a").is_err());
        assert_eq!(parse_interval("0, 2").unwrap(), (0.0, 2.0));
    }

    #[test]
    fn coeff_lines() {
        assert_eq!(
            outcome(&["coeffs", "--n", "10", "--family", "eta", "--r", "2"]).text,
            "-(1/22)x - (1/22)x^2\n"
        );
        assert_eq!(
            outcome(&["coeffs", "--n", "1", "--family", "theta", "--r", "1"]).text,
            "0\n"
        );
    }

    #[test]
    fn trivial_values() {
        assert_eq!(outcome(&["norms", "--n", "8", "--r", "0"]).text, "1.00\n");
        assert_eq!(
            outcome(&["approx", "--fn", "exp-neg", "--n", "10", "--r", "0", "--at", "0"]).text,
            "1\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run(["baskakov", "coeffs", "--n", "0", "--r", "2"]),
            EXIT_USAGE
        );
        assert_eq!(run(["baskakov", "bogus"]), EXIT_USAGE);
        assert_eq!(
            run([
                "baskakov",
                "approx",
                "--samples",
                "/nonexistent/f.csv",
                "--n",
                "5",
                "--r",
                "1",
                "--at",
                "1"
            ]),
            EXIT_DATA
        );
    }
}
