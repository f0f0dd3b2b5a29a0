//! Command-line surface of the `acue-lab` binary.
//!
//! Results go to stdout as JSON, CSV or an aligned table; diagnostics go to
//! stderr. Exit codes: 0 success, 1 usage error, 2 mathematical precondition
//! violated, 3 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::ensembles::DEFAULT_ENUMERATION_CAP;
use crate::error::{Error, Result};
use crate::formulas::{
    acue_moment, acue_ratio, bos_compose, cue_moment, cue_ratio, moment_by_enumeration,
    ratio_by_enumeration, tao_scan, MomentSpec, TaoScan,
};
use crate::numeric::{relative_error, ComplexValue, Precision};
use crate::verify::{run_suites, Suite, VerifyConfig, VerifyReport};
use crate::zeta_limits::{
    averaged_acue_limit, r_average_limit, ratio_limit_det, LimitKernel, ScaledShifts,
};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "acue-lab",
    version,
    about = "Moments and ratios of characteristic polynomials over ACUE(N) and CUE(N)"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Working precision in bits (at least 64)
    #[arg(long, global = true, env = "ACUE_LAB_PRECISION_BITS", default_value_t = Precision::DEFAULT.bits())]
    pub precision_bits: u32,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest N for which ACUE(N) is enumerated as an oracle
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub enumeration_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleChoice {
    Acue,
    Cue,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelChoice {
    Cue,
    Acue,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// E[det(g)^-K ∏ det(1 + v_k g)] from the column determinants
    Moments(MomentArgs),
    /// E[∏ det(1 + v_j g) / det(1 + u_j g)]
    Ratios(RatioArgs),
    /// ACUE against CUE moments, for one shift set or over a (K, L) grid
    Compare(CompareArgs),
    /// Run the verification suites
    Verify(VerifyArgs),
    /// Scaled N → ∞ ratio predictions
    ZetaLimit(ZetaArgs),
}

#[derive(Debug, Clone, Args)]
pub struct MomentArgs {
    #[arg(long, value_enum, default_value_t = EnsembleChoice::Both)]
    pub ensemble: EnsembleChoice,
    #[arg(short = 'n', long)]
    pub n: usize,
    #[arg(short = 'k', long)]
    pub k: usize,
    #[arg(short = 'l', long)]
    pub l: usize,
    /// K + L comma-separated shifts: "a+bi", "(re,im)" or plain reals
    #[arg(long, allow_hyphen_values = true)]
    pub shifts: String,
    /// Evaluate repeated shifts through derivative columns
    #[arg(long)]
    pub confluent: bool,
}

#[derive(Debug, Clone, Args)]
pub struct RatioArgs {
    #[arg(long, value_enum, default_value_t = EnsembleChoice::Acue)]
    pub ensemble: EnsembleChoice,
    #[arg(short = 'n', long)]
    pub n: usize,
    /// Number of shifts on each side (checked against the lists)
    #[arg(short = 'j', long)]
    pub j: Option<usize>,
    /// Numerator shifts v_1..v_J
    #[arg(long = "v", allow_hyphen_values = true)]
    pub vs: String,
    /// Denominator shifts u_1..u_J
    #[arg(long = "u", allow_hyphen_values = true)]
    pub us: String,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    /// Scan (K, L) over 1..=kmax × 1..=lmax with random shifts
    #[arg(long)]
    pub tao_scan: bool,
    #[arg(short = 'n', long)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub kmax: usize,
    #[arg(long, default_value_t = 4)]
    pub lmax: usize,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[arg(short = 'k', long)]
    pub k: Option<usize>,
    #[arg(short = 'l', long)]
    pub l: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub shifts: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// A suite name or "all"
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Largest N exercised by enumeration-backed suites
    #[arg(short = 'n', long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ZetaArgs {
    /// Denominator exponents μ_j
    #[arg(long, allow_hyphen_values = true)]
    pub mus: String,
    /// Numerator exponents ν_j
    #[arg(long, allow_hyphen_values = true)]
    pub nus: String,
    #[arg(long, value_enum, default_value_t = KernelChoice::Acue)]
    pub kernel: KernelChoice,
    /// Also compute the rotation-averaged ACUE prediction
    #[arg(long)]
    pub avg: bool,
    #[arg(long, default_value_t = crate::zeta_limits::DEFAULT_QUADRATURE_POINTS)]
    pub quadrature_points: usize,
}

/// One emitted value, optionally set against a reference.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRow {
    pub formula_id: String,
    /// Which identity the value instantiates.
    pub paper_ref: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub j: Option<usize>,
    pub value: ComplexValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<ComplexValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_err: Option<f64>,
}

impl ResultRow {
    fn new(formula_id: &str, paper_ref: &str, value: ComplexValue) -> Self {
        ResultRow {
            formula_id: formula_id.into(),
            paper_ref: paper_ref.into(),
            n: None,
            k: None,
            l: None,
            j: None,
            value,
            oracle: None,
            rel_err: None,
        }
    }

    fn nkl(mut self, n: usize, k: usize, l: usize) -> Self {
        (self.n, self.k, self.l) = (Some(n), Some(k), Some(l));
        self
    }

    fn nj(mut self, n: Option<usize>, j: usize) -> Self {
        (self.n, self.j) = (n, Some(j));
        self
    }

    fn against(mut self, oracle: Option<ComplexValue>) -> Self {
        if let Some(o) = oracle {
            self.rel_err = Some(relative_error(&self.value, &o));
            self.oracle = Some(o);
        }
        self
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Report {
    Rows {
        command: &'static str,
        precision_bits: u32,
        results: Vec<ResultRow>,
    },
    Scan(TaoScan),
    Verify(VerifyReport),
}

/// Output of [`run`]: what to print and how to exit.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Pole(_)
        | Error::Conditioning(_)
        | Error::Domain(_)
        | Error::Contour(_)
        | Error::Capacity { .. } => EXIT_PRECONDITION,
        Error::Dimension(_) | Error::Parse(_) | Error::Precision(_) => EXIT_USAGE,
    }
}

/// Parses and runs one command line.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        exit_code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Outcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(report) => {
            let failed = matches!(&report, Report::Verify(v) if !v.passed);
            Outcome {
                exit_code: if failed { EXIT_VERIFICATION } else { 0 },
                stdout: render(&report, cli.global.format),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            exit_code: exit_code_for(&e),
            stdout: String::new(),
            stderr: format!("acue-lab: {e}\n"),
        },
    }
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let g = &cli.global;
    let prec = Precision::new(g.precision_bits)?;
    let rows = |command, results| Report::Rows {
        command,
        precision_bits: prec.bits(),
        results,
    };
    match &cli.command {
        Command::Moments(a) => {
            let shifts = parse_shift_list(&a.shifts, prec)?;
            let mut spec = MomentSpec::new(a.n, a.k, a.l, shifts)?;
            if a.confluent {
                spec = spec.confluent();
            }
            Ok(rows(
                "moments",
                moment_rows(&spec, a.ensemble, g.enumeration_cap)?,
            ))
        }
        Command::Ratios(a) => {
            let vs = parse_shift_list(&a.vs, prec)?;
            let us = parse_shift_list(&a.us, prec)?;
            if vs.len() != us.len() || a.j.is_some_and(|j| j != vs.len()) {
                return Err(Error::Dimension(format!(
                    "-j {:?} with {} v-shifts and {} u-shifts",
                    a.j,
                    vs.len(),
                    us.len()
                )));
            }
            Ok(rows(
                "ratios",
                ratio_rows(a.n, &vs, &us, a.ensemble, g.enumeration_cap)?,
            ))
        }
        Command::Compare(a) if a.tao_scan => Ok(Report::Scan(tao_scan(
            a.n, a.kmax, a.lmax, a.trials, g.seed, prec,
        )?)),
        Command::Compare(a) => {
            let (Some(k), Some(l), Some(shifts)) = (a.k, a.l, a.shifts.as_deref()) else {
                return Err(Error::Parse(
                    "compare needs --tao-scan, or -k, -l and --shifts".into(),
                ));
            };
            let spec = MomentSpec::new(a.n, k, l, parse_shift_list(shifts, prec)?)?;
            Ok(rows(
                "compare",
                moment_rows(&spec, EnsembleChoice::Both, g.enumeration_cap)?,
            ))
        }
        Command::Verify(a) => {
            let suites: Vec<Suite> = if a.suite == "all" {
                Suite::ALL.to_vec()
            } else {
                a.suite
                    .split(',')
                    .map(|s| s.trim().parse())
                    .collect::<Result<_>>()?
            };
            let config = VerifyConfig {
                n_max: a.n,
                precision: prec,
                seed: g.seed,
                trials: a.trials,
                enumeration_cap: g.enumeration_cap,
            };
            Ok(Report::Verify(run_suites(&config, &suites)?))
        }
        Command::ZetaLimit(a) => {
            let shifts = ScaledShifts::new(
                parse_shift_list(&a.mus, prec)?,
                parse_shift_list(&a.nus, prec)?,
            )?;
            let j = shifts.len();
            let kernel = match a.kernel {
                KernelChoice::Cue => LimitKernel::Cue,
                KernelChoice::Acue => LimitKernel::Acue,
            };
            let id = match kernel {
                LimitKernel::Cue => "cue-ratio-limit",
                LimitKernel::Acue => "acue-ratio-limit",
            };
            let mut results = vec![ResultRow::new(
                id,
                "scaled-ratio-determinant",
                ratio_limit_det(&shifts, kernel)?,
            )
            .nj(None, j)];
            if a.avg {
                let avg = averaged_acue_limit(&shifts, a.quadrature_points)?;
                let direct = r_average_limit(&shifts, a.quadrature_points)?;
                results.push(
                    ResultRow::new(
                        "averaged-acue-limit",
                        "rotation-averaged-contour-integral",
                        avg,
                    )
                    .nj(None, j)
                    .against(Some(direct)),
                );
            }
            Ok(rows("zeta-limit", results))
        }
    }
}

fn moment_rows(spec: &MomentSpec, ensemble: EnsembleChoice, cap: usize) -> Result<Vec<ResultRow>> {
    let (n, k, l) = (spec.n, spec.k, spec.l);
    let mut out = Vec::new();
    let acue = matches!(ensemble, EnsembleChoice::Acue | EnsembleChoice::Both)
        .then(|| acue_moment(spec))
        .transpose()?;
    let cue = matches!(ensemble, EnsembleChoice::Cue | EnsembleChoice::Both)
        .then(|| cue_moment(spec))
        .transpose()?;
    let oracle = if n <= cap {
        Some(moment_by_enumeration(spec, cap)?)
    } else {
        None
    };
    if let Some(a) = &acue {
        out.push(
            ResultRow::new("acue_moment", "acue-moment-phi-determinant", a.clone())
                .nkl(n, k, l)
                .against(oracle.clone()),
        );
    }
    if let Some(c) = &cue {
        out.push(
            ResultRow::new("cue_moment", "cue-moment-rectangular-schur", c.clone()).nkl(n, k, l),
        );
    }
    if let (Some(a), Some(c)) = (&acue, &cue) {
        out.push(
            ResultRow::new("acue_minus_cue", "moment-agreement-for-k-l-le-n", a - c).nkl(n, k, l),
        );
    }
    if let Some(o) = oracle {
        out.push(ResultRow::new("acue_enumeration", "acue-exact-enumeration", o).nkl(n, k, l));
    }
    Ok(out)
}

fn ratio_rows(
    n: usize,
    vs: &[ComplexValue],
    us: &[ComplexValue],
    ensemble: EnsembleChoice,
    cap: usize,
) -> Result<Vec<ResultRow>> {
    let j = vs.len();
    let mut out = Vec::new();
    if matches!(ensemble, EnsembleChoice::Acue | EnsembleChoice::Both) {
        let value = acue_ratio(n, vs, us)?;
        let bos = bos_compose(n, vs, us)?;
        let oracle = if n <= cap {
            Some(ratio_by_enumeration(n, vs, us, cap)?)
        } else {
            None
        };
        out.push(
            ResultRow::new("acue_ratio", "acue-ratio-determinant", value)
                .nj(Some(n), j)
                .against(oracle.clone()),
        );
        out.push(
            ResultRow::new("bos_compose", "one-ratio-composition", bos)
                .nj(Some(n), j)
                .against(oracle.clone()),
        );
        if let Some(o) = oracle {
            out.push(
                ResultRow::new("acue_enumeration", "acue-exact-enumeration", o).nj(Some(n), j),
            );
        }
    }
    if matches!(ensemble, EnsembleChoice::Cue | EnsembleChoice::Both) {
        out.push(
            ResultRow::new("cue_ratio", "cue-ratio-determinant", cue_ratio(n, vs, us)?)
                .nj(Some(n), j),
        );
    }
    Ok(out)
}

pub const CSV_HEADER: &str =
    "formula_id,paper_ref,n,k,l,j,value_re,value_im,oracle_re,oracle_im,rel_err";

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(report),
        OutputFormat::Table => render_table(report),
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    match report {
        Report::Rows { results, .. } => {
            for r in results {
                let (vr, vi) = r.value.to_decimal_strings();
                let (or, oi) = r.oracle.as_ref().map(|o| o.to_decimal_strings()).unzip();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{vr},{vi},{},{},{}",
                    r.formula_id,
                    r.paper_ref,
                    opt(r.n),
                    opt(r.k),
                    opt(r.l),
                    opt(r.j),
                    opt(or),
                    opt(oi),
                    opt(r.rel_err)
                );
            }
        }
        Report::Scan(scan) => {
            for c in &scan.cells {
                let _ = writeln!(
                    out,
                    "tao_scan_cell,moment-agreement-for-k-l-le-n,{},{},{},,{:e},0,,,",
                    scan.n, c.k, c.l, c.max_rel_diff
                );
            }
        }
        Report::Verify(v) => {
            for s in &v.suites {
                let _ = writeln!(
                    out,
                    "verify_{},{},{},,,,{:e},0,,,",
                    s.suite, s.suite, v.config.n_max, s.max_rel_err
                );
            }
        }
    }
    out
}

fn render_table(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Rows { results, .. } => {
            let _ = writeln!(
                out,
                "{:<20} {:>3} {:>3} {:>3} {:>3}  {:<48} {:>10}",
                "formula", "n", "k", "l", "j", "value", "rel_err"
            );
            for r in results {
                let _ = writeln!(
                    out,
                    "{:<20} {:>3} {:>3} {:>3} {:>3}  {:<48} {:>10}",
                    r.formula_id,
                    opt(r.n),
                    opt(r.k),
                    opt(r.l),
                    opt(r.j),
                    r.value.to_string(),
                    r.rel_err.map(|e| format!("{e:.2e}")).unwrap_or_default()
                );
            }
        }
        Report::Scan(scan) => {
            let _ = writeln!(
                out,
                "N = {}: max |acue - cue| / max(1, |cue|) over {} trials",
                scan.n, scan.trials
            );
            let lmax = scan.cells.iter().map(|c| c.l).max().unwrap_or(0);
            let _ = write!(out, "{:>6}", "K\\L");
            for l in 1..=lmax {
                let _ = write!(out, " {l:>10}");
            }
            out.push('\n');
            for row in scan.cells.chunks(lmax) {
                let _ = write!(out, "{:>6}", row[0].k);
                for c in row {
                    let cell = if c.agree {
                        "0".to_string()
                    } else {
                        format!("{:.2e}", c.max_rel_diff)
                    };
                    let _ = write!(out, " {cell:>10}");
                }
                out.push('\n');
            }
            let _ = writeln!(
                out,
                "zero set is {} the K, L <= N rectangle",
                if scan.matches_prediction() {
                    "exactly"
                } else {
                    "NOT"
                }
            );
        }
        Report::Verify(v) => {
            let _ = writeln!(
                out,
                "{:<20} {:>7} {:>12} {:>12}  result",
                "suite", "checks", "max_rel_err", "tolerance"
            );
            for s in &v.suites {
                let _ = writeln!(
                    out,
                    "{:<20} {:>7} {:>12.3e} {:>12.3e}  {}",
                    s.suite.name(),
                    s.checks,
                    s.max_rel_err,
                    s.tolerance,
                    if s.passed { "PASS" } else { "FAIL" }
                );
                for f in &s.failures {
                    let _ = writeln!(out, "    {f}");
                }
            }
        }
    }
    out
}

/// Parses one complex number: `a`, `a+bi`, `a-bi`, `bi`, `i`, or `(re,im)`.
/// Decimals are read directly at the target precision.
pub fn parse_complex(text: &str, prec: Precision) -> Result<ComplexValue> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty complex number".into()));
    }
    if let Some(inner) = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        let (re, im) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("'{text}': expected (re,im)")))?;
        return ComplexValue::parse_parts(prec, re, im);
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return ComplexValue::parse_parts(prec, &t, "0");
    };
    // the sign that starts the imaginary part: not leading, not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| matches!(bytes[p], b'+' | b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(p) => (&body[..p], &body[p..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        s => s,
    };
    ComplexValue::parse_parts(prec, re, im)
        .map_err(|_| Error::Parse(format!("'{text}' is not a complex number")))
}

/// Comma-separated list of complex numbers; commas inside parentheses belong
/// to a `(re,im)` pair.
pub fn parse_shift_list(text: &str, prec: Precision) -> Result<Vec<ComplexValue>> {
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (p, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(&text[start..p]);
                start = p + 1;
            }
            _ => {}
        }
    }
    items.push(&text[start..]);
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in '{text}'")));
    }
    items.into_iter().map(|s| parse_complex(s, prec)).collect()
}
