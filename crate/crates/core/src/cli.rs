//! Batch front end: `cdop <command> --map SPEC --alpha A [...]`.
//!
//! All computation lives in the library modules; this file parses flags and
//! an optional TOML config into a [`RunConfig`], dispatches, and renders
//! records as JSON, CSV or a short human summary.
//!
//! Exit codes: 0 ok, 2 usage or spec error, 3 numerical failure (including
//! failed `verify` checks).

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::counting::{counting, cov_check};
use crate::diagnostics::{self, BoundednessReport};
use crate::error::Error;
use crate::maps::{format_complex, parse_complex, SelfMap};
use crate::operator;
use crate::series::PowerSeries;
use crate::space::{self, DiskQuadrature, QuadConfig, SpaceParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const KERNEL_SUITE_SEED: u64 = 0x6b65_726e;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Norm,
    Diagnose,
    Hs,
    Counting,
    Profile,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Cov,
    Kernel,
    #[default]
    All,
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let a: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    SpaceParams::new(a).map(|p| p.alpha()).map_err(|_| format!("alpha = {a} is outside the valid range 0 < alpha < 1"))
}

#[derive(Debug, Parser)]
#[command(name = "cdop", version, about = "Composition-differentiation operators on weighted Dirichlet spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Operator norm: closed form for dilations, Galerkin truncation otherwise
    Norm(CommonArgs),
    /// Radial profile of B(w) with a compactness verdict
    Diagnose(CommonArgs),
    /// Hilbert-Schmidt norm by basis sum and by the area integral
    Hs(CommonArgs),
    /// Counting function N(w) at one point
    Counting(CommonArgs),
    /// Per-shell table of B(w) for plotting
    Profile(CommonArgs),
    /// Change-of-variable and reproducing-kernel checks
    Verify(VerifyArgs),
}

#[derive(Debug, Default, clap::Args)]
pub struct CommonArgs {
    /// Map spec: dilation:R, auto:BETA[,ETA], lens:DELTA, exp, poly:C0,C1,...
    #[arg(long)]
    pub map: Option<String>,
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: Option<f64>,
    /// Matrix size for `norm`, term count for `hs`
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub quad_radial: Option<usize>,
    #[arg(long)]
    pub quad_angular: Option<usize>,
    /// Number of shells 1 - 2^-k
    #[arg(long)]
    pub shells: Option<u32>,
    /// Point for `counting`, e.g. 0.25 or 0.1-0.3i
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// TOML file with the same keys; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub map: Option<String>,
    pub alpha: Option<SpaceParams>,
    pub order: Option<usize>,
    pub quad: QuadConfig,
    pub shells: u32,
    pub points_per_shell: usize,
    pub w: Option<String>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub suite: Suite,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        Self {
            command,
            map: None,
            alpha: None,
            order: None,
            quad: QuadConfig::default(),
            shells: diagnostics::DEFAULT_SHELL_COUNT,
            points_per_shell: diagnostics::DEFAULT_POINTS_PER_SHELL,
            w: None,
            format: if command == CommandKind::Profile { Format::Csv } else { Format::Human },
            out: None,
            suite: Suite::All,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadFile {
    radial: Option<usize>,
    angular: Option<usize>,
    cluster_exponent: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    map: Option<String>,
    alpha: Option<SpaceParams>,
    order: Option<usize>,
    shells: Option<u32>,
    points_per_shell: Option<usize>,
    w: Option<String>,
    format: Option<Format>,
    out: Option<PathBuf>,
    suite: Option<Suite>,
    quad: Option<QuadFile>,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonConvergence { .. }
            | Error::RootSolver { .. }
            | Error::NonFinite { .. }
            | Error::DivergentSeries { .. }
            | Error::OrderCap { .. } => EXIT_NUMERICAL,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Builds the run configuration: defaults, then the TOML file, then flags.
pub fn resolve(command: CommandKind, args: &CommonArgs, suite: Option<Suite>) -> CliResult<RunConfig> {
    let mut cfg = RunConfig::new(command);
    if let Some(path) = &args.config {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        let file: FileConfig =
            toml::from_str(&text).map_err(|e| CliError::usage(format!("bad config {}: {e}", path.display())))?;
        cfg.map = file.map.or(cfg.map);
        cfg.alpha = file.alpha.or(cfg.alpha);
        cfg.order = file.order.or(cfg.order);
        cfg.shells = file.shells.unwrap_or(cfg.shells);
        cfg.points_per_shell = file.points_per_shell.unwrap_or(cfg.points_per_shell);
        cfg.w = file.w.or(cfg.w);
        cfg.format = file.format.unwrap_or(cfg.format);
        cfg.out = file.out.or(cfg.out);
        cfg.suite = file.suite.unwrap_or(cfg.suite);
        if let Some(q) = file.quad {
            cfg.quad.radial = q.radial.unwrap_or(cfg.quad.radial);
            cfg.quad.angular = q.angular.unwrap_or(cfg.quad.angular);
            cfg.quad.cluster_exponent = q.cluster_exponent.unwrap_or(cfg.quad.cluster_exponent);
        }
    }
    if let Some(m) = &args.map {
        cfg.map = Some(m.clone());
    }
    if let Some(a) = args.alpha {
        cfg.alpha = Some(SpaceParams::new(a)?);
    }
    cfg.order = args.order.or(cfg.order);
    cfg.quad.radial = args.quad_radial.unwrap_or(cfg.quad.radial);
    cfg.quad.angular = args.quad_angular.unwrap_or(cfg.quad.angular);
    cfg.shells = args.shells.unwrap_or(cfg.shells);
    cfg.w = args.w.clone().or(cfg.w);
    cfg.format = args.format.unwrap_or(cfg.format);
    cfg.out = args.out.clone().or(cfg.out);
    cfg.suite = suite.unwrap_or(cfg.suite);
    Ok(cfg)
}

impl Cli {
    pub fn into_config(self) -> CliResult<RunConfig> {
        match self.command {
            Command::Norm(a) => resolve(CommandKind::Norm, &a, None),
            Command::Diagnose(a) => resolve(CommandKind::Diagnose, &a, None),
            Command::Hs(a) => resolve(CommandKind::Hs, &a, None),
            Command::Counting(a) => resolve(CommandKind::Counting, &a, None),
            Command::Profile(a) => resolve(CommandKind::Profile, &a, None),
            Command::Verify(v) => resolve(CommandKind::Verify, &v.common, Some(v.suite)),
        }
    }
}

fn require_map(cfg: &RunConfig) -> CliResult<SelfMap> {
    let spec = cfg.map.as_deref().ok_or_else(|| CliError::usage("--map is required"))?;
    Ok(spec.parse()?)
}

fn require_alpha(cfg: &RunConfig) -> CliResult<SpaceParams> {
    cfg.alpha.ok_or_else(|| CliError::usage("--alpha is required (0 < alpha < 1)"))
}

fn quadrature(cfg: &RunConfig) -> CliResult<DiskQuadrature> {
    Ok(DiskQuadrature::from_config(&cfg.quad)?)
}

/// Rendered output plus the exit code it should produce.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn csv_records<T: Serialize>(rows: &[T]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::usage(format!("csv output failed: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::usage(format!("csv output failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

fn opt4(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.4}"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormRecord {
    pub schema: u32,
    pub map: String,
    pub alpha: f64,
    pub closed_form: Option<f64>,
    pub x0: Option<f64>,
    pub eta: Option<u64>,
    pub matrix_norm: f64,
    pub truncation_order: usize,
    pub gap: Option<f64>,
}

pub fn norm_record(m: &SelfMap, p: SpaceParams, order: usize) -> crate::Result<NormRecord> {
    let closed = match m {
        SelfMap::Dilation { r } => Some(operator::closed_form_dilation_norm(*r, p)?),
        _ => None,
    };
    let mat = operator::build_matrix(m, p, order, order)?;
    let matrix_norm = operator::operator_norm(&mat, operator::DEFAULT_NORM_TOL)?;
    Ok(NormRecord {
        schema: 1,
        map: m.to_string(),
        alpha: p.alpha(),
        closed_form: closed.map(|c| c.norm),
        x0: closed.map(|c| c.x0),
        eta: closed.map(|c| c.eta),
        matrix_norm,
        truncation_order: order,
        gap: closed.map(|c| (c.norm - matrix_norm).abs()),
    })
}

fn cmd_norm(cfg: &RunConfig) -> CliResult<Outcome> {
    let m = require_map(cfg)?;
    let p = require_alpha(cfg)?;
    if matches!(m, SelfMap::SingularExp) {
        return Err(CliError::usage(
            "the exp map has no power series at 0, so no matrix norm is available; \
             run `cdop diagnose --map exp` for the non-compactness evidence instead",
        ));
    }
    let rec = norm_record(&m, p, cfg.order.unwrap_or(operator::DEFAULT_MATRIX_ORDER))?;
    let text = match cfg.format {
        Format::Json => json(&rec),
        Format::Csv => csv_records(&[&rec])?,
        Format::Human => {
            let mut s = format!("map {}  alpha {:.4}\n", rec.map, rec.alpha);
            if let (Some(c), Some(x0), Some(eta)) = (rec.closed_form, rec.x0, rec.eta) {
                s += &format!("closed form   {c:.4}  (x0 {x0:.4}, eta {eta})\n");
            }
            s += &format!("matrix norm   {:.4}  (N = M = {})\n", rec.matrix_norm, rec.truncation_order);
            if let Some(g) = rec.gap {
                s += &format!("gap           {g:.4e}\n");
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn render_report(rep: &BoundednessReport, format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Json => {
            let mut s = rep.to_json();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut buf = Vec::new();
            rep.write_csv(&mut buf)?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
        Format::Human => {
            let mut s = format!("map {}  alpha {:.4}\n", rep.map, rep.alpha);
            for sh in &rep.shells {
                s += &format!("  |w| {:.6}  max B {}\n", sh.radius, opt4(sh.max_b));
            }
            s += &format!("sup estimate  {:.4}\n", rep.sup_estimate);
            s += &format!("outer trend   {}\n", kebab(&rep.outer_trend));
            s += &format!("verdict       {}\n", kebab(&rep.verdict));
            for d in &rep.diagnostics {
                s += &format!("note: {d}\n");
            }
            s
        }
    })
}

fn kebab<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|x| x.as_str().map(str::to_string)).unwrap_or_default()
}

fn profile_report(cfg: &RunConfig) -> CliResult<BoundednessReport> {
    let m = require_map(cfg)?;
    let p = require_alpha(cfg)?;
    let shells = diagnostics::default_shells(cfg.shells);
    Ok(diagnostics::radial_profile(&m, p, &shells, cfg.points_per_shell)?)
}

fn report_code(rep: &BoundednessReport) -> i32 {
    if rep.shells.iter().all(|s| s.max_b.is_none()) {
        EXIT_NUMERICAL
    } else {
        EXIT_OK
    }
}

fn cmd_diagnose(cfg: &RunConfig) -> CliResult<Outcome> {
    let rep = profile_report(cfg)?;
    Ok(Outcome { text: render_report(&rep, cfg.format)?, code: report_code(&rep) })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub shell: f64,
    pub max_b: Option<f64>,
    pub argmax_angle: Option<f64>,
    pub failures: usize,
    pub boundary_flags: usize,
}

fn cmd_profile(cfg: &RunConfig) -> CliResult<Outcome> {
    let rep = profile_report(cfg)?;
    let rows: Vec<ProfileRow> = rep
        .shells
        .iter()
        .map(|s| ProfileRow {
            shell: s.radius,
            max_b: s.max_b,
            argmax_angle: s.argmax_angle,
            failures: s.failures,
            boundary_flags: s.boundary_flags,
        })
        .collect();
    let text = match cfg.format {
        Format::Csv => csv_records(&rows)?,
        Format::Json => json(&rows),
        Format::Human => render_report(&rep, Format::Human)?,
    };
    Ok(Outcome { text, code: report_code(&rep) })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HsRecord {
    pub schema: u32,
    pub map: String,
    pub alpha: f64,
    pub terms: usize,
    /// `sqrt(Σ ‖D_φ e_n‖²)`.
    pub basis: f64,
    pub basis_last_term: f64,
    /// Area integral by quadrature.
    pub integral: f64,
    /// The same integral by coefficients, when available.
    pub integral_series: Option<f64>,
    pub integral_routes_gap: Option<f64>,
    pub basis_integral_gap: f64,
    pub warning: Option<String>,
}

pub fn hs_record(m: &SelfMap, p: SpaceParams, terms: usize, q: &DiskQuadrature) -> crate::Result<HsRecord> {
    let basis = operator::hs_norm_basis(m, p, terms)?;
    let (integral, warning) = operator::hs_norm_integral_checked(m, p, q)?;
    let integral_series = operator::hs_integral_series(m, p).ok();
    Ok(HsRecord {
        schema: 1,
        map: m.to_string(),
        alpha: p.alpha(),
        terms,
        basis: basis.norm,
        basis_last_term: basis.last_term,
        integral,
        integral_series,
        integral_routes_gap: integral_series.map(|s| (s - integral).abs() / integral),
        basis_integral_gap: (basis.norm - integral).abs() / integral,
        warning,
    })
}

fn cmd_hs(cfg: &RunConfig) -> CliResult<Outcome> {
    let m = require_map(cfg)?;
    let p = require_alpha(cfg)?;
    let rec = hs_record(&m, p, cfg.order.unwrap_or(operator::DEFAULT_HS_TERMS), &quadrature(cfg)?)?;
    let text = match cfg.format {
        Format::Json => json(&rec),
        Format::Csv => csv_records(&[&rec])?,
        Format::Human => {
            let mut s = format!("map {}  alpha {:.4}\n", rec.map, rec.alpha);
            s += &format!("basis sum         {:.4}  ({} terms, last {:.4e})\n", rec.basis, rec.terms, rec.basis_last_term);
            s += &format!("area integral     {:.4}\n", rec.integral);
            if let (Some(v), Some(g)) = (rec.integral_series, rec.integral_routes_gap) {
                s += &format!("integral, series  {v:.4}  (relative gap {g:.4e})\n");
            }
            s += &format!("basis vs integral relative gap {:.4e}\n", rec.basis_integral_gap);
            if let Some(w) = &rec.warning {
                s += &format!("warning: {w}\n");
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountingRecord {
    pub schema: u32,
    pub map: String,
    pub alpha: f64,
    pub w: String,
    pub value: f64,
    pub b: f64,
    pub route: crate::counting::CountingRoute,
    pub boundary_ambiguous: bool,
}

fn cmd_counting(cfg: &RunConfig) -> CliResult<Outcome> {
    let m = require_map(cfg)?;
    let p = require_alpha(cfg)?;
    let w_text = cfg.w.as_deref().ok_or_else(|| CliError::usage("--w is required"))?;
    let w = parse_complex(w_text).map_err(CliError::usage)?;
    let s = counting(&m, p, w)?;
    let rec = CountingRecord {
        schema: 1,
        map: m.to_string(),
        alpha: p.alpha(),
        w: format_complex(w),
        value: s.value,
        b: s.value / (1.0 - w.norm_sqr()).powf(p.alpha() + 2.0),
        route: s.route,
        boundary_ambiguous: s.boundary_ambiguous,
    };
    let text = match cfg.format {
        Format::Json => json(&rec),
        Format::Csv => csv_records(&[&rec])?,
        Format::Human => {
            let mut s = format!("map {}  alpha {:.4}  w {}\n", rec.map, rec.alpha, rec.w);
            s += &format!("N(w)  {:.4}\nB(w)  {:.4}\nroute {}\n", rec.value, rec.b, kebab(&rec.route));
            if rec.boundary_ambiguous {
                s += "warning: a preimage lies within 1e-10 of the unit circle\n";
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    fn new(name: String, value: f64, tolerance: f64) -> Self {
        Self { name, value, tolerance, passed: value <= tolerance }
    }
}

/// Maps used by the change-of-variable suite.
pub fn cov_suite_maps() -> Vec<SelfMap> {
    vec![
        SelfMap::dilation(Complex64::new(0.5, 0.0)).expect("valid map"),
        SelfMap::polynomial_real(&[0.0, 0.0, 1.0]).expect("valid map"),
        SelfMap::polynomial_real(&[0.0, 0.9, 0.05]).expect("valid map"),
    ]
}

/// Change-of-variable residuals, tolerance `1e-3`, for each suite map, test
/// exponents `0, 1, 2` and `α ∈ {0.25, 0.5, 0.75}`.
pub fn cov_suite(q: &DiskQuadrature) -> crate::Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in cov_suite_maps() {
        for k in 0..=2 {
            for a in [0.25, 0.5, 0.75] {
                let c = cov_check(&m, SpaceParams::new(a)?, k, q)?;
                out.push(CheckResult::new(format!("cov {m} m={k} alpha={a}"), c.residual, 1e-3));
            }
        }
    }
    Ok(out)
}

fn random_polynomial(rng: &mut ChaCha8Rng) -> PowerSeries {
    let degree = rng.gen_range(0..=20);
    PowerSeries::new((0..=degree).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect())
}

fn random_point(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Worst errors of `⟨f, k_w⟩ = f(w)` and `⟨f, k_w^{(1)}⟩ = f'(w)` over 50
/// seeded random polynomials of degree `≤ 20` and 50 points `|w| ≤ 0.8`,
/// tolerance `1e-10`.
pub fn kernel_suite(p: SpaceParams, seed: u64) -> crate::Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polys: Vec<PowerSeries> = (0..50).map(|_| random_polynomial(&mut rng)).collect();
    let points: Vec<Complex64> = (0..50).map(|_| random_point(&mut rng, 0.8)).collect();
    let mut value_err: f64 = 0.0;
    let mut deriv_err: f64 = 0.0;
    for &w in &points {
        let k = space::kernel(w, p, 20)?;
        let dk = space::dkernel(w, p, 20)?;
        for f in &polys {
            value_err = value_err.max((space::inner(f, &k, p) - f.evaluate(w)).norm());
            deriv_err = deriv_err.max((space::inner(f, &dk, p) - f.derive().evaluate(w)).norm());
        }
    }
    let a = p.alpha();
    Ok(vec![
        CheckResult::new(format!("kernel value alpha={a}"), value_err, 1e-10),
        CheckResult::new(format!("kernel derivative alpha={a}"), deriv_err, 1e-10),
    ])
}

fn cmd_verify(cfg: &RunConfig) -> CliResult<Outcome> {
    let mut checks = Vec::new();
    if matches!(cfg.suite, Suite::Kernel | Suite::All) {
        let alphas = match cfg.alpha {
            Some(p) => vec![p],
            None => [0.25, 0.5, 0.75].map(|a| SpaceParams::new(a).expect("valid alpha")).to_vec(),
        };
        for p in alphas {
            checks.extend(kernel_suite(p, KERNEL_SUITE_SEED)?);
        }
    }
    if matches!(cfg.suite, Suite::Cov | Suite::All) {
        checks.extend(cov_suite(&quadrature(cfg)?)?);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let text = match cfg.format {
        Format::Json => json(&checks),
        Format::Csv => csv_records(&checks)?,
        Format::Human => {
            let mut s = String::new();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                s += &format!("{tag}  {}  {:.4e} (tol {:.0e})\n", c.name, c.value, c.tolerance);
            }
            s += &format!("{} checks, {failed} failed\n", checks.len());
            s
        }
    };
    Ok(Outcome { text, code: if failed == 0 { EXIT_OK } else { EXIT_NUMERICAL } })
}

pub fn execute(cfg: &RunConfig) -> CliResult<Outcome> {
    match cfg.command {
        CommandKind::Norm => cmd_norm(cfg),
        CommandKind::Diagnose => cmd_diagnose(cfg),
        CommandKind::Hs => cmd_hs(cfg),
        CommandKind::Counting => cmd_counting(cfg),
        CommandKind::Profile => cmd_profile(cfg),
        CommandKind::Verify => cmd_verify(cfg),
    }
}

/// Parses `args`, runs, writes output to `--out` or `stdout`, and returns the
/// exit code.
pub fn run_from_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = target.write_all(text.as_bytes());
            return e.exit_code();
        }
    };
    let result = cli.into_config().and_then(|cfg| Ok((execute(&cfg)?, cfg.out)));
    match result {
        Ok((outcome, out)) => {
            let written = match out {
                Some(path) => fs::write(&path, &outcome.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => outcome.code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}
