//! Command-line front end: configuration (defaults ← key=value config file
//! ← flags), dispatch to the owning modules, and bit-stable report emission.
//!
//! Exit codes: 0 when every non-report-only check passes, 1 when any fails,
//! 2 on invalid input or an unwritable output path.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::otsuki::{self, OtsukiProfile};
use crate::report::{self, Check, ReportEnvelope};
use crate::{clifford, measure, pinching, spectra, suite, Variant};

/// Environment variable naming an optional config file; `--config` wins.
pub const CONFIG_ENV: &str = "CLIFFORDLAB_CONFIG";

const SWEEP_HEADER: &str =
    "n,lambda0,lambda_min,lambda_max,minA2,maxA2,period,sigma1,sigmaK,perdomo_margin,keyeq_residual";
const DELTA_HEADER: &str = "n,k,variant,root_x,delta";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// λ0 as given on the command line: absent, a single value, or a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Lambda0 {
    Unset,
    Single { value: f64 },
    Range { start: f64, stop: f64, count: u32 },
}

fn parse_lambda0(text: &str) -> Result<Lambda0> {
    let bad = |t: &str| Error::Domain(format!("cannot parse lambda0 '{t}'"));
    if let Some((a, rest)) = text.split_once(':') {
        let (b, c) = rest.split_once(':').ok_or_else(|| bad(text))?;
        let start: f64 = a.trim().parse().map_err(|_| bad(text))?;
        let stop: f64 = b.trim().parse().map_err(|_| bad(text))?;
        let count: u32 = c.trim().parse().map_err(|_| bad(text))?;
        if count < 2 {
            return Err(Error::Domain(format!("range count must be >= 2, got {count}")));
        }
        if !(start > 0.0 && stop > start) {
            return Err(Error::Domain(format!(
                "range needs 0 < start < stop, got {start}:{stop}"
            )));
        }
        Ok(Lambda0::Range { start, stop, count })
    } else {
        let value: f64 = text.trim().parse().map_err(|_| bad(text))?;
        Ok(Lambda0::Single { value })
    }
}

/// Fully merged configuration, echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub kmax: u32,
    pub lambda0: Lambda0,
    pub step: f64,
    pub variant: Variant,
    pub out: Option<String>,
    pub format: Format,
    pub seed: u64,
}

impl RunConfig {
    fn defaults(command: &str) -> Self {
        Self {
            command: command.to_string(),
            n: 3,
            m: 1,
            k: 2,
            kmax: 5,
            lambda0: Lambda0::Unset,
            step: otsuki::DEFAULT_STEP,
            variant: Variant::Corrected,
            out: None,
            format: Format::Json,
            seed: 42,
        }
    }

    fn apply_kv(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |k: &str, v: &str| Error::Domain(format!("bad config value {k}={v}"));
        match key {
            "n" => self.n = value.parse().map_err(|_| bad(key, value))?,
            "m" => self.m = value.parse().map_err(|_| bad(key, value))?,
            "k" => self.k = value.parse().map_err(|_| bad(key, value))?,
            "kmax" => self.kmax = value.parse().map_err(|_| bad(key, value))?,
            "lambda0" => self.lambda0 = parse_lambda0(value)?,
            "step" => self.step = value.parse().map_err(|_| bad(key, value))?,
            "variant" => {
                self.variant = match value {
                    "corrected" => Variant::Corrected,
                    "printed" => Variant::Printed,
                    _ => return Err(bad(key, value)),
                }
            }
            "out" => self.out = Some(value.to_string()),
            "format" => {
                self.format = match value {
                    "csv" => Format::Csv,
                    "json" => Format::Json,
                    _ => return Err(bad(key, value)),
                }
            }
            "seed" => self.seed = value.parse().map_err(|_| bad(key, value))?,
            _ => return Err(Error::Domain(format!("unknown config key '{key}'"))),
        }
        Ok(())
    }

    fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Domain(format!(
                    "config {} line {}: expected key=value",
                    path.display(),
                    lineno + 1
                ))
            })?;
            self.apply_kv(key.trim(), value.trim())?;
        }
        Ok(())
    }

    fn single_lambda0(&self) -> Result<f64> {
        match self.lambda0 {
            Lambda0::Single { value } => Ok(value),
            Lambda0::Unset => Err(Error::Domain("--lambda0 is required".into())),
            Lambda0::Range { .. } => {
                Err(Error::Domain("this command needs a single lambda0, not a range".into()))
            }
        }
    }
}

#[derive(Args, Clone, Default)]
struct RawArgs {
    /// Hypersurface dimension n.
    #[arg(long)]
    n: Option<u32>,
    /// Clifford factor dimension m.
    #[arg(long)]
    m: Option<u32>,
    /// Moment order k.
    #[arg(long)]
    k: Option<u32>,
    /// Largest moment order.
    #[arg(long)]
    kmax: Option<u32>,
    /// Starting curvature: a number, or a grid start:stop:count.
    #[arg(long)]
    lambda0: Option<String>,
    /// Integrator step.
    #[arg(long)]
    step: Option<f64>,
    /// Coefficient variant for the sign polynomial and test family.
    #[arg(long, value_enum)]
    variant: Option<Variant>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Seed for the random-spectrum stream.
    #[arg(long)]
    seed: Option<u64>,
    /// key=value config file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Parser)]
#[command(
    name = "cliffordlab",
    version,
    about = "Numerical checks for curvature identities of minimal hypersurfaces in spheres"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandLine,
}

#[derive(Subcommand)]
enum CommandLine {
    /// Exact Clifford model: spectrum, moments, volume, Euler check.
    Clifford(RawArgs),
    /// Pinching thresholds delta_k(n) for k = 2..=kmax.
    Delta(RawArgs),
    /// Integrate one profile and report moments and residuals.
    Profile(RawArgs),
    /// Identity residuals on one profile, both coefficient variants.
    Verify(RawArgs),
    /// Scan a lambda0 grid, one row per orbit.
    Sweep(RawArgs),
    /// Seeded random-spectrum check of the dimension-4 curvature algebra.
    Curvature4(RawArgs),
    /// Run every acceptance check.
    Suite(RawArgs),
}

impl CommandLine {
    fn split(&self) -> (&'static str, &RawArgs) {
        match self {
            CommandLine::Clifford(a) => ("clifford", a),
            CommandLine::Delta(a) => ("delta", a),
            CommandLine::Profile(a) => ("profile", a),
            CommandLine::Verify(a) => ("verify", a),
            CommandLine::Sweep(a) => ("sweep", a),
            CommandLine::Curvature4(a) => ("curvature4", a),
            CommandLine::Suite(a) => ("suite", a),
        }
    }
}

fn build_config(command: &str, raw: &RawArgs) -> Result<RunConfig> {
    let mut cfg = RunConfig::defaults(command);
    let file = raw
        .config
        .clone()
        .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    if let Some(path) = file {
        cfg.apply_file(&path)?;
    }
    if let Some(v) = raw.n {
        cfg.n = v;
    }
    if let Some(v) = raw.m {
        cfg.m = v;
    }
    if let Some(v) = raw.k {
        cfg.k = v;
    }
    if let Some(v) = raw.kmax {
        cfg.kmax = v;
    }
    if let Some(ref v) = raw.lambda0 {
        cfg.lambda0 = parse_lambda0(v)?;
    }
    if let Some(v) = raw.step {
        cfg.step = v;
    }
    if let Some(v) = raw.variant {
        cfg.variant = v;
    }
    if let Some(ref v) = raw.out {
        cfg.out = Some(v.display().to_string());
    }
    if let Some(v) = raw.format {
        cfg.format = v;
    }
    if let Some(v) = raw.seed {
        cfg.seed = v;
    }
    if cfg.step <= 0.0 || !cfg.step.is_finite() {
        return Err(Error::Domain(format!("step must be positive, got {}", cfg.step)));
    }
    Ok(cfg)
}

fn open_out(out: &Option<String>) -> Result<Box<dyn Write>> {
    match out {
        None => Ok(Box::new(std::io::stdout().lock())),
        Some(path) => Ok(Box::new(std::fs::File::create(path)?)),
    }
}

/// Emit the envelope (JSON) or the command's tabular rows (CSV, falling back
/// to the check list) and report whether every check passed.
fn finish<P: Serialize>(
    cfg: &RunConfig,
    payload: P,
    checks: Vec<Check>,
    csv: Option<(&str, Vec<Vec<String>>)>,
) -> Result<bool> {
    let envelope = ReportEnvelope::new(cfg.clone(), payload, checks);
    let mut writer = open_out(&cfg.out)?;
    match cfg.format {
        Format::Json => report::emit_json(&envelope, writer.as_mut())?,
        Format::Csv => match csv {
            Some((header, rows)) => report::emit_csv(header, rows, writer.as_mut())?,
            None => report::checks_csv(&envelope.checks, writer.as_mut())?,
        },
    }
    writer.flush()?;
    Ok(envelope.all_passed())
}

#[derive(Serialize)]
struct CliffordPayload {
    n: u32,
    m: u32,
    radii: (f64, f64),
    spectrum: Vec<(f64, u32)>,
    abs_a2: f64,
    sigma: BTreeMap<u32, f64>,
    volume: f64,
    gbc: Option<clifford::GbcCheck>,
    classification: Option<spectra::ClassifyFlags>,
}

fn run_clifford(cfg: &RunConfig) -> Result<bool> {
    let model = clifford::clifford_model(cfg.n, cfg.m)?;
    let abs_a2 = model.spectrum.power_sum(2);
    let mut sigma = BTreeMap::new();
    let mut sigma_err = 0.0f64;
    for k in 1..=cfg.kmax.max(1) {
        let v = clifford::clifford_sigma(cfg.n, cfg.m, k)?;
        sigma_err = sigma_err.max(crate::rel_err(v, f64::from(cfg.n).powi(k as i32)));
        sigma.insert(k, v);
    }
    let mut checks = vec![
        Check::bounded("trace_is_zero", model.spectrum.trace().abs(), 1e-12),
        Check::bounded("abs_a2_equals_n", crate::rel_err(abs_a2, f64::from(cfg.n)), 1e-13),
        Check::bounded("sigma_equals_n_pow_k", sigma_err, 1e-12),
    ];
    let (gbc, classification) = if cfg.n == 4 {
        let g = clifford::clifford_gbc_check(cfg.m)?;
        checks.push(Check::bounded(
            "gbc_euler_identity",
            crate::residual(g.lhs, g.rhs),
            1e-10,
        ));
        (Some(g), Some(spectra::classify(&model.spectrum)?))
    } else {
        (None, None)
    };
    let payload = CliffordPayload {
        n: cfg.n,
        m: cfg.m,
        radii: model.radii,
        spectrum: model.spectrum.entries().to_vec(),
        abs_a2,
        sigma,
        volume: clifford::clifford_volume(cfg.n, cfg.m)?,
        gbc,
        classification,
    };
    finish(cfg, payload, checks, None)
}

#[derive(Serialize)]
struct DeltaPayload {
    table: pinching::PinchingTable,
}

fn run_delta(cfg: &RunConfig) -> Result<bool> {
    let table = pinching::monotonicity_table(cfg.n, cfg.kmax, cfg.variant)?;
    let nf = f64::from(cfg.n);
    let delta2 = table.entries[0].delta;
    let checks = vec![
        Check::bounded(
            "delta2_closed_form",
            crate::rel_err(delta2, nf * (nf - 2.0) / (nf + 2.0)),
            1e-12,
        ),
        Check::bounded(
            "roots_below_clifford_value",
            table
                .entries
                .iter()
                .map(|e| e.root_x - 1.0 / (nf - 1.0))
                .fold(f64::NEG_INFINITY, f64::max),
            0.0,
        ),
    ];
    let rows = table
        .entries
        .iter()
        .map(|e| {
            vec![
                cfg.n.to_string(),
                e.k.to_string(),
                e.variant.to_string(),
                report::fmt_float(e.root_x),
                report::fmt_float(e.delta),
            ]
        })
        .collect();
    finish(cfg, DeltaPayload { table }, checks, Some((DELTA_HEADER, rows)))
}

#[derive(Serialize)]
struct OrbitSummary {
    n: u32,
    lambda0: f64,
    step: f64,
    period: f64,
    energy: f64,
    lambda_min: f64,
    lambda_max: f64,
    energy_drift: f64,
    degenerate: bool,
}

impl OrbitSummary {
    fn of(profile: &OtsukiProfile, lambda0: f64, step: f64) -> Self {
        Self {
            n: profile.n,
            lambda0,
            step,
            period: profile.period,
            energy: profile.energy,
            lambda_min: profile.lambda_min,
            lambda_max: profile.lambda_max,
            energy_drift: profile.energy_drift,
            degenerate: profile.degenerate,
        }
    }
}

#[derive(Serialize)]
struct ProfilePayload {
    orbit: OrbitSummary,
    sigma_report: measure::SigmaReport,
    /// Dimension-4 Euler combination per period; report-only, open question.
    euler_period_integral: Option<f64>,
}

fn run_profile(cfg: &RunConfig) -> Result<bool> {
    let lambda0 = cfg.single_lambda0()?;
    let profile = otsuki::integrate_profile(cfg.n, lambda0, cfg.step)?;
    let sr = measure::sigma_report(&profile, cfg.kmax.max(2))?;
    let mut checks = vec![
        Check::bounded(
            "energy_drift",
            profile.energy_drift,
            otsuki::certified_drift_bound(cfg.step),
        ),
        Check::bounded("sigma1_minus_n", -sr.perdomo_margin, 1e-8),
        Check::bounded("keyeq_residual", sr.keyeq_residual, 1e-6),
        Check::bounded(
            "sigma_identity_residual",
            sr.identity_residual.values().fold(0.0f64, |m, &r| m.max(r)),
            1e-6,
        ),
        Check::bounded("simons_pointwise", sr.simons_pointwise_max, 1e-8),
        Check::bounded("simons_integrated", sr.simons_integrated_residual, 1e-8),
    ];
    let euler = if cfg.n == 4 {
        let v = measure::euler_period_integral_dim4(&profile)?;
        checks.push(Check::report_only("euler_period_integral", v));
        Some(v)
    } else {
        None
    };
    let payload = ProfilePayload {
        orbit: OrbitSummary::of(&profile, lambda0, cfg.step),
        sigma_report: sr,
        euler_period_integral: euler,
    };
    finish(cfg, payload, checks, None)
}

#[derive(Serialize)]
struct LabeledResidual {
    label: String,
    residual: f64,
}

#[derive(Serialize)]
struct VerifyPayload {
    orbit: OrbitSummary,
    keyeq: Vec<LabeledResidual>,
    keyeq_printed: Vec<LabeledResidual>,
    sigma_identity: BTreeMap<u32, f64>,
    sigma_identity_printed: BTreeMap<u32, f64>,
    sign_range: BTreeMap<u32, measure::SignData>,
    simons_pointwise_corrected: f64,
    /// max |pointwise residual − 2(n−1)λ̇²| for the printed coefficient.
    simons_printed_deviation: f64,
    simons_integrated_corrected: f64,
}

fn run_verify(cfg: &RunConfig) -> Result<bool> {
    let lambda0 = cfg.single_lambda0()?;
    let profile = otsuki::integrate_profile(cfg.n, lambda0, cfg.step)?;
    let kmax = cfg.kmax.max(2);
    let nf = f64::from(cfg.n);

    let mut keyeq = Vec::new();
    let mut keyeq_max = 0.0f64;
    for k in 2..=kmax {
        let f = measure::f_k(cfg.n, k)?;
        let r = measure::verify_keyeq(&profile, &f);
        keyeq_max = keyeq_max.max(r);
        keyeq.push(LabeledResidual {
            label: f.label().to_string(),
            residual: r,
        });
    }
    for f in [measure::lambda_squared(), measure::log_lambda()] {
        let r = measure::verify_keyeq(&profile, &f);
        keyeq_max = keyeq_max.max(r);
        keyeq.push(LabeledResidual {
            label: f.label().to_string(),
            residual: r,
        });
    }

    let mut keyeq_printed = Vec::new();
    for k in 3..=kmax {
        let f = measure::f_k_variant(cfg.n, k, Variant::Printed)?;
        keyeq_printed.push(LabeledResidual {
            label: f.label().to_string(),
            residual: measure::verify_keyeq(&profile, &f),
        });
    }

    let mut sigma_identity = BTreeMap::new();
    let mut sigma_identity_printed = BTreeMap::new();
    let mut sign_range = BTreeMap::new();
    let mut identity_max = 0.0f64;
    for k in 2..=kmax {
        let (r, sign) = measure::verify_sigma_identity(&profile, k, Variant::Corrected)?;
        identity_max = identity_max.max(r);
        sigma_identity.insert(k, r);
        sign_range.insert(k, sign);
        let (rp, _) = measure::verify_sigma_identity(&profile, k, Variant::Printed)?;
        sigma_identity_printed.insert(k, rp);
    }

    let simons_pointwise = measure::simons_pointwise(&profile, Variant::Corrected);
    let mut simons_printed_dev = 0.0f64;
    for (r, s) in measure::simons_pointwise_residuals(&profile, Variant::Printed)
        .iter()
        .zip(&profile.samples)
    {
        let expect = 2.0 * (nf - 1.0) * s.lambda_dot * s.lambda_dot;
        simons_printed_dev = simons_printed_dev.max((r - expect).abs());
    }
    let simons_integrated = measure::simons_integrated(&profile, Variant::Corrected);

    let checks = vec![
        Check::bounded("keyeq_residual_max", keyeq_max, 1e-6),
        Check::bounded("sigma_identity_residual_max", identity_max, 1e-6),
        Check::bounded("simons_pointwise", simons_pointwise, 1e-8),
        Check::bounded("simons_printed_deviation", simons_printed_dev, 1e-8),
        Check::bounded("simons_integrated", simons_integrated, 1e-8),
        Check::report_only(
            "keyeq_printed_min",
            keyeq_printed
                .iter()
                .map(|r| r.residual)
                .fold(f64::INFINITY, f64::min),
        ),
        Check::report_only(
            "sigma_identity_printed_max",
            sigma_identity_printed.values().fold(0.0f64, |m, &r| m.max(r)),
        ),
    ];

    let payload = VerifyPayload {
        orbit: OrbitSummary::of(&profile, lambda0, cfg.step),
        keyeq,
        keyeq_printed,
        sigma_identity,
        sigma_identity_printed,
        sign_range,
        simons_pointwise_corrected: simons_pointwise,
        simons_printed_deviation: simons_printed_dev,
        simons_integrated_corrected: simons_integrated,
    };
    finish(cfg, payload, checks, None)
}

#[derive(Serialize, Clone)]
struct SweepRow {
    n: u32,
    lambda0: f64,
    lambda_min: f64,
    lambda_max: f64,
    min_a2: f64,
    max_a2: f64,
    period: f64,
    sigma1: f64,
    sigma_k: f64,
    perdomo_margin: f64,
    keyeq_residual: f64,
}

#[derive(Serialize)]
struct SweepPayload {
    k: u32,
    rows: Vec<SweepRow>,
}

fn run_sweep(cfg: &RunConfig) -> Result<bool> {
    let (start, stop, count) = match cfg.lambda0 {
        Lambda0::Range { start, stop, count } => (start, stop, count),
        _ => {
            return Err(Error::Domain(
                "sweep needs --lambda0 start:stop:count".into(),
            ))
        }
    };
    let k = cfg.k.max(2);
    let grid: Vec<f64> = (0..count)
        .map(|i| start + (stop - start) * f64::from(i) / f64::from(count - 1))
        .collect();

    // one orbit per grid point, computed in parallel; rows stay in grid order
    let rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&lambda0| -> Result<SweepRow> {
            let profile = otsuki::integrate_profile(cfg.n, lambda0, cfg.step)?;
            let sr = measure::sigma_report(&profile, k)?;
            Ok(SweepRow {
                n: cfg.n,
                lambda0,
                lambda_min: profile.lambda_min,
                lambda_max: profile.lambda_max,
                min_a2: sr.min_a2,
                max_a2: sr.max_a2,
                period: profile.period,
                sigma1: sr.sigma[&1],
                sigma_k: sr.sigma[&k],
                perdomo_margin: sr.perdomo_margin,
                keyeq_residual: sr.keyeq_residual,
            })
        })
        .collect::<Result<_>>()?;

    let checks = vec![
        Check::bounded(
            "sigma1_minus_n_max",
            rows.iter().map(|r| -r.perdomo_margin).fold(f64::NEG_INFINITY, f64::max),
            1e-8,
        ),
        Check::bounded(
            "keyeq_residual_max",
            rows.iter().map(|r| r.keyeq_residual).fold(0.0f64, f64::max),
            1e-6,
        ),
    ];
    let csv_rows = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                report::fmt_float(r.lambda0),
                report::fmt_float(r.lambda_min),
                report::fmt_float(r.lambda_max),
                report::fmt_float(r.min_a2),
                report::fmt_float(r.max_a2),
                report::fmt_float(r.period),
                report::fmt_float(r.sigma1),
                report::fmt_float(r.sigma_k),
                report::fmt_float(r.perdomo_margin),
                report::fmt_float(r.keyeq_residual),
            ]
        })
        .collect();
    finish(
        cfg,
        SweepPayload { k, rows },
        checks,
        Some((SWEEP_HEADER, csv_rows)),
    )
}

#[derive(Serialize)]
struct ModelInvariants {
    name: String,
    invariants: spectra::CurvatureInvariants,
    classification: spectra::ClassifyFlags,
}

#[derive(Serialize)]
struct Curvature4Payload {
    stats: suite::Lemma22Stats,
    models: Vec<ModelInvariants>,
}

fn run_curvature4(cfg: &RunConfig) -> Result<bool> {
    let stats = suite::lemma22_batch(cfg.seed, 10_000)?;
    let named: Vec<(&str, spectra::PrincipalSpectrum)> = vec![
        ("totally_geodesic", spectra::PrincipalSpectrum::new(vec![(0.0, 4)])?),
        ("clifford_s2xs2", clifford::clifford_spectrum(4, 2)?),
        ("clifford_s1xs3", clifford::clifford_spectrum(4, 1)?),
        (
            "two_curvature_lambda_1",
            spectra::PrincipalSpectrum::new(vec![(-3.0, 1), (1.0, 3)])?,
        ),
    ];
    let mut models = Vec::new();
    for (name, spec) in named {
        models.push(ModelInvariants {
            name: name.to_string(),
            invariants: spectra::curvature_invariants_dim4(&spec)?,
            classification: spectra::classify(&spec)?,
        });
    }
    let checks = vec![
        Check::bounded("gbc_two_forms", stats.gbc_forms_residual, 1e-10),
        Check::bounded("closed_forms_vs_oracle", stats.oracle_residual, 1e-9),
        Check::bounded("tracefree_ricci_vs_oracle", stats.tracefree_residual, 1e-10),
    ];
    finish(cfg, Curvature4Payload { stats, models }, checks, None)
}

fn run_suite_cmd(cfg: &RunConfig) -> Result<bool> {
    let outcome = suite::run_suite(cfg.seed)?;
    finish(cfg, outcome.payload, outcome.checks, None)
}

/// Dispatch a validated configuration. Returns whether all checks passed.
pub fn execute(cfg: &RunConfig) -> Result<bool> {
    match cfg.command.as_str() {
        "clifford" => run_clifford(cfg),
        "delta" => run_delta(cfg),
        "profile" => run_profile(cfg),
        "verify" => run_verify(cfg),
        "sweep" => run_sweep(cfg),
        "curvature4" => run_curvature4(cfg),
        "suite" => run_suite_cmd(cfg),
        other => Err(Error::Domain(format!("unknown command '{other}'"))),
    }
}

/// Parse the command line, run, and map the outcome to the exit code
/// contract (0 pass, 1 check failure, 2 invalid input).
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return if code == 0 { 0 } else { 2 };
        }
    };
    let (command, raw) = cli.command.split();
    match build_config(command, raw).and_then(|cfg| execute(&cfg)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda0_parsing() {
        assert_eq!(parse_lambda0("0.9").unwrap(), Lambda0::Single { value: 0.9 });
        assert_eq!(
            parse_lambda0("0.6:0.8:5").unwrap(),
            Lambda0::Range {
                start: 0.6,
                stop: 0.8,
                count: 5
            }
        );
        assert!(parse_lambda0("0.8:0.6:5").is_err());
        assert!(parse_lambda0("0.6:0.8:1").is_err());
        assert!(parse_lambda0("abc").is_err());
        assert!(parse_lambda0("1:2").is_err());
    }

    #[test]
    fn config_precedence_file_then_flags() {
        let dir = std::env::temp_dir().join(format!("cliffordlab-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "# comment\nn=5\nstep=1e-3\nvariant=printed\n").unwrap();

        let raw = RawArgs {
            n: Some(4),
            config: Some(path.clone()),
            ..Default::default()
        };
        let cfg = build_config("profile", &raw).unwrap();
        assert_eq!(cfg.n, 4); // flag wins
        assert_eq!(cfg.step, 1e-3); // file wins over default
        assert_eq!(cfg.variant, Variant::Printed);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn config_rejects_unknown_keys() {
        let dir = std::env::temp_dir().join(format!("cliffordlab-test2-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.cfg");
        std::fs::write(&path, "bogus=1\n").unwrap();
        let raw = RawArgs {
            config: Some(path),
            ..Default::default()
        };
        assert!(build_config("profile", &raw).is_err());
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn single_lambda0_contract() {
        let mut cfg = RunConfig::defaults("profile");
        assert!(cfg.single_lambda0().is_err());
        cfg.lambda0 = Lambda0::Single { value: 0.9 };
        assert_eq!(cfg.single_lambda0().unwrap(), 0.9);
        cfg.lambda0 = Lambda0::Range {
            start: 0.5,
            stop: 0.9,
            count: 3,
        };
        assert!(cfg.single_lambda0().is_err());
    }
}
