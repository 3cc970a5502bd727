//! Command-line front end: `constants`, `simulate`, `limit`, `compare` and
//! `validate`.
//!
//! Exit codes: 0 success, 1 validation failure, 2 bad input, 3 I/O failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::Error;
use crate::experiment::{self, ExperimentConfig, ExperimentResult, Parallelism, RegionConfig};
use crate::geometry::Quadrant;
use crate::region::{self, Region, ValidationReport};
use crate::rng::{derive_master, Stream};
use crate::sampling::Regime;
use crate::stats::{self, EmpiricalCdf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Stream key for the Poissonized side of `compare`.
const POISSONIZED_STREAM: u64 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "diamlimit",
    version,
    about = "Largest interpoint distance of random points in ellipse-like regions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the per-quadrant constants (c, sigma, tau) as JSON.
    Constants(ConstantsArgs),
    /// Compare scaled deficiencies of simulated clouds with the limit law.
    Simulate(SimulateArgs),
    /// Draw from the truncated limit law only.
    Limit(LimitArgs),
    /// Compare fixed-n and Poissonized scaled deficiencies.
    Compare(CompareArgs),
    /// Check a region configuration against the pole assumptions.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    /// Half major axis.
    #[arg(long)]
    pub a: Option<f64>,
    /// Semi-minor axis of an ellipse.
    #[arg(long, conflicts_with_all = ["q", "p"])]
    pub b: Option<f64>,
    /// Shape constant, applied to all four quadrants.
    #[arg(long, requires = "p")]
    pub q: Option<f64>,
    /// Pole density, applied to all four quadrants.
    #[arg(long, requires = "q")]
    pub p: Option<f64>,
    /// JSON config file providing the region.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct RunArgs {
    /// JSON config file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    /// Nominal number of points.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of replications.
    #[arg(long)]
    pub reps: Option<usize>,
    /// Truncation order of the limit sampler.
    #[arg(long)]
    pub m: Option<usize>,
    /// fixed-n or poissonized.
    #[arg(long)]
    pub regime: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Output directory for samples.csv, ecdf.csv and summary.json.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Reuse one stream per replication for every m, so that larger m can
    /// only lower each draw.
    #[arg(long)]
    pub couple: bool,
    /// Output CSV file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub config: PathBuf,
}

/// JSON configuration file. Only `region` is required.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub region: RegionConfig,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub reps: Option<usize>,
    #[serde(default)]
    pub m: Option<usize>,
    #[serde(default)]
    pub regime: Option<Regime>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    BadInput(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Validation(_) => EXIT_VALIDATION,
            Failure::BadInput(_) => EXIT_BAD_INPUT,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::BadInput(m) | Failure::Io(m) => m,
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Names the violated assumption for parameter errors.
fn describe(err: &Error) -> String {
    match err {
        Error::ShapeConstantOutOfRange(q) => format!("A5: q out of (0,2): q = {q}"),
        Error::NoUniqueMajorAxis { a, b } => {
            format!("A2: no unique major axis (b = {b} must be < a = {a})")
        }
        Error::DegenerateRegion(m) => format!("A1: degenerate region: {m}"),
        Error::InvalidRegionParameter(m) => format!("A7: invalid region parameter: {m}"),
        other => other.to_string(),
    }
}

fn bad(err: Error) -> Failure {
    Failure::BadInput(describe(&err))
}

fn io_err(path: &Path, err: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {err}", path.display()))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Constants(args) => cmd_constants(&args, stdout),
        Command::Simulate(args) => cmd_simulate(&args, stdout, stderr),
        Command::Limit(args) => cmd_limit(&args, stdout),
        Command::Compare(args) => cmd_compare(&args, stdout),
        Command::Validate(args) => cmd_validate(&args, stdout),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

pub fn read_config(path: &Path) -> std::result::Result<ConfigFile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_config(path: &Option<PathBuf>) -> CliResult<Option<ConfigFile>> {
    path.as_ref()
        .map(|p| read_config(p).map_err(Failure::BadInput))
        .transpose()
}

fn positive(name: &str, v: f64) -> CliResult<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Failure::BadInput(format!(
            "--{name} must be a positive finite number, got {v}"
        )))
    }
}

fn at_least(name: &str, v: usize, min: usize) -> CliResult<usize> {
    if v >= min {
        Ok(v)
    } else {
        Err(Failure::BadInput(format!(
            "--{name} must be >= {min}, got {v}"
        )))
    }
}

/// Effective experiment configuration: reference defaults, then the config
/// file, then flags.
fn resolve(run: &RunArgs) -> CliResult<ExperimentConfig> {
    let mut cfg = ExperimentConfig::reference();
    if let Some(file) = load_config(&run.config)? {
        cfg.region = file.region;
        cfg.n = file.n.unwrap_or(cfg.n);
        cfg.reps = file.reps.unwrap_or(cfg.reps);
        cfg.m = file.m.unwrap_or(cfg.m);
        cfg.regime = file.regime.unwrap_or(cfg.regime);
        cfg.seed = file.seed.unwrap_or(cfg.seed);
    }
    if let Some(a) = run.a {
        let a = positive("a", a)?;
        cfg.region = match cfg.region {
            RegionConfig::Ellipse { b, .. } => RegionConfig::Ellipse { a, b },
            RegionConfig::QuarterEllipse { b, .. } => RegionConfig::QuarterEllipse { a, b },
        };
    }
    if let Some(b) = run.b {
        let b = positive("b", b)?;
        cfg.region = RegionConfig::Ellipse {
            a: cfg.region.a(),
            b,
        };
    }
    if let Some(n) = run.n {
        cfg.n = n;
    }
    if let Some(reps) = run.reps {
        cfg.reps = reps;
    }
    if let Some(m) = run.m {
        cfg.m = m;
    }
    if let Some(regime) = &run.regime {
        cfg.regime = regime.parse().map_err(bad)?;
    }
    if let Some(seed) = run.seed {
        cfg.seed = seed;
    }
    at_least("n", cfg.n, 2)?;
    at_least("reps", cfg.reps, 1)?;
    at_least("m", cfg.m, 1)?;
    if let Some(t) = run.threads {
        at_least("threads", t, 1)?;
    }
    // Surface region problems before any work starts.
    cfg.region.build().map_err(bad)?;
    Ok(cfg)
}

fn parallelism(run: &RunArgs) -> Parallelism {
    Parallelism {
        threads: run.threads,
    }
}

/// Rounds to `digits` significant digits.
fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// Scientific notation with `digits` significant digits; locale independent.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), x)
}

#[derive(Debug, Serialize)]
struct ConstantsEntry {
    q: f64,
    p: f64,
    c: f64,
    sigma: f64,
    tau: f64,
}

fn cmd_constants(args: &ConstantsArgs, out: &mut dyn Write) -> CliResult<()> {
    let mut table: BTreeMap<String, ConstantsEntry> = BTreeMap::new();
    let mut entry = |quad: Quadrant, q: f64, p: f64, a: f64| -> CliResult<()> {
        let k = region::constants(q, p, a).map_err(bad)?;
        table.insert(
            quad.index().to_string(),
            ConstantsEntry {
                q: round_sig(q, 15),
                p: round_sig(p, 15),
                c: round_sig(k.c, 15),
                sigma: round_sig(k.sigma, 15),
                tau: round_sig(k.tau, 15),
            },
        );
        Ok(())
    };

    if let (Some(q), Some(p)) = (args.q, args.p) {
        let a = args
            .a
            .ok_or_else(|| Failure::BadInput("--q/--p need --a".into()))?;
        for quad in Quadrant::ALL {
            entry(quad, q, p, a)?;
        }
    } else {
        let region = match (args.a, args.b, load_config(&args.config)?) {
            (Some(a), Some(b), _) => Region::ellipse(a, b).map_err(bad)?,
            (_, _, Some(file)) => file.region.build().map_err(bad)?,
            _ => {
                return Err(Failure::BadInput(
                    "give --a and --b, --q --p --a, or --config".into(),
                ))
            }
        };
        for quad in Quadrant::ALL {
            let i = quad.index() - 1;
            entry(quad, region.q()[i], region.p()[i], region.a())?;
        }
    }
    let text = serde_json::to_string_pretty(&table).expect("serializable");
    writeln!(out, "{text}").map_err(|e| Failure::Io(e.to_string()))
}

fn quantile_summary(cdf: &EmpiricalCdf) -> serde_json::Value {
    let q = |p: f64| cdf.quantile(p).expect("p in (0,1)");
    json!({ "0.1": q(0.1), "0.5": q(0.5), "0.9": q(0.9) })
}

fn write_file(path: &Path, contents: &[u8]) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| io_err(path, e))
}

pub fn samples_csv(result: &ExperimentResult) -> String {
    let mut s = String::from("rep_index,kind,value\n");
    for (r, v) in result.empirical.iter().enumerate() {
        let value = v.map(|x| fmt_sig(x, 17)).unwrap_or_default();
        s.push_str(&format!("{r},empirical,{value}\n"));
    }
    for (r, v) in result.limit.iter().enumerate() {
        s.push_str(&format!("{r},limit,{}\n", fmt_sig(*v, 17)));
    }
    s
}

pub fn ecdf_csv(result: &ExperimentResult) -> String {
    let mut s = String::from("t,F_empirical,F_limit\n");
    for row in &result.grid {
        s.push_str(&format!(
            "{},{},{}\n",
            fmt_sig(row.t, 6),
            fmt_sig(row.f_empirical, 6),
            fmt_sig(row.f_limit, 6)
        ));
    }
    s
}

pub fn summary_json(result: &ExperimentResult) -> String {
    let value = json!({
        "ks": result.ks,
        "quantiles": {
            "empirical": quantile_summary(&result.empirical_cdf),
            "limit": quantile_summary(&result.limit_cdf),
        },
        "dropped": result.dropped,
        "config": result.config,
        "seed": result.config.seed,
        "streams": {
            "cloud_master": result.cloud_master,
            "limit_master": result.limit_master,
        },
    });
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    text
}

fn cmd_simulate(args: &SimulateArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let cfg = resolve(&args.run)?;
    fs::create_dir_all(&args.out).map_err(|e| io_err(&args.out, e))?;
    let result = experiment::run_experiment_with(&cfg, parallelism(&args.run)).map_err(bad)?;

    write_file(
        &args.out.join("samples.csv"),
        samples_csv(&result).as_bytes(),
    )?;
    write_file(&args.out.join("ecdf.csv"), ecdf_csv(&result).as_bytes())?;
    write_file(
        &args.out.join("summary.json"),
        summary_json(&result).as_bytes(),
    )?;

    let _ = writeln!(
        err,
        "{} replications in {:.2?} ({} dropped)",
        cfg.reps, result.wall_time, result.dropped
    );
    let _ = writeln!(out, "ks = {}", result.ks);
    Ok(())
}

/// Stream master for `limit`: shared across `m` when coupled, keyed by `m`
/// otherwise.
pub fn limit_master(seed: u64, m: usize, couple: bool) -> u64 {
    let base = derive_master(seed, Stream::Limit);
    if couple {
        base
    } else {
        derive_master(base, Stream::Keyed(m as u64))
    }
}

fn cmd_limit(args: &LimitArgs, out: &mut dyn Write) -> CliResult<()> {
    let cfg = resolve(&args.run)?;
    let region = cfg.region.build().map_err(bad)?;
    let master = limit_master(cfg.seed, cfg.m, args.couple);
    let values =
        experiment::limit_samples(&region, cfg.m, cfg.reps, master, parallelism(&args.run))
            .map_err(bad)?;
    let mut s = String::from("rep_index,value\n");
    for (r, v) in values.iter().enumerate() {
        s.push_str(&format!("{r},{}\n", fmt_sig(*v, 17)));
    }
    match &args.out {
        Some(path) => write_file(path, s.as_bytes()),
        None => out
            .write_all(s.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn cmd_compare(args: &CompareArgs, out: &mut dyn Write) -> CliResult<()> {
    let cfg = resolve(&args.run)?;
    let region = cfg.region.build().map_err(bad)?;
    let par = parallelism(&args.run);
    let fixed_master = derive_master(cfg.seed, Stream::Cloud);
    let poisson_master = derive_master(cfg.seed, Stream::Keyed(POISSONIZED_STREAM));
    let fixed =
        experiment::deficiency_samples(&region, cfg.n, Regime::FixedN, cfg.reps, fixed_master, par)
            .map_err(bad)?;
    let poisson = experiment::deficiency_samples(
        &region,
        cfg.n,
        Regime::Poissonized,
        cfg.reps,
        poisson_master,
        par,
    )
    .map_err(bad)?;
    let fixed_cdf = EmpiricalCdf::new(fixed.iter().flatten().copied()).map_err(bad)?;
    let poisson_cdf = EmpiricalCdf::new(poisson.iter().flatten().copied()).map_err(bad)?;
    let value = json!({
        "ks": stats::ks_distance(&fixed_cdf, &poisson_cdf),
        "fixed_n": { "quantiles": quantile_summary(&fixed_cdf) },
        "poissonized": {
            "quantiles": quantile_summary(&poisson_cdf),
            "dropped": poisson.iter().filter(|v| v.is_none()).count(),
        },
        "config": {
            "region": cfg.region,
            "n": cfg.n,
            "reps": cfg.reps,
            "seed": cfg.seed,
        },
    });
    let text = serde_json::to_string_pretty(&value).expect("serializable");
    writeln!(out, "{text}").map_err(|e| Failure::Io(e.to_string()))
}

/// Validation report for a configured region; construction failures are
/// reported as failed assumptions.
pub fn validate_region_config(region: &RegionConfig) -> ValidationReport {
    match region.build() {
        Ok(r) => r.validate(),
        Err(Error::NoUniqueMajorAxis { a, b }) => ValidationReport::rejected(
            "A2",
            format!("no unique major axis (b = {b} must be < a = {a})"),
        ),
        Err(e) => ValidationReport::rejected("A1", e.to_string()),
    }
}

fn cmd_validate(args: &ValidateArgs, out: &mut dyn Write) -> CliResult<()> {
    let file = read_config(&args.config).map_err(Failure::BadInput)?;
    let report = validate_region_config(&file.region);
    write!(out, "{report}").map_err(|e| Failure::Io(e.to_string()))?;
    if report.passed() {
        Ok(())
    } else {
        let first = report
            .failures()
            .next()
            .map(|c| format!("{}: {}", c.assumption, c.description))
            .unwrap_or_default();
        Err(Failure::Validation(first))
    }
}
