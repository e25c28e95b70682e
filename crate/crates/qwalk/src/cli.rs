//! Command-line entry point, run configuration, and CSV/JSON data emission.
//!
//! One invocation runs one walk family and emits either an observable time
//! series (`step,msd,msd_std,...`) or a position distribution
//! (`position,probability`). Flags override values read from an optional
//! JSON config file; the JSON output echoes the resolved config so a run can
//! be reproduced from its own output.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::Parser;
use serde::{Deserialize, Serialize};

use crate::ensemble::{run_ensemble, AveragedSeries, EnsembleConfig, WalkFamily};
use crate::error::{Error, Result};
use crate::evolution::{measured_walk_distribution, RecorderSpec};
use crate::observables::{fit_alpha, AlphaEstimate, MsdSeries, PositionDistribution};

/// Display probabilities below this as removed zeros when `--drop-zeros` is
/// set; double precision cannot distinguish them from parity zeros.
const ZERO_DROP_THRESHOLD: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    Homogeneous,
    Accelerated,
    Temporal,
    Spatial,
    Classical,
}

impl WalkKind {
    fn is_disordered(self) -> bool {
        matches!(self, WalkKind::Temporal | WalkKind::Spatial)
    }
}

impl FromStr for WalkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "homogeneous" => Ok(WalkKind::Homogeneous),
            "accelerated" => Ok(WalkKind::Accelerated),
            "temporal" => Ok(WalkKind::Temporal),
            "spatial" => Ok(WalkKind::Spatial),
            "classical" => Ok(WalkKind::Classical),
            other => Err(Error::Usage(format!("unknown walk '{other}'"))),
        }
    }
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            WalkKind::Homogeneous => "homogeneous",
            WalkKind::Accelerated => "accelerated",
            WalkKind::Temporal => "temporal",
            WalkKind::Spatial => "spatial",
            WalkKind::Classical => "classical",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Observable {
    Prob,
    Msd,
    Alpha,
    L1,
    Re,
}

impl Observable {
    fn is_series(self) -> bool {
        !matches!(self, Observable::Prob)
    }

    fn is_coherence(self) -> bool {
        matches!(self, Observable::L1 | Observable::Re)
    }
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prob" => Ok(Observable::Prob),
            "msd" => Ok(Observable::Msd),
            "alpha" => Ok(Observable::Alpha),
            "l1" => Ok(Observable::L1),
            "re" => Ok(Observable::Re),
            other => Err(Error::Usage(format!("unknown observable '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Usage(format!("unknown format '{other}'"))),
        }
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub walk: WalkKind,
    pub steps: usize,
    pub theta0: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accel: Option<f64>,
    pub trials: usize,
    pub seed: u64,
    pub observables: Vec<Observable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fit_window: Option<(usize, usize)>,
    pub format: OutputFormat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub drop_zeros: bool,
}

/// Partial config as read from `--config`; every field may be absent.
#[derive(Debug, Default, Deserialize)]
struct FileConfig {
    walk: Option<WalkKind>,
    steps: Option<usize>,
    theta0: Option<f64>,
    accel: Option<f64>,
    trials: Option<usize>,
    seed: Option<u64>,
    observables: Option<Vec<Observable>>,
    fit_window: Option<(usize, usize)>,
    format: Option<OutputFormat>,
    output: Option<PathBuf>,
    drop_zeros: Option<bool>,
}

#[derive(Debug, Parser)]
#[command(
    name = "qwalk",
    about = "One-dimensional discrete-time quantum walks: spread, anomalous exponents, and position-space coherence",
    disable_help_subcommand = true
)]
struct CliArgs {
    /// Walk family: homogeneous | accelerated | temporal | spatial | classical
    #[arg(long)]
    walk: Option<String>,

    /// Number of steps T (series cover 0..=T)
    #[arg(long)]
    steps: Option<usize>,

    /// Coin angle in radians; fractions of pi like "pi/4" or "3pi/8" are accepted
    #[arg(long)]
    theta0: Option<String>,

    /// Decay rate of the accelerated coin angle (accelerated walk only)
    #[arg(long)]
    accel: Option<f64>,

    /// Number of disorder trials to average
    #[arg(long)]
    trials: Option<usize>,

    /// Master seed for disorder realizations
    #[arg(long)]
    seed: Option<u64>,

    /// Comma-separated subset of prob,msd,alpha,l1,re
    #[arg(long)]
    observables: Option<String>,

    /// Log-log fit window "t_min,t_max" for the alpha observable
    #[arg(long)]
    fit_window: Option<String>,

    /// Output format: csv | json
    #[arg(long)]
    format: Option<String>,

    /// Output path; stdout when omitted
    #[arg(long)]
    output: Option<PathBuf>,

    /// JSON config file supplying defaults for any flag not given
    #[arg(long)]
    config: Option<PathBuf>,

    /// Omit distribution rows with probability below 1e-15
    #[arg(long)]
    drop_zeros: bool,
}

/// Parse an angle given as decimal radians or as a fraction of π
/// ("pi", "pi/4", "3pi/4", "0.5pi", "-pi/3").
pub fn parse_angle(token: &str) -> Result<f64> {
    let t = token.trim().to_ascii_lowercase();
    let bad = || Error::Usage(format!("non-numeric angle '{token}'"));
    if let Some(idx) = t.find("pi") {
        let (prefix, rest) = (&t[..idx], &t[idx + 2..]);
        let coefficient = match prefix.trim_end_matches('*') {
            "" | "+" => 1.0,
            "-" => -1.0,
            num => num.parse::<f64>().map_err(|_| bad())?,
        };
        let denominator = match rest.strip_prefix('/') {
            None if rest.is_empty() => 1.0,
            Some(den) => {
                let d: f64 = den.parse().map_err(|_| bad())?;
                if d == 0.0 {
                    return Err(bad());
                }
                d
            }
            _ => return Err(bad()),
        };
        Ok(coefficient * std::f64::consts::PI / denominator)
    } else {
        t.parse::<f64>().map_err(|_| bad())
    }
}

fn parse_observables(token: &str) -> Result<Vec<Observable>> {
    let mut out = Vec::new();
    for part in token.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::Usage(format!("empty observable in '{token}'")));
        }
        let obs: Observable = part.parse()?;
        if !out.contains(&obs) {
            out.push(obs);
        }
    }
    Ok(out)
}

fn parse_fit_window(token: &str) -> Result<(usize, usize)> {
    let bad = || Error::Usage(format!("fit window '{token}' must be 't_min,t_max'"));
    let (lo, hi) = token.split_once(',').ok_or_else(bad)?;
    let t_min: usize = lo.trim().parse().map_err(|_| bad())?;
    let t_max: usize = hi.trim().parse().map_err(|_| bad())?;
    Ok((t_min, t_max))
}

/// Resolve a [`RunConfig`] from command-line arguments (argv[0] included)
/// and the optional config file; flags override file values, and anything
/// still unset falls back to the defaults θ₀ = π/4, a = 0.02, 100 steps,
/// seed 0, csv, with 100 trials for disordered walks and 1 otherwise.
pub fn parse_config<I, S>(args: I) -> Result<RunConfig>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = CliArgs::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            Error::Usage(e.to_string())
        }
        _ => Error::Usage(e.to_string()),
    })?;

    let file: FileConfig = match &cli.config {
        Some(path) => serde_json::from_str(&fs::read_to_string(path)?)?,
        None => FileConfig::default(),
    };

    let walk = match (&cli.walk, file.walk) {
        (Some(s), _) => s.parse()?,
        (None, Some(w)) => w,
        (None, None) => return Err(Error::Usage("missing required option --walk".into())),
    };

    let steps = cli.steps.or(file.steps).unwrap_or(100);
    let theta0 = match &cli.theta0 {
        Some(s) => parse_angle(s)?,
        None => file.theta0.unwrap_or(std::f64::consts::FRAC_PI_4),
    };
    let accel_given = cli.accel.or(file.accel);
    let trials = cli
        .trials
        .or(file.trials)
        .unwrap_or(if walk.is_disordered() { 100 } else { 1 });
    let seed = cli.seed.or(file.seed).unwrap_or(0);
    let observables = match &cli.observables {
        Some(s) => parse_observables(s)?,
        None => file.observables.unwrap_or_else(|| vec![Observable::Msd]),
    };
    let fit_window = match &cli.fit_window {
        Some(s) => Some(parse_fit_window(s)?),
        None => file.fit_window,
    };
    let format = match &cli.format {
        Some(s) => s.parse()?,
        None => file.format.unwrap_or(OutputFormat::Csv),
    };
    let output = cli.output.or(file.output);
    let drop_zeros = cli.drop_zeros || file.drop_zeros.unwrap_or(false);

    let accel = match (walk, accel_given) {
        (WalkKind::Accelerated, given) => Some(given.unwrap_or(0.02)),
        (_, None) => None,
        (other, Some(_)) => {
            return Err(Error::Usage(format!(
                "--accel only applies to the accelerated walk, not '{other}'"
            )))
        }
    };

    let config = RunConfig {
        walk,
        steps,
        theta0,
        accel,
        trials,
        seed,
        observables,
        fit_window,
        format,
        output,
        drop_zeros,
    };
    validate(&config)?;
    Ok(config)
}

fn validate(config: &RunConfig) -> Result<()> {
    if config.steps < 1 {
        return Err(Error::Usage("--steps must be at least 1".into()));
    }
    if config.trials < 1 {
        return Err(Error::Usage("--trials must be at least 1".into()));
    }
    if config.observables.is_empty() {
        return Err(Error::Usage("at least one observable is required".into()));
    }
    if let Some(rate) = config.accel {
        if rate < 0.0 {
            return Err(Error::Usage(format!("--accel must be non-negative, got {rate}")));
        }
    }
    if config.walk == WalkKind::Classical
        && config.observables.iter().any(|o| o.is_coherence())
    {
        return Err(Error::Usage(
            "coherence observables are undefined for the analytic classical baseline".into(),
        ));
    }
    let wants_prob = config.observables.contains(&Observable::Prob);
    if wants_prob && config.observables.iter().any(|o| o.is_series()) {
        return Err(Error::Usage(
            "'prob' emits a position distribution and cannot be combined with series observables".into(),
        ));
    }
    if let Some((t_min, t_max)) = config.fit_window {
        if t_min < 1 || t_min > t_max || t_max > config.steps {
            return Err(Error::Usage(format!(
                "fit window ({t_min}, {t_max}) must satisfy 1 <= t_min <= t_max <= steps"
            )));
        }
    }
    Ok(())
}

/// Render a float with 12 significant digits.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

#[derive(Debug, Serialize)]
struct AlphaOut {
    alpha: f64,
    t_min: usize,
    t_max: usize,
    residual: f64,
}

impl From<&AlphaEstimate> for AlphaOut {
    fn from(est: &AlphaEstimate) -> Self {
        Self {
            alpha: est.alpha,
            t_min: est.fit_window.0,
            t_max: est.fit_window.1,
            residual: est.residual,
        }
    }
}

#[derive(Debug, Serialize)]
struct TimeseriesDoc<'a> {
    config: &'a RunConfig,
    step: &'a [usize],
    #[serde(skip_serializing_if = "Option::is_none")]
    msd: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    msd_std: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_l1: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_l1_std: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_re: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_re_std: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<AlphaOut>,
}

/// Write an averaged time series as CSV
/// (`step,msd,msd_std,c_l1,c_l1_std,c_re,c_re_std`, absent observables
/// omitted) or as the JSON mirror with the config echoed.
pub fn emit_timeseries<W: Write>(
    out: &mut W,
    series: &AveragedSeries,
    config: &RunConfig,
    alpha: Option<&AlphaEstimate>,
) -> Result<()> {
    if series.steps.is_empty() {
        return Err(Error::Validation("cannot emit an empty series".into()));
    }
    match config.format {
        OutputFormat::Csv => {
            let mut columns: Vec<(&str, &[f64])> = Vec::new();
            if let Some(stats) = &series.msd {
                columns.push(("msd", &stats.mean));
                columns.push(("msd_std", &stats.std));
            }
            if let Some(stats) = &series.c_l1 {
                columns.push(("c_l1", &stats.mean));
                columns.push(("c_l1_std", &stats.std));
            }
            if let Some(stats) = &series.c_re {
                columns.push(("c_re", &stats.mean));
                columns.push(("c_re_std", &stats.std));
            }
            let header: Vec<&str> = std::iter::once("step")
                .chain(columns.iter().map(|(name, _)| *name))
                .collect();
            writeln!(out, "{}", header.join(","))?;
            for (i, &step) in series.steps.iter().enumerate() {
                let mut row = step.to_string();
                for (_, values) in &columns {
                    row.push(',');
                    row.push_str(&sig12(values[i]));
                }
                writeln!(out, "{row}")?;
            }
        }
        OutputFormat::Json => {
            let doc = TimeseriesDoc {
                config,
                step: &series.steps,
                msd: series.msd.as_ref().map(|s| s.mean.as_slice()),
                msd_std: series.msd.as_ref().map(|s| s.std.as_slice()),
                c_l1: series.c_l1.as_ref().map(|s| s.mean.as_slice()),
                c_l1_std: series.c_l1.as_ref().map(|s| s.std.as_slice()),
                c_re: series.c_re.as_ref().map(|s| s.mean.as_slice()),
                c_re_std: series.c_re.as_ref().map(|s| s.std.as_slice()),
                alpha: alpha.map(AlphaOut::from),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct DistributionDoc<'a> {
    config: &'a RunConfig,
    position: Vec<i64>,
    probability: Vec<f64>,
}

/// Write a position distribution as CSV (`position,probability`) or JSON.
/// With `drop_zeros`, rows below 1e−15 are removed the way vanishing
/// intermediate points are dropped from distribution plots.
pub fn emit_distribution<W: Write>(
    out: &mut W,
    dist: &PositionDistribution,
    config: &RunConfig,
    drop_zeros: bool,
) -> Result<()> {
    let keep = |p: f64| !drop_zeros || p >= ZERO_DROP_THRESHOLD;
    match config.format {
        OutputFormat::Csv => {
            writeln!(out, "position,probability")?;
            for (x, p) in dist.iter().filter(|&(_, p)| keep(p)) {
                writeln!(out, "{x},{}", sig12(p))?;
            }
        }
        OutputFormat::Json => {
            let (position, probability): (Vec<i64>, Vec<f64>) =
                dist.iter().filter(|&(_, p)| keep(p)).unzip();
            let doc = DistributionDoc {
                config,
                position,
                probability,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn classical_series(config: &RunConfig) -> AveragedSeries {
    let steps: Vec<usize> = (0..=config.steps).collect();
    let msd: Vec<f64> = steps.iter().map(|&t| t as f64).collect();
    let std = vec![0.0; steps.len()];
    AveragedSeries {
        steps,
        trials: 1,
        msd: Some(crate::ensemble::SeriesStats { mean: msd, std }),
        c_l1: None,
        c_re: None,
        mean_final_distribution: measured_walk_distribution(config.steps),
    }
}

fn quantum_family(config: &RunConfig) -> Result<WalkFamily> {
    Ok(match config.walk {
        WalkKind::Homogeneous => WalkFamily::Homogeneous {
            theta: config.theta0,
        },
        WalkKind::Accelerated => WalkFamily::Accelerated {
            theta0: config.theta0,
            rate: config.accel.unwrap_or(0.02),
        },
        WalkKind::Temporal => WalkFamily::TemporalDisorder,
        WalkKind::Spatial => WalkFamily::SpatialDisorder,
        WalkKind::Classical => {
            return Err(Error::Internal("classical walk has no quantum family".into()))
        }
    })
}

/// Run the configured walk and write its output. The alpha estimate, when
/// requested, lands in the JSON document and on stderr so CSV bytes stay a
/// pure table.
pub fn execute(config: &RunConfig) -> Result<()> {
    let wants = |o: Observable| config.observables.contains(&o);
    let series = if config.walk == WalkKind::Classical {
        classical_series(config)
    } else {
        let recorder = RecorderSpec {
            msd: wants(Observable::Msd) || wants(Observable::Alpha),
            l1: wants(Observable::L1),
            re: wants(Observable::Re),
            ..RecorderSpec::none()
        };
        let ensemble = EnsembleConfig::new(
            quantum_family(config)?,
            config.steps,
            config.trials,
            config.seed,
        )
        .with_recorder(recorder);
        run_ensemble(&ensemble)?
    };

    let alpha = if wants(Observable::Alpha) {
        let stats = series
            .msd
            .as_ref()
            .expect("alpha implies a recorded msd series");
        let msd_series = MsdSeries::new(series.steps.clone(), stats.mean.clone())?;
        let window = config.fit_window.unwrap_or((1, config.steps));
        let est = fit_alpha(&msd_series, window)?;
        eprintln!(
            "alpha = {:.6} (window {}..={}, rms residual {:.3e})",
            est.alpha, est.fit_window.0, est.fit_window.1, est.residual
        );
        Some(est)
    } else {
        None
    };

    let mut sink: Box<dyn Write> = match &config.output {
        Some(path) => Box::new(fs::File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    if wants(Observable::Prob) {
        emit_distribution(
            &mut sink,
            &series.mean_final_distribution,
            config,
            config.drop_zeros,
        )?;
    } else {
        emit_timeseries(&mut sink, &series, config, alpha.as_ref())?;
    }
    sink.flush()?;
    Ok(())
}

/// Binary entry point; returns the process exit code.
pub fn main<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    // let clap render help/version itself
    match CliArgs::try_parse_from(argv.iter()) {
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return 0;
        }
        _ => {}
    }
    let config = match parse_config(argv) {
        Ok(config) => config,
        Err(e) => {
            eprintln!("qwalk: {e}");
            return 2;
        }
    };
    match execute(&config) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("qwalk: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_4;

    fn parse(extra: &[&str]) -> Result<RunConfig> {
        let mut args = vec!["qwalk"];
        args.extend_from_slice(extra);
        parse_config(args)
    }

    #[test]
    fn parses_pi_fraction_angles() {
        assert_abs_diff_eq!(parse_angle("pi/4").unwrap(), FRAC_PI_4);
        assert_abs_diff_eq!(parse_angle("3pi/4").unwrap(), 3.0 * FRAC_PI_4);
        assert_abs_diff_eq!(parse_angle("pi").unwrap(), std::f64::consts::PI);
        assert_abs_diff_eq!(parse_angle("-pi/2").unwrap(), -std::f64::consts::FRAC_PI_2);
        assert_abs_diff_eq!(parse_angle("0.5pi").unwrap(), std::f64::consts::FRAC_PI_2);
        assert_abs_diff_eq!(parse_angle("0.785"). unwrap(), 0.785);
        assert!(matches!(parse_angle("pie"), Err(Error::Usage(_))));
        assert!(matches!(parse_angle("pi/0"), Err(Error::Usage(_))));
    }

    #[test]
    fn homogeneous_run_with_paper_parameters() {
        let config = parse(&["--walk", "homogeneous", "--steps", "100", "--theta0", "pi/4"]).unwrap();
        assert_eq!(config.walk, WalkKind::Homogeneous);
        assert_eq!(config.steps, 100);
        assert_abs_diff_eq!(config.theta0, FRAC_PI_4);
        assert_eq!(config.trials, 1);
        assert_eq!(config.seed, 0);
        assert_eq!(config.format, OutputFormat::Csv);
        assert_eq!(config.observables, vec![Observable::Msd]);
    }

    #[test]
    fn accelerated_run_defaults() {
        let config = parse(&["--walk", "accelerated", "--accel", "0.02"]).unwrap();
        assert_eq!(config.accel, Some(0.02));
        let config = parse(&["--walk", "accelerated"]).unwrap();
        assert_eq!(config.accel, Some(0.02));
    }

    #[test]
    fn disordered_walks_default_to_hundred_trials() {
        assert_eq!(parse(&["--walk", "temporal"]).unwrap().trials, 100);
        assert_eq!(parse(&["--walk", "spatial"]).unwrap().trials, 100);
        assert_eq!(parse(&["--walk", "homogeneous"]).unwrap().trials, 1);
    }

    #[test]
    fn accel_is_rejected_outside_the_accelerated_walk() {
        let err = parse(&["--walk", "homogeneous", "--accel", "0.02"]).unwrap_err();
        assert!(matches!(err, Error::Usage(_)), "got {err:?}");
    }

    #[test]
    fn classical_walk_rejects_coherence_observables() {
        let err = parse(&["--walk", "classical", "--observables", "l1"]).unwrap_err();
        match err {
            Error::Usage(msg) => assert!(msg.contains("classical"), "message: {msg}"),
            other => panic!("expected usage error, got {other:?}"),
        }
    }

    #[test]
    fn prob_cannot_mix_with_series_observables() {
        let err = parse(&["--walk", "homogeneous", "--observables", "prob,msd"]).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn unknown_tokens_are_usage_errors() {
        assert!(matches!(parse(&["--walk", "sideways"]), Err(Error::Usage(_))));
        assert!(matches!(
            parse(&["--walk", "spatial", "--observables", "msd,entropy"]),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            parse(&["--walk", "spatial", "--theta0", "fast"]),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            parse(&["--walk", "spatial", "--trials", "0"]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn fit_window_is_validated_against_steps() {
        let config = parse(&[
            "--walk", "homogeneous", "--observables", "msd,alpha", "--fit-window", "1,50",
        ])
        .unwrap();
        assert_eq!(config.fit_window, Some((1, 50)));
        assert!(matches!(
            parse(&["--walk", "homogeneous", "--fit-window", "0,50"]),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            parse(&["--walk", "homogeneous", "--fit-window", "1,500"]),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            parse(&["--walk", "homogeneous", "--fit-window", "nope"]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn config_echo_round_trips() {
        let config = parse(&[
            "--walk",
            "accelerated",
            "--steps",
            "60",
            "--theta0",
            "pi/3",
            "--accel",
            "0.05",
            "--observables",
            "msd,l1,re",
            "--format",
            "json",
        ])
        .unwrap();
        let echoed = serde_json::to_string(&config).unwrap();
        let file = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(file.path(), &echoed).unwrap();
        let reparsed = parse(&["--config", file.path().to_str().unwrap()]).unwrap();
        assert_eq!(reparsed, config);
    }

    #[test]
    fn flags_override_config_file_values() {
        let base = parse(&["--walk", "spatial", "--steps", "80", "--seed", "9"]).unwrap();
        let file = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(file.path(), serde_json::to_string(&base).unwrap()).unwrap();
        let overridden = parse(&[
            "--config",
            file.path().to_str().unwrap(),
            "--steps",
            "40",
        ])
        .unwrap();
        assert_eq!(overridden.steps, 40);
        assert_eq!(overridden.seed, 9);
        assert_eq!(overridden.walk, WalkKind::Spatial);
    }

    #[test]
    fn sig12_renders_twelve_significant_digits() {
        assert_eq!(sig12(0.5), "5.00000000000e-1");
        assert_eq!(sig12(2_928.932_188_134_525_4), "2.92893218813e3");
        assert_eq!(sig12(0.0), "0.00000000000e0");
    }
}
