//! Disorder-trial orchestration: reproducible per-trial seeding, parallel
//! execution, and index-ordered averaging of the recorded series.

use rayon::prelude::*;

use crate::coin::CoinSchedule;
use crate::error::{Error, Result};
use crate::evolution::{evolve, RecorderSpec, Trajectory};
use crate::observables::{probability_distribution, PositionDistribution};
use crate::state::{CoinAmplitudes, WalkerState};

/// Walk family of an ensemble run. The deterministic families realize the
/// identical schedule for every trial; the disorder families draw a fresh
/// angle table per trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WalkFamily {
    Homogeneous { theta: f64 },
    Accelerated { theta0: f64, rate: f64 },
    TemporalDisorder,
    SpatialDisorder,
}

impl WalkFamily {
    /// Schedule realized for one trial.
    pub fn schedule_for_trial(
        &self,
        master_seed: u64,
        trial_index: usize,
        horizon: usize,
    ) -> Result<CoinSchedule> {
        let seed = derive_trial_seed(master_seed, trial_index);
        Ok(match *self {
            WalkFamily::Homogeneous { theta } => CoinSchedule::homogeneous(theta, horizon),
            WalkFamily::Accelerated { theta0, rate } => {
                CoinSchedule::accelerated(theta0, rate, horizon)?
            }
            WalkFamily::TemporalDisorder => CoinSchedule::temporal_disorder(seed, horizon),
            WalkFamily::SpatialDisorder => CoinSchedule::spatial_disorder(seed, horizon),
        })
    }
}

/// Per-trial seed via a splitmix64 finalizer. The index map is injective for
/// a fixed master seed, so distinct trials get distinct seeds.
pub fn derive_trial_seed(master_seed: u64, trial_index: usize) -> u64 {
    let mut z = master_seed.wrapping_add((trial_index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Configuration of one ensemble run.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleConfig {
    pub family: WalkFamily,
    pub steps: usize,
    pub trials: usize,
    pub master_seed: u64,
    pub initial: CoinAmplitudes,
    pub recorder: RecorderSpec,
}

impl EnsembleConfig {
    /// Run `trials` trials of `family` from the balanced initial state.
    pub fn new(family: WalkFamily, steps: usize, trials: usize, master_seed: u64) -> Self {
        Self {
            family,
            steps,
            trials,
            master_seed,
            initial: CoinAmplitudes::balanced(),
            recorder: RecorderSpec::msd_only(),
        }
    }

    pub fn with_recorder(mut self, recorder: RecorderSpec) -> Self {
        self.recorder = recorder;
        self
    }
}

/// Per-step mean and sample standard deviation of one recorded observable.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesStats {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
}

/// Trial-averaged observable series plus the trial-mean final distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct AveragedSeries {
    pub steps: Vec<usize>,
    pub trials: usize,
    pub msd: Option<SeriesStats>,
    pub c_l1: Option<SeriesStats>,
    pub c_re: Option<SeriesStats>,
    pub mean_final_distribution: PositionDistribution,
}

/// Evolve every trial (in parallel) and average the recorded series.
///
/// Trials are aggregated in trial-index order whatever the execution
/// interleaving, so a given config produces bit-identical output at any
/// thread count.
pub fn run_ensemble(config: &EnsembleConfig) -> Result<AveragedSeries> {
    if config.trials == 0 {
        return Err(Error::Validation("ensemble needs at least one trial".into()));
    }
    let trajectories: Vec<Trajectory> = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(config, i).map_err(|e| Error::Trial {
            index: i,
            source: Box::new(e),
        }))
        .collect::<Result<_>>()?;

    let steps: Vec<usize> = trajectories[0].steps.clone();
    let n = config.trials;
    let msd = config
        .recorder
        .msd
        .then(|| aggregate(trajectories.iter().map(|t| t.msd.as_deref().unwrap()), n));
    let c_l1 = config
        .recorder
        .l1
        .then(|| aggregate(trajectories.iter().map(|t| t.c_l1.as_deref().unwrap()), n));
    let c_re = config
        .recorder
        .re
        .then(|| aggregate(trajectories.iter().map(|t| t.c_re.as_deref().unwrap()), n));

    let window = trajectories[0].final_state.window();
    let mut mean_p = vec![0.0; window.num_sites()];
    for traj in &trajectories {
        let dist = probability_distribution(&traj.final_state);
        for (acc, &p) in mean_p.iter_mut().zip(dist.probabilities()) {
            *acc += p;
        }
    }
    for p in &mut mean_p {
        *p /= n as f64;
    }
    let mean_final_distribution = PositionDistribution::from_probabilities(window, mean_p)?;

    Ok(AveragedSeries {
        steps,
        trials: n,
        msd,
        c_l1,
        c_re,
        mean_final_distribution,
    })
}

fn run_trial(config: &EnsembleConfig, index: usize) -> Result<Trajectory> {
    let schedule = config
        .family
        .schedule_for_trial(config.master_seed, index, config.steps)?;
    let state = WalkerState::new_localized(config.initial, config.steps)?;
    evolve(state, &schedule, config.steps, &config.recorder)
}

/// Mean and (n−1)-normalized standard deviation per step, accumulated in
/// trial order. Sums run over offsets from the first trial, so a 1-trial
/// ensemble reproduces its series exactly and identical trials (deterministic
/// schedules) give an exactly zero standard deviation.
fn aggregate<'a>(series: impl Iterator<Item = &'a [f64]> + Clone, trials: usize) -> SeriesStats {
    let first: &[f64] = series.clone().next().unwrap_or(&[]);
    let len = first.len();
    let mut shift_mean = vec![0.0; len];
    for trial in series.clone() {
        for ((acc, &v), &base) in shift_mean.iter_mut().zip(trial).zip(first) {
            *acc += v - base;
        }
    }
    for acc in &mut shift_mean {
        *acc /= trials as f64;
    }
    let mean: Vec<f64> = first
        .iter()
        .zip(&shift_mean)
        .map(|(&base, &s)| base + s)
        .collect();
    let mut std = vec![0.0; len];
    if trials > 1 {
        for trial in series {
            for ((acc, &v), (&base, &s)) in
                std.iter_mut().zip(trial).zip(first.iter().zip(&shift_mean))
            {
                let d = (v - base) - s;
                *acc += d * d;
            }
        }
        for acc in &mut std {
            *acc = (*acc / (trials - 1) as f64).sqrt();
        }
    }
    SeriesStats { mean, std }
}
