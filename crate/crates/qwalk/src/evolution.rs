//! Single-step unitary application, trajectory evolution with a streaming
//! observable recorder, and the analytic measured-walk baseline.

use crate::coherence::{l1_coherence_normalized, relative_entropy_coherence, CoherenceRecord};
use crate::coin::CoinSchedule;
use crate::error::{Error, Result};
use crate::observables::{msd, probability_distribution, MsdSeries, PositionDistribution};
use crate::state::{LatticeWindow, WalkerState};

/// Which per-step observables [`evolve`] records.
///
/// Full-state snapshots are kept only while the step count stays at or below
/// `snapshot_cap`; long coherence runs would otherwise hold hundreds of
/// window-sized states alive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecorderSpec {
    pub msd: bool,
    pub l1: bool,
    pub re: bool,
    pub snapshots: bool,
    pub snapshot_cap: usize,
}

impl Default for RecorderSpec {
    fn default() -> Self {
        Self::msd_only()
    }
}

impl RecorderSpec {
    pub fn none() -> Self {
        Self {
            msd: false,
            l1: false,
            re: false,
            snapshots: false,
            snapshot_cap: 64,
        }
    }

    pub fn msd_only() -> Self {
        Self {
            msd: true,
            ..Self::none()
        }
    }

    /// msd plus both coherence measures.
    pub fn full() -> Self {
        Self {
            msd: true,
            l1: true,
            re: true,
            ..Self::none()
        }
    }
}

/// Recorded output of [`evolve`]: series indexed by step (length T+1,
/// steps 0..=T), optional early-state snapshots, and the final state.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub steps: Vec<usize>,
    pub msd: Option<Vec<f64>>,
    pub c_l1: Option<Vec<f64>>,
    pub c_re: Option<Vec<f64>>,
    pub snapshots: Vec<WalkerState>,
    pub final_state: WalkerState,
}

impl Trajectory {
    pub fn msd_series(&self) -> Option<MsdSeries> {
        self.msd.as_ref().map(|v| MsdSeries::from_step_zero(v.clone()))
    }

    /// One coherence record per step 1..=T, when both measures were recorded.
    pub fn coherence_records(&self) -> Option<Vec<CoherenceRecord>> {
        let l1 = self.c_l1.as_ref()?;
        let re = self.c_re.as_ref()?;
        Some(
            self.steps
                .iter()
                .skip(1)
                .map(|&t| CoherenceRecord {
                    step: t,
                    c_l1: l1[t],
                    c_re: re[t],
                })
                .collect(),
        )
    }
}

/// Advance the state by one step: rotate the coin pair at every occupied
/// site, then shift the up component left and the down component right.
pub fn step(state: &mut WalkerState, schedule: &CoinSchedule) -> Result<()> {
    let t = state.step();
    if t >= state.horizon() {
        return Err(Error::Capacity(format!(
            "state already at its horizon of {} steps",
            state.horizon()
        )));
    }
    let next = t + 1;
    if next > schedule.horizon() {
        return Err(Error::Validation(format!(
            "schedule covers {} steps, cannot supply step {next}",
            schedule.horizon()
        )));
    }

    let window = state.window();
    let lo = window.offset(-(t as i64));
    let hi = window.offset(t as i64);
    // stale scratch content lies inside the write range [lo-1, hi+1]
    for i in lo - 1..=hi + 1 {
        state.scratch_up[i] = num_complex::Complex64::new(0.0, 0.0);
        state.scratch_down[i] = num_complex::Complex64::new(0.0, 0.0);
    }

    match schedule.uniform_coin_for_step(next)? {
        Some(coin) => {
            for i in lo..=hi {
                let (cu, cd) = coin.apply(state.up[i], state.down[i]);
                state.scratch_up[i - 1] += cu;
                state.scratch_down[i + 1] += cd;
            }
        }
        None => {
            // spatial disorder: per-site coins, indexed in the schedule's own window
            let sched_window = LatticeWindow::new(schedule.horizon());
            for i in lo..=hi {
                let x = window.site(i);
                let coin = schedule.site_coin_by_offset(sched_window.offset(x));
                let (cu, cd) = coin.apply(state.up[i], state.down[i]);
                state.scratch_up[i - 1] += cu;
                state.scratch_down[i + 1] += cd;
            }
        }
    }

    std::mem::swap(&mut state.up, &mut state.scratch_up);
    std::mem::swap(&mut state.down, &mut state.scratch_down);
    state.step = next;
    Ok(())
}

/// Run `steps` steps from `initial`, recording the requested observables at
/// step 0 and after every step.
pub fn evolve(
    initial: WalkerState,
    schedule: &CoinSchedule,
    steps: usize,
    recorder: &RecorderSpec,
) -> Result<Trajectory> {
    if initial.step() + steps > initial.horizon() {
        return Err(Error::Capacity(format!(
            "{} steps from step {} exceed the horizon of {}",
            steps,
            initial.step(),
            initial.horizon()
        )));
    }
    let mut state = initial;
    let mut tape = Tape::new(recorder, steps);
    tape.record(&state);
    for _ in 0..steps {
        step(&mut state, schedule)?;
        tape.record(&state);
    }
    Ok(tape.finish(state))
}

struct Tape {
    spec: RecorderSpec,
    steps: Vec<usize>,
    msd: Option<Vec<f64>>,
    c_l1: Option<Vec<f64>>,
    c_re: Option<Vec<f64>>,
    snapshots: Vec<WalkerState>,
}

impl Tape {
    fn new(spec: &RecorderSpec, steps: usize) -> Self {
        Self {
            spec: *spec,
            steps: Vec::with_capacity(steps + 1),
            msd: spec.msd.then(|| Vec::with_capacity(steps + 1)),
            c_l1: spec.l1.then(|| Vec::with_capacity(steps + 1)),
            c_re: spec.re.then(|| Vec::with_capacity(steps + 1)),
            snapshots: Vec::new(),
        }
    }

    fn record(&mut self, state: &WalkerState) {
        self.steps.push(state.step());
        if let Some(series) = self.msd.as_mut() {
            series.push(msd(&probability_distribution(state)));
        }
        if let Some(series) = self.c_l1.as_mut() {
            series.push(l1_coherence_normalized(state));
        }
        if let Some(series) = self.c_re.as_mut() {
            series.push(relative_entropy_coherence(state));
        }
        if self.spec.snapshots && state.step() <= self.spec.snapshot_cap {
            self.snapshots.push(state.clone());
        }
    }

    fn finish(self, final_state: WalkerState) -> Trajectory {
        Trajectory {
            steps: self.steps,
            msd: self.msd,
            c_l1: self.c_l1,
            c_re: self.c_re,
            snapshots: self.snapshots,
            final_state,
        }
    }
}

/// Exact distribution of the measured walk: a coin measurement after every
/// step reduces the dynamics to the symmetric classical random walk, so
/// p(x) = C(t, (t+x)/2) / 2^t for (x+t) even and the variance is t.
pub fn measured_walk_distribution(steps: usize) -> PositionDistribution {
    let window = LatticeWindow::new(steps);
    let mut p = vec![0.0; window.num_sites()];
    // binomial pmf by forward recurrence over the lower half, mirrored so
    // p(x) and p(−x) are bitwise identical
    let t = steps;
    let mut pmf = vec![0.0; t + 1];
    pmf[0] = 0.5f64.powi(t as i32);
    for k in 0..t / 2 {
        pmf[k + 1] = pmf[k] * (t - k) as f64 / (k + 1) as f64;
    }
    for k in 0..=t {
        let low = k.min(t - k);
        let x = 2 * k as i64 - t as i64;
        p[window.offset(x)] = pmf[low];
    }
    PositionDistribution::from_probabilities(window, p)
        .expect("binomial probabilities are normalized")
}
