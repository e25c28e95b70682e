//! Shared oracle helpers for the integration suites.
//!
//! The dense path builds the explicit 2(2T+1)-dimensional step unitary and
//! multiplies it out, exercising none of the library's shift/buffer logic.

#![allow(dead_code)]

use num_complex::Complex64;
use qwalk::{CoinAmplitudes, CoinSchedule, WalkerState};

/// Joint state vector in the dense basis: index i holds ψ↑ at offset i,
/// index n + i holds ψ↓ at offset i.
pub struct DenseState {
    pub n: usize,
    pub v: Vec<Complex64>,
}

impl DenseState {
    pub fn localized(coin: CoinAmplitudes, horizon: usize) -> Self {
        let n = 2 * horizon + 1;
        let mut v = vec![Complex64::new(0.0, 0.0); 2 * n];
        v[horizon] = coin.up();
        v[n + horizon] = coin.down();
        Self { n, v }
    }

    pub fn up_at_offset(&self, i: usize) -> Complex64 {
        self.v[i]
    }

    pub fn down_at_offset(&self, i: usize) -> Complex64 {
        self.v[self.n + i]
    }
}

/// One step as an explicit matrix-vector product with the full
/// shift·(coin⊗identity) operator.
pub fn dense_step(state: &mut DenseState, schedule: &CoinSchedule, step: usize) {
    let n = state.n;
    let horizon = (n - 1) / 2;
    let dim = 2 * n;
    let mut w = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..n {
        let x = i as i64 - horizon as i64;
        let coin = schedule.coin_at(step, x).expect("step and site in range");
        // column for (↑, x): coin then shift up-left / down-right
        if i >= 1 {
            w[(i - 1) * dim + i] = coin.uu;
        }
        if i + 1 < n {
            w[(n + i + 1) * dim + i] = coin.du;
        }
        // column for (↓, x)
        if i >= 1 {
            w[(i - 1) * dim + (n + i)] = coin.ud;
        }
        if i + 1 < n {
            w[(n + i + 1) * dim + (n + i)] = coin.dd;
        }
    }
    let mut next = vec![Complex64::new(0.0, 0.0); dim];
    for (row, slot) in next.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (col, &amp) in state.v.iter().enumerate() {
            acc += w[row * dim + col] * amp;
        }
        *slot = acc;
    }
    state.v = next;
}

/// Evolve the dense oracle `steps` steps from the balanced localized state.
pub fn dense_evolve(schedule: &CoinSchedule, horizon: usize, steps: usize) -> DenseState {
    let mut state = DenseState::localized(CoinAmplitudes::balanced(), horizon);
    for step in 1..=steps {
        dense_step(&mut state, schedule, step);
    }
    state
}

/// Largest amplitude difference between a library state and the dense oracle.
pub fn max_amplitude_deviation(state: &WalkerState, dense: &DenseState) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..dense.n {
        worst = worst.max((state.up()[i] - dense.up_at_offset(i)).norm());
        worst = worst.max((state.down()[i] - dense.down_at_offset(i)).norm());
    }
    worst
}

/// The four schedule families at the reference parameters (θ = π/4,
/// a = 0.02) used throughout the suites, realized over `horizon` steps.
pub fn all_families(horizon: usize, seed: u64) -> Vec<(&'static str, CoinSchedule)> {
    let theta = std::f64::consts::FRAC_PI_4;
    vec![
        ("homogeneous", CoinSchedule::homogeneous(theta, horizon)),
        (
            "accelerated",
            CoinSchedule::accelerated(theta, 0.02, horizon).unwrap(),
        ),
        ("temporal", CoinSchedule::temporal_disorder(seed, horizon)),
        ("spatial", CoinSchedule::spatial_disorder(seed, horizon)),
    ]
}
