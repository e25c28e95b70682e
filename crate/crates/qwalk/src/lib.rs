//! Discrete-time quantum walks on a one-dimensional lattice.
//!
//! The walker carries a two-level coin; each step rotates the coin and then
//! shifts the up component one site left and the down component one site
//! right. Four coin schedules are provided:
//!
//! - **Homogeneous**: a fixed rotation angle θ at every step and site.
//! - **Accelerated**: a step-dependent angle θ₀·e^{−a·t} that drives the walk
//!   toward ballistic spreading.
//! - **Temporal disorder**: a fresh random angle per step (weak localization).
//! - **Spatial disorder**: a fixed random angle per site (Anderson
//!   localization).
//!
//! On top of the evolution the crate computes position distributions, mean
//! squared displacement, anomalous-diffusion exponents, and two coherence
//! measures of the reduced position state (normalized l1-norm and relative
//! entropy of coherence), plus reproducible ensemble averaging over disorder
//! realizations.
//!
//! # Quick start
//!
//! ```
//! use qwalk::{evolve, CoinAmplitudes, CoinSchedule, RecorderSpec, WalkerState};
//! use std::f64::consts::FRAC_PI_4;
//!
//! let coin = CoinAmplitudes::balanced();
//! let state = WalkerState::new_localized(coin, 100).unwrap();
//! let schedule = CoinSchedule::homogeneous(FRAC_PI_4, 100);
//! let traj = evolve(state, &schedule, 100, &RecorderSpec::msd_only()).unwrap();
//! let msd = traj.msd.as_ref().unwrap();
//! assert!((msd[100] - 2929.4).abs() < 1.0);
//! ```
//!
//! Runnable demonstrations of every capability live in `examples/`; the
//! `qwalk` binary exposes the same runs behind command-line flags.

pub mod cli;
pub mod coherence;
pub mod coin;
pub mod ensemble;
pub mod error;
pub mod evolution;
pub mod observables;
pub mod state;

pub use coherence::{
    gram_matrix, l1_coherence_normalized, reduced_position_density, relative_entropy_coherence,
    CoherenceRecord, GramMatrix, ReducedDensityMatrix,
};
pub use coin::{accelerated_theta, homogeneous_coin, sample_disorder_angles, su2_coin, CoinMatrix, CoinSchedule};
pub use ensemble::{derive_trial_seed, run_ensemble, AveragedSeries, EnsembleConfig, SeriesStats, WalkFamily};
pub use error::{Error, Result};
pub use evolution::{evolve, measured_walk_distribution, step, RecorderSpec, Trajectory};
pub use observables::{
    anchored_alpha, fit_alpha, localization_length, moment, msd, probability_distribution,
    AlphaEstimate, MsdSeries, PositionDistribution,
};
pub use state::{Amplitude, CoinAmplitudes, LatticeWindow, WalkerState};
