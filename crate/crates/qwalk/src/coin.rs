//! SU(2) coin matrices and the four schedule families assigning a coin to
//! each (step, position).
//!
//! Disorder angles are drawn with a counter-based scheme: one ChaCha8 stream
//! per (seed, index) pair, so a realized table is reproducible and does not
//! depend on sampling order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::state::LatticeWindow;

/// 2×2 unitary acting on the coin degree of freedom.
///
/// Field `ud` is the up-row, down-column entry and so on; applying the coin
/// maps (ψ↑, ψ↓) to (uu·ψ↑ + ud·ψ↓, du·ψ↑ + dd·ψ↓).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinMatrix {
    pub uu: Complex64,
    pub ud: Complex64,
    pub du: Complex64,
    pub dd: Complex64,
}

impl CoinMatrix {
    pub fn identity() -> Self {
        Self {
            uu: Complex64::new(1.0, 0.0),
            ud: Complex64::new(0.0, 0.0),
            du: Complex64::new(0.0, 0.0),
            dd: Complex64::new(1.0, 0.0),
        }
    }

    /// Rotate a coin pair.
    #[inline]
    pub fn apply(&self, up: Complex64, down: Complex64) -> (Complex64, Complex64) {
        (self.uu * up + self.ud * down, self.du * up + self.dd * down)
    }

    pub fn determinant(&self) -> Complex64 {
        self.uu * self.dd - self.ud * self.du
    }

    /// Largest entrywise deviation of C·C† from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let c = |re, im| Complex64::new(re, im);
        let e00 = self.uu * self.uu.conj() + self.ud * self.ud.conj() - c(1.0, 0.0);
        let e01 = self.uu * self.du.conj() + self.ud * self.dd.conj();
        let e10 = self.du * self.uu.conj() + self.dd * self.ud.conj();
        let e11 = self.du * self.du.conj() + self.dd * self.dd.conj() - c(1.0, 0.0);
        e00.norm().max(e01.norm()).max(e10.norm()).max(e11.norm())
    }
}

/// General SU(2) coin
/// [[e^{iξ}cosθ, e^{iη}sinθ], [−e^{−iη}sinθ, e^{−iξ}cosθ]].
pub fn su2_coin(xi: f64, eta: f64, theta: f64) -> CoinMatrix {
    let (sin_t, cos_t) = theta.sin_cos();
    CoinMatrix {
        uu: Complex64::cis(xi) * cos_t,
        ud: Complex64::cis(eta) * sin_t,
        du: -Complex64::cis(-eta) * sin_t,
        dd: Complex64::cis(-xi) * cos_t,
    }
}

/// The ξ=0, η=π/2 member used by every walk family here:
/// [[cosθ, i·sinθ], [i·sinθ, cosθ]]. Constructed directly so the diagonal is
/// exactly real and the off-diagonal exactly imaginary.
pub fn homogeneous_coin(theta: f64) -> CoinMatrix {
    let (sin_t, cos_t) = theta.sin_cos();
    CoinMatrix {
        uu: Complex64::new(cos_t, 0.0),
        ud: Complex64::new(0.0, sin_t),
        du: Complex64::new(0.0, sin_t),
        dd: Complex64::new(cos_t, 0.0),
    }
}

/// Exponentially decaying coin angle θ₀·e^{−a·step} of the accelerated walk.
/// The first applied coin is step 1, i.e. θ₁ = θ₀e^{−a}.
pub fn accelerated_theta(theta0: f64, rate: f64, step: usize) -> Result<f64> {
    if rate < 0.0 {
        return Err(Error::Validation(format!(
            "acceleration rate must be non-negative, got {rate}"
        )));
    }
    if step == 0 {
        return Err(Error::Validation("accelerated steps are counted from 1".into()));
    }
    Ok(theta0 * (-rate * step as f64).exp())
}

/// Deterministic uniform angles in [0, π). Entry i is drawn from ChaCha8
/// stream i keyed by `seed`, so tables are reproducible per index.
pub fn sample_disorder_angles(seed: u64, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::Validation("angle count must be at least 1".into()));
    }
    Ok(disorder_angle_table(seed, count))
}

fn disorder_angle_table(seed: u64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            rng.random::<f64>() * PI
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
enum Family {
    Homogeneous { theta: f64 },
    Accelerated { theta0: f64, rate: f64 },
    /// One realized angle per step, index step−1.
    TemporalDisorder { seed: u64, thetas: Vec<f64> },
    /// One realized angle per site, window offset order.
    SpatialDisorder { seed: u64, thetas: Vec<f64> },
}

/// Immutable rule assigning a coin to each (step, position) up to a horizon.
///
/// A disorder schedule realizes its whole angle table at construction; one
/// realized schedule is one trial.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinSchedule {
    horizon: usize,
    family: Family,
}

impl CoinSchedule {
    /// Fixed coin angle at every step and site.
    pub fn homogeneous(theta: f64, horizon: usize) -> Self {
        Self {
            horizon,
            family: Family::Homogeneous { theta },
        }
    }

    /// Step-dependent angle θ₀·e^{−rate·t}; rate 0 reduces to homogeneous.
    pub fn accelerated(theta0: f64, rate: f64, horizon: usize) -> Result<Self> {
        if rate < 0.0 {
            return Err(Error::Validation(format!(
                "acceleration rate must be non-negative, got {rate}"
            )));
        }
        Ok(Self {
            horizon,
            family: Family::Accelerated { theta0, rate },
        })
    }

    /// Fresh random angle per step, uniform over [0, π).
    pub fn temporal_disorder(seed: u64, horizon: usize) -> Self {
        Self {
            horizon,
            family: Family::TemporalDisorder {
                seed,
                thetas: disorder_angle_table(seed, horizon),
            },
        }
    }

    /// Fixed random angle per site, uniform over [0, π).
    pub fn spatial_disorder(seed: u64, horizon: usize) -> Self {
        Self {
            horizon,
            family: Family::SpatialDisorder {
                seed,
                thetas: disorder_angle_table(seed, 2 * horizon + 1),
            },
        }
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Realized angle table of a disorder schedule.
    pub fn realized_angles(&self) -> Option<&[f64]> {
        match &self.family {
            Family::TemporalDisorder { thetas, .. } | Family::SpatialDisorder { thetas, .. } => {
                Some(thetas)
            }
            _ => None,
        }
    }

    /// Coin applied at `step` (1-based) and `position`.
    pub fn coin_at(&self, step: usize, position: i64) -> Result<CoinMatrix> {
        if step == 0 || step > self.horizon {
            return Err(Error::Validation(format!(
                "step {step} outside schedule range 1..={}",
                self.horizon
            )));
        }
        let window = LatticeWindow::new(self.horizon);
        if !window.contains(position) {
            return Err(Error::Validation(format!(
                "position {position} outside window ±{}",
                self.horizon
            )));
        }
        Ok(match &self.family {
            Family::Homogeneous { theta } => homogeneous_coin(*theta),
            Family::Accelerated { theta0, rate } => {
                homogeneous_coin(accelerated_theta(*theta0, *rate, step)?)
            }
            Family::TemporalDisorder { thetas, .. } => homogeneous_coin(thetas[step - 1]),
            Family::SpatialDisorder { thetas, .. } => homogeneous_coin(thetas[window.offset(position)]),
        })
    }

    /// The single coin used across all sites at `step`, or None when the
    /// coin is position dependent.
    pub(crate) fn uniform_coin_for_step(&self, step: usize) -> Result<Option<CoinMatrix>> {
        match &self.family {
            Family::SpatialDisorder { .. } => Ok(None),
            _ => self.coin_at(step, 0).map(Some),
        }
    }

    /// Coin for a site by window offset, bypassing coordinate checks; only
    /// meaningful for spatial disorder inner loops.
    pub(crate) fn site_coin_by_offset(&self, offset: usize) -> CoinMatrix {
        match &self.family {
            Family::SpatialDisorder { thetas, .. } => homogeneous_coin(thetas[offset]),
            _ => unreachable!("per-site coins only exist for spatial disorder"),
        }
    }
}
