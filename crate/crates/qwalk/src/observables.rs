//! Position-space observables: probability distributions, moments, mean
//! squared displacement, power-law exponent estimation, and the
//! localization-length formula.

use crate::error::{Error, Result};
use crate::state::{LatticeWindow, WalkerState};

/// Probability mass over the lattice window at a fixed step.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionDistribution {
    window: LatticeWindow,
    p: Vec<f64>,
}

impl PositionDistribution {
    /// Wrap a probability vector over a window, checking normalization.
    pub fn from_probabilities(window: LatticeWindow, p: Vec<f64>) -> Result<Self> {
        if p.len() != window.num_sites() {
            return Err(Error::Validation(format!(
                "distribution must have {} entries, got {}",
                window.num_sites(),
                p.len()
            )));
        }
        if p.iter().any(|&v| !v.is_finite() || v < 0.0) {
            return Err(Error::Validation("probabilities must be finite and non-negative".into()));
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::Validation(format!(
                "probabilities sum to {total}, expected 1"
            )));
        }
        Ok(Self { window, p })
    }

    pub fn window(&self) -> LatticeWindow {
        self.window
    }

    /// Probabilities in window offset order.
    pub fn probabilities(&self) -> &[f64] {
        &self.p
    }

    pub fn prob_at(&self, x: i64) -> f64 {
        self.p[self.window.offset(x)]
    }

    /// (site, probability) pairs, left to right.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.p
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.window.site(i), v))
    }
}

/// p(x) = |ψ↑(x)|² + |ψ↓(x)|² over the state's window.
pub fn probability_distribution(state: &WalkerState) -> PositionDistribution {
    let p = state
        .up()
        .iter()
        .zip(state.down().iter())
        .map(|(u, d)| u.norm_sqr() + d.norm_sqr())
        .collect();
    PositionDistribution {
        window: state.window(),
        p,
    }
}

/// n-th raw moment Σ_x xⁿ p(x).
pub fn moment(dist: &PositionDistribution, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::Validation("moment order must be at least 1".into()));
    }
    Ok(dist
        .iter()
        .map(|(x, p)| (x as f64).powi(n as i32) * p)
        .sum())
}

/// Mean squared displacement ⟨x²⟩ − ⟨x⟩².
///
/// Cancellation can leave a residue of order −1e−16 for point masses; values
/// above −1e−12 clamp to zero and anything more negative panics, since a
/// valid distribution cannot produce it.
pub fn msd(dist: &PositionDistribution) -> f64 {
    let m1 = moment(dist, 1).expect("moment order 1 is valid");
    let m2 = moment(dist, 2).expect("moment order 2 is valid");
    let raw = m2 - m1 * m1;
    assert!(
        raw > -1e-12,
        "internal consistency error: msd = {raw} from a validated distribution"
    );
    raw.max(0.0)
}

/// Mean squared displacement per step.
#[derive(Debug, Clone, PartialEq)]
pub struct MsdSeries {
    steps: Vec<usize>,
    values: Vec<f64>,
}

impl MsdSeries {
    pub fn new(steps: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        if steps.len() != values.len() {
            return Err(Error::Validation(format!(
                "series lengths differ: {} steps, {} values",
                steps.len(),
                values.len()
            )));
        }
        Ok(Self { steps, values })
    }

    /// Series whose index is the step number, starting at step 0.
    pub fn from_step_zero(values: Vec<f64>) -> Self {
        Self {
            steps: (0..values.len()).collect(),
            values,
        }
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn window_points(&self, t_min: usize, t_max: usize) -> Result<Vec<(usize, f64)>> {
        if t_min < 1 {
            return Err(Error::Validation("fit window must start at step 1 or later".into()));
        }
        if t_min > t_max {
            return Err(Error::Validation(format!(
                "empty fit window ({t_min}, {t_max})"
            )));
        }
        let max_step = *self.steps.last().ok_or_else(|| {
            Error::Validation("cannot fit an empty series".into())
        })?;
        if t_max > max_step {
            return Err(Error::Validation(format!(
                "fit window end {t_max} exceeds last recorded step {max_step}"
            )));
        }
        let pts: Vec<(usize, f64)> = self
            .steps
            .iter()
            .zip(self.values.iter())
            .filter(|(&t, _)| t >= t_min && t <= t_max)
            .map(|(&t, &m)| (t, m))
            .collect();
        for &(t, m) in &pts {
            if m <= 0.0 {
                return Err(Error::Validation(format!(
                    "msd is non-positive ({m}) at step {t}; log-log fit undefined"
                )));
            }
        }
        Ok(pts)
    }
}

/// Power-law exponent with its fit window and log-log RMS residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaEstimate {
    pub alpha: f64,
    pub fit_window: (usize, usize),
    pub residual: f64,
}

/// Ordinary least squares slope of ln(msd) against ln(t) over the window.
///
/// Exact on pure power laws c·tᵅ and invariant under uniform scaling of the
/// series.
pub fn fit_alpha(series: &MsdSeries, window: (usize, usize)) -> Result<AlphaEstimate> {
    let (t_min, t_max) = window;
    let pts = series.window_points(t_min, t_max)?;
    if pts.len() < 2 {
        return Err(Error::Validation(format!(
            "fit window ({t_min}, {t_max}) holds {} point(s); need at least 2",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let logs: Vec<(f64, f64)> = pts
        .iter()
        .map(|&(t, m)| ((t as f64).ln(), m.ln()))
        .collect();
    let mean_x = logs.iter().map(|&(x, _)| x).sum::<f64>() / n;
    let mean_y = logs.iter().map(|&(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mean_x) * (x - mean_x)).sum();
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mean_x) * (y - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::Validation(
            "fit window spans a single distinct step; slope undefined".into(),
        ));
    }
    let alpha = sxy / sxx;
    let intercept = mean_y - alpha * mean_x;
    let ss_res: f64 = logs
        .iter()
        .map(|&(x, y)| {
            let r = y - (alpha * x + intercept);
            r * r
        })
        .sum();
    Ok(AlphaEstimate {
        alpha,
        fit_window: window,
        residual: (ss_res / n).sqrt(),
    })
}

/// Mean pointwise exponent ln msd(t) / ln t over the window, skipping t = 1
/// where the anchor itself carries no slope information.
///
/// This reads the exponent the way log-log plots of an msd(1) = 1 series are
/// read: each point is compared against the origin of the log-log axes. It
/// is equivalent to a through-origin log-log fit with 1/ln²t weights, so
/// unlike [`fit_alpha`] it is not invariant under rescaling the series.
pub fn anchored_alpha(series: &MsdSeries, window: (usize, usize)) -> Result<f64> {
    let (t_min, t_max) = window;
    let pts = series.window_points(t_min, t_max)?;
    let slopes: Vec<f64> = pts
        .iter()
        .filter(|&&(t, _)| t >= 2)
        .map(|&(t, m)| m.ln() / (t as f64).ln())
        .collect();
    if slopes.is_empty() {
        return Err(Error::Validation(format!(
            "anchored fit window ({t_min}, {t_max}) holds no steps ≥ 2"
        )));
    }
    Ok(slopes.iter().sum::<f64>() / slopes.len() as f64)
}

/// Localization length ξ = −1/ln(cos θ); finite on 0 < θ < π/2.
pub fn localization_length(theta: f64) -> Result<f64> {
    let c = theta.cos();
    if c >= 1.0 {
        return Err(Error::Divergence(format!(
            "localization length diverges as θ → 0 (θ = {theta})"
        )));
    }
    if c <= 0.0 {
        return Err(Error::Domain(format!(
            "cos θ = {c} outside (0, 1); localization length undefined for θ = {theta}"
        )));
    }
    Ok(-c.ln().recip())
}
