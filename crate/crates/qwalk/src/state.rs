//! Pure coin⊗position state on a fixed lattice window.
//!
//! The window is preallocated for a maximum number of steps (the horizon) so
//! the evolution and coherence kernels run over contiguous storage with no
//! reallocation. Site x ∈ [−T, T] maps to array offset x + T.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex amplitude of a single basis component.
pub type Amplitude = Complex64;

/// Normalization tolerance accepted by constructors.
const NORM_TOL: f64 = 1e-9;

/// Symmetric site range [−T, T] able to hold a T-step walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeWindow {
    horizon: usize,
}

impl LatticeWindow {
    pub fn new(horizon: usize) -> Self {
        Self { horizon }
    }

    /// Maximum number of steps the window can absorb.
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Number of lattice sites, 2T+1.
    pub fn num_sites(&self) -> usize {
        2 * self.horizon + 1
    }

    pub fn min_site(&self) -> i64 {
        -(self.horizon as i64)
    }

    pub fn max_site(&self) -> i64 {
        self.horizon as i64
    }

    pub fn contains(&self, x: i64) -> bool {
        x.unsigned_abs() as usize <= self.horizon
    }

    /// Array offset of site x. Panics if x lies outside the window.
    pub fn offset(&self, x: i64) -> usize {
        debug_assert!(self.contains(x), "site {x} outside window ±{}", self.horizon);
        (x + self.horizon as i64) as usize
    }

    /// Site coordinate of an array offset.
    pub fn site(&self, offset: usize) -> i64 {
        offset as i64 - self.horizon as i64
    }

    /// Iterator over all site coordinates, left to right.
    pub fn sites(&self) -> impl Iterator<Item = i64> {
        self.min_site()..=self.max_site()
    }
}

/// Normalized coin-space amplitudes (c₁|↑⟩ + c₂|↓⟩).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinAmplitudes {
    up: Amplitude,
    down: Amplitude,
}

impl CoinAmplitudes {
    /// Build a coin state, rejecting non-normalized amplitudes.
    pub fn new(up: Amplitude, down: Amplitude) -> Result<Self> {
        let norm_sq = up.norm_sqr() + down.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::Validation(format!(
                "coin amplitudes not normalized: |c1|^2 + |c2|^2 = {norm_sq}"
            )));
        }
        Ok(Self { up, down })
    }

    /// The equal real superposition (1/√2, 1/√2) which keeps the walk
    /// distribution symmetric under the Ĉ(0, π/2, θ) coin family.
    pub fn balanced() -> Self {
        let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self { up: c, down: c }
    }

    pub fn up(&self) -> Amplitude {
        self.up
    }

    pub fn down(&self) -> Amplitude {
        self.down
    }
}

/// Walker state: ψ↑ and ψ↓ amplitude arrays over the window plus the step
/// counter. Scratch buffers of the same size are carried so stepping is a
/// swap, not an allocation.
#[derive(Debug, Clone)]
pub struct WalkerState {
    window: LatticeWindow,
    pub(crate) up: Vec<Amplitude>,
    pub(crate) down: Vec<Amplitude>,
    pub(crate) scratch_up: Vec<Amplitude>,
    pub(crate) scratch_down: Vec<Amplitude>,
    pub(crate) step: usize,
}

impl WalkerState {
    /// State localized at the origin with the given coin, step 0.
    pub fn new_localized(coin: CoinAmplitudes, horizon: usize) -> Result<Self> {
        let window = LatticeWindow::new(horizon);
        let n = window.num_sites();
        let zero = Complex64::new(0.0, 0.0);
        let mut up = vec![zero; n];
        let mut down = vec![zero; n];
        let origin = window.offset(0);
        up[origin] = coin.up();
        down[origin] = coin.down();
        Ok(Self {
            window,
            up,
            down,
            scratch_up: vec![zero; n],
            scratch_down: vec![zero; n],
            step: 0,
        })
    }

    /// Build a state directly from amplitude arrays (synthetic states for
    /// analysis; walk-generated support/parity structure is not enforced,
    /// only normalization and finiteness).
    pub fn from_amplitudes(
        horizon: usize,
        step: usize,
        up: Vec<Amplitude>,
        down: Vec<Amplitude>,
    ) -> Result<Self> {
        let window = LatticeWindow::new(horizon);
        let n = window.num_sites();
        if up.len() != n || down.len() != n {
            return Err(Error::Validation(format!(
                "amplitude arrays must have {n} entries, got {} and {}",
                up.len(),
                down.len()
            )));
        }
        if step > horizon {
            return Err(Error::Validation(format!(
                "step {step} exceeds horizon {horizon}"
            )));
        }
        let norm_sq: f64 = up
            .iter()
            .chain(down.iter())
            .map(|a| a.norm_sqr())
            .sum();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::Validation(format!(
                "state not normalized: norm^2 = {norm_sq}"
            )));
        }
        let zero = Complex64::new(0.0, 0.0);
        Ok(Self {
            window,
            up,
            down,
            scratch_up: vec![zero; n],
            scratch_down: vec![zero; n],
            step,
        })
    }

    pub fn window(&self) -> LatticeWindow {
        self.window
    }

    pub fn horizon(&self) -> usize {
        self.window.horizon()
    }

    /// Steps taken so far.
    pub fn step(&self) -> usize {
        self.step
    }

    /// ψ↑ over the full window, offset order.
    pub fn up(&self) -> &[Amplitude] {
        &self.up
    }

    /// ψ↓ over the full window, offset order.
    pub fn down(&self) -> &[Amplitude] {
        &self.down
    }

    pub fn up_at(&self, x: i64) -> Amplitude {
        self.up[self.window.offset(x)]
    }

    pub fn down_at(&self, x: i64) -> Amplitude {
        self.down[self.window.offset(x)]
    }

    /// Σ_x |ψ↑(x)|² + |ψ↓(x)|². Stays 1 under unitary stepping.
    pub fn norm_squared(&self) -> f64 {
        self.up
            .iter()
            .zip(self.down.iter())
            .map(|(u, d)| u.norm_sqr() + d.norm_sqr())
            .sum()
    }

    /// Probability of finding the walker at site x.
    pub fn probability_at(&self, x: i64) -> f64 {
        let i = self.window.offset(x);
        self.up[i].norm_sqr() + self.down[i].norm_sqr()
    }
}
