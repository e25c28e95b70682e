//! Coherence of the walker's position degree of freedom.
//!
//! The joint state is pure, so the reduced position density matrix
//! ρ(j,k) = ψ↑(j)ψ↑(k)* + ψ↓(j)ψ↓(k)* has rank ≤ 2 and its nonzero spectrum
//! equals the spectrum of the 2×2 coin-overlap (Gram) matrix. Both measures
//! exploit this: the l1 sum streams over site pairs without materializing ρ,
//! and the entropy comes from a closed-form 2×2 eigenvalue pair. The full
//! matrix is still constructible for inspection and cross-checks.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::state::WalkerState;

/// Pair count above which the l1 row sums are computed on the rayon pool.
/// Rows are reduced in fixed index order either way, so the result does not
/// depend on the degree of parallelism.
const PARALLEL_ROWS: usize = 256;

/// Materialized reduced position density matrix over the occupied window
/// [−t, t], dimension 2t+1.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensityMatrix {
    radius: usize,
    data: Vec<Complex64>,
}

impl ReducedDensityMatrix {
    /// Diagonal matrix carrying a probability vector (an incoherent state).
    pub fn from_diagonal(radius: usize, probabilities: &[f64]) -> Self {
        let n = 2 * radius + 1;
        assert_eq!(probabilities.len(), n, "diagonal length must be 2t+1");
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for (i, &p) in probabilities.iter().enumerate() {
            data[i * n + i] = Complex64::new(p, 0.0);
        }
        Self { radius, data }
    }

    /// Number of steps t behind this matrix; the dimension is 2t+1.
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn dim(&self) -> usize {
        2 * self.radius + 1
    }

    /// Entry ρ(j,k) addressed by site coordinates in [−t, t].
    pub fn entry(&self, j: i64, k: i64) -> Complex64 {
        let n = self.dim();
        let r = self.radius as i64;
        assert!(j.abs() <= r && k.abs() <= r, "site pair ({j},{k}) outside ±{r}");
        self.data[((j + r) as usize) * n + (k + r) as usize]
    }

    pub fn trace(&self) -> f64 {
        let n = self.dim();
        (0..n).map(|i| self.data[i * n + i].re).sum()
    }

    /// Diagonal in site order; equals the position distribution.
    pub fn diagonal(&self) -> Vec<f64> {
        let n = self.dim();
        (0..n).map(|i| self.data[i * n + i].re).collect()
    }

    /// Largest |ρ(j,k) − ρ(k,j)*| over all pairs.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        for j in 0..n {
            for k in 0..n {
                worst = worst.max((self.data[j * n + k] - self.data[k * n + j].conj()).norm());
            }
        }
        worst
    }

    /// (1/t)·Σ_{j>k} |ρ(j,k)| straight off the materialized entries; the
    /// cross-check counterpart of [`l1_coherence_normalized`].
    pub fn l1_normalized(&self) -> f64 {
        if self.radius == 0 {
            return 0.0;
        }
        let n = self.dim();
        let mut sum = 0.0;
        for j in 0..n {
            for k in 0..j {
                sum += self.data[j * n + k].norm();
            }
        }
        sum / self.radius as f64
    }
}

/// Trace out the coin: ρ(j,k) = ψ↑(j)ψ↑(k)* + ψ↓(j)ψ↓(k)*.
pub fn reduced_position_density(state: &WalkerState) -> ReducedDensityMatrix {
    let t = state.step();
    let (u, d) = occupied_slices(state);
    let n = 2 * t + 1;
    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for k in 0..n {
            data[j * n + k] = u[j] * u[k].conj() + d[j] * d[k].conj();
        }
    }
    ReducedDensityMatrix { radius: t, data }
}

/// 2×2 Hermitian coin-overlap matrix G(s,s′) = Σ_x ψ_s(x)* ψ_{s′}(x).
///
/// For a pure joint state its eigenvalues are the nonzero eigenvalues of the
/// reduced position density matrix, which is what makes O(t)-memory entropy
/// evaluation possible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramMatrix {
    pub up_up: f64,
    pub down_down: f64,
    pub up_down: Complex64,
}

impl GramMatrix {
    pub fn trace(&self) -> f64 {
        self.up_up + self.down_down
    }

    /// Eigenvalue pair, largest first. Real by hermiticity.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let tr = self.trace();
        let gap = self.up_up - self.down_down;
        let disc = (gap * gap + 4.0 * self.up_down.norm_sqr()).sqrt();
        ((tr + disc) / 2.0, (tr - disc) / 2.0)
    }

    /// Von Neumann entropy of the spectrum, natural log.
    pub fn entropy(&self) -> f64 {
        let (a, b) = self.eigenvalues();
        entropy_of_eigenvalues(&[a, b])
    }
}

/// Coin-overlap matrix of the state.
pub fn gram_matrix(state: &WalkerState) -> GramMatrix {
    let mut up_up = 0.0;
    let mut down_down = 0.0;
    let mut up_down = Complex64::new(0.0, 0.0);
    for (u, d) in state.up().iter().zip(state.down().iter()) {
        up_up += u.norm_sqr();
        down_down += d.norm_sqr();
        up_down += u.conj() * d;
    }
    GramMatrix {
        up_up,
        down_down,
        up_down,
    }
}

/// Normalized l1 coherence (1/t)·Σ_{j>k} |ρ(j,k)|, streamed from the
/// amplitude arrays without materializing ρ. Defined as 0 at t = 0, where
/// the state occupies a single site and has no off-diagonals.
pub fn l1_coherence_normalized(state: &WalkerState) -> f64 {
    let t = state.step();
    if t == 0 {
        return 0.0;
    }
    let (u, d) = occupied_slices(state);
    let rows = offdiagonal_row_sums(u, d);
    rows.iter().sum::<f64>() / t as f64
}

/// Relative entropy of coherence S(ρ_diag) − S(ρ) = H(p) − S(G).
pub fn relative_entropy_coherence(state: &WalkerState) -> f64 {
    let (u, d) = occupied_slices(state);
    let h: f64 = shannon_entropy(u.iter().zip(d.iter()).map(|(a, b)| a.norm_sqr() + b.norm_sqr()));
    let s = gram_matrix(state).entropy();
    let c = h - s;
    assert!(
        c > -1e-9,
        "internal consistency error: dephased entropy {h} below state entropy {s}"
    );
    c.max(0.0)
}

/// Coherence values of one step of a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceRecord {
    pub step: usize,
    pub c_l1: f64,
    pub c_re: f64,
}

fn occupied_slices(state: &WalkerState) -> (&[Complex64], &[Complex64]) {
    let t = state.step() as i64;
    let w = state.window();
    let lo = w.offset(-t);
    let hi = w.offset(t);
    (&state.up()[lo..=hi], &state.down()[lo..=hi])
}

/// Per-row sums Σ_{k<j} |ρ(j,k)|, j in window order. Row j is independent of
/// every other row, so rows may be computed in parallel; the caller adds them
/// in index order.
fn offdiagonal_row_sums(u: &[Complex64], d: &[Complex64]) -> Vec<f64> {
    let row = |j: usize| {
        let uj = u[j];
        let dj = d[j];
        let mut s = 0.0;
        for k in 0..j {
            s += (uj * u[k].conj() + dj * d[k].conj()).norm();
        }
        s
    };
    if u.len() >= PARALLEL_ROWS {
        (0..u.len()).into_par_iter().map(row).collect()
    } else {
        (0..u.len()).map(row).collect()
    }
}

/// Shannon entropy −Σ p ln p with the 0·ln 0 ≡ 0 convention.
pub(crate) fn shannon_entropy(probabilities: impl Iterator<Item = f64>) -> f64 {
    probabilities
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum()
}

/// −Σ λ ln λ over eigenvalues clamped to [0, 1]; magnitudes outside by more
/// than 1e−9 indicate a broken PSD invariant and panic.
pub(crate) fn entropy_of_eigenvalues(eigenvalues: &[f64]) -> f64 {
    eigenvalues
        .iter()
        .map(|&l| {
            assert!(
                (-1e-9..=1.0 + 1e-9).contains(&l),
                "internal consistency error: eigenvalue {l} outside [0, 1]"
            );
            let l = l.clamp(0.0, 1.0);
            if l > 0.0 {
                -l * l.ln()
            } else {
                0.0
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::CoinSchedule;
    use crate::evolution::{evolve, RecorderSpec};
    use crate::state::{CoinAmplitudes, WalkerState};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_4;

    fn walked(steps: usize) -> WalkerState {
        let state = WalkerState::new_localized(CoinAmplitudes::balanced(), steps.max(1)).unwrap();
        let schedule = CoinSchedule::homogeneous(FRAC_PI_4, steps.max(1));
        evolve(state, &schedule, steps, &RecorderSpec::none())
            .unwrap()
            .final_state
    }

    #[test]
    fn localized_state_has_trivial_density_matrix() {
        let s = WalkerState::new_localized(CoinAmplitudes::balanced(), 3).unwrap();
        let rho = reduced_position_density(&s);
        assert_eq!(rho.dim(), 1);
        assert_abs_diff_eq!(rho.entry(0, 0).re, 1.0, epsilon = 1e-15);
        assert_eq!(l1_coherence_normalized(&s), 0.0);
        assert_abs_diff_eq!(relative_entropy_coherence(&s), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn one_step_density_matrix_is_diagonal() {
        let s = walked(1);
        let rho = reduced_position_density(&s);
        assert_eq!(rho.dim(), 3);
        assert_abs_diff_eq!(rho.entry(-1, -1).re, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(rho.entry(0, 0).re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.entry(1, 1).re, 0.5, epsilon = 1e-12);
        // the two occupied sites carry orthogonal coin states
        assert!(rho.entry(-1, 1).norm() < 1e-15);
        assert!(rho.entry(1, -1).norm() < 1e-15);
        assert!(l1_coherence_normalized(&s) < 1e-12);
        assert_abs_diff_eq!(relative_entropy_coherence(&s), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn two_step_density_matrix_hand_values() {
        let s = walked(2);
        let rho = reduced_position_density(&s);
        let m20 = rho.entry(-2, 0);
        assert_abs_diff_eq!(m20.re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m20.im, -0.25, epsilon = 1e-12);
        let m02 = rho.entry(0, 2);
        assert_abs_diff_eq!(m02.re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m02.im, 0.25, epsilon = 1e-12);
        assert!(rho.entry(-2, 2).norm() < 1e-12);
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-12);
        assert!(rho.hermiticity_defect() < 1e-12);
    }

    #[test]
    fn two_step_l1_hand_value() {
        let s = walked(2);
        assert_abs_diff_eq!(l1_coherence_normalized(&s), 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(
            reduced_position_density(&s).l1_normalized(),
            0.25,
            epsilon = 1e-12
        );
    }

    #[test]
    fn gram_matrix_of_product_state() {
        let s = WalkerState::new_localized(CoinAmplitudes::balanced(), 2).unwrap();
        let g = gram_matrix(&s);
        assert_abs_diff_eq!(g.up_up, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(g.down_down, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(g.up_down.re, 0.5, epsilon = 1e-15);
        let (a, b) = g.eigenvalues();
        assert_abs_diff_eq!(a, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn gram_matrix_two_step_hand_values() {
        let s = walked(2);
        let g = gram_matrix(&s);
        assert_abs_diff_eq!(g.up_up, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(g.down_down, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(g.up_down.re, 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(g.up_down.im, 0.0, epsilon = 1e-12);
        let (a, b) = g.eigenvalues();
        assert_abs_diff_eq!(a, 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(b, 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(g.trace(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn two_step_relative_entropy_hand_value() {
        let s = walked(2);
        // H = 1.5·ln 2, S = S(3/4, 1/4)
        assert_abs_diff_eq!(
            relative_entropy_coherence(&s),
            0.477_385_626_221_109_6,
            epsilon = 1e-12
        );
    }

    #[test]
    fn uniform_single_component_state_saturates_l1() {
        let horizon = 12;
        let n = 2 * horizon + 1;
        let amp = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        let up = vec![amp; n];
        let down = vec![Complex64::new(0.0, 0.0); n];
        let s = WalkerState::from_amplitudes(horizon, horizon, up, down).unwrap();
        assert_abs_diff_eq!(l1_coherence_normalized(&s), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn incoherent_diagonal_matrix_has_zero_l1() {
        let p = vec![0.25, 0.0, 0.5, 0.0, 0.25];
        let rho = ReducedDensityMatrix::from_diagonal(2, &p);
        assert_eq!(rho.l1_normalized(), 0.0);
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn gram_trace_stays_one_along_a_walk() {
        for steps in [0, 1, 5, 40] {
            let s = walked(steps);
            assert_abs_diff_eq!(gram_matrix(&s).trace(), 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn gram_spectrum_is_a_valid_coin_purity_pair() {
        for steps in [1, 3, 17, 60] {
            let s = walked(steps);
            let g = gram_matrix(&s);
            let (a, b) = g.eigenvalues();
            assert!((0.5 - 1e-12..=1.0 + 1e-12).contains(&a), "λ = {a} at {steps}");
            assert!((a + b - 1.0).abs() < 1e-10);
            // at most one coin bit of entropy can hide from the position state
            assert!(g.entropy() <= std::f64::consts::LN_2 + 1e-12);
        }
    }

    #[test]
    fn coherence_bounds_hold_along_a_walk() {
        let state = WalkerState::new_localized(CoinAmplitudes::balanced(), 50).unwrap();
        let schedule = CoinSchedule::spatial_disorder(11, 50);
        let traj = evolve(state, &schedule, 50, &RecorderSpec::full()).unwrap();
        let l1 = traj.c_l1.as_ref().unwrap();
        let re = traj.c_re.as_ref().unwrap();
        for t in 0..=50 {
            assert!((0.0..=1.0 + 1e-12).contains(&l1[t]), "c_l1 = {} at {t}", l1[t]);
            let cap = ((2 * t + 1) as f64).ln();
            assert!(re[t] >= 0.0 && re[t] <= cap + 1e-12, "c_re = {} at {t}", re[t]);
        }
    }
}
