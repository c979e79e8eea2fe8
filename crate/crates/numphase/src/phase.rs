//! Finite-N phase formalism and its infinite-dimensional limit.
//!
//! On an `(N+1)`-dimensional space the phase states
//! `|theta_m> = (N+1)^{-1/2} sum_n e^{i n theta_m} |n>` with
//! `theta_m = theta_0 + 2 pi m/(N+1)` form a basis mutually unbiased with the
//! number basis, and the phase operator is `sum_m theta_m |theta_m><theta_m|`.
//! Physical quantities are evaluated at finite `N` and the limit is taken at
//! the end; for a state truncated at dimension `D` the limiting phase density
//!
//! ```text
//! P(theta) = (2 pi)^{-1} sum_{m,n < D} <m|rho|n> e^{i(n-m) theta}
//! ```
//!
//! is an exact closed series, evaluated here through its Fourier
//! coefficients (the superdiagonal sums of `rho`).
//!
//! The multiphoton regime replaces the phase and number distributions of a
//! large-amplitude coherent state by the Gaussian pair with variances
//! `1/(4|z|^2)` and `|z|^2`, which are related by the Fourier transform of
//! their square roots.

use serde::{Deserialize, Serialize};
use statrs::function::erf::erf;

use crate::bounds::{angle_bound, BoundReport};
use crate::config::StateSpec;
use crate::density::{bin_density, Density1D, PhasePartition, DEFAULT_GRID};
use crate::entropy::{unified_entropy, ConjugatePair, DiscreteDistribution, UnifiedParams};
use crate::error::{Error, Result};
use crate::linalg::{C64, CMatrix};
use crate::measurement::Povm;
use crate::states::{DensityOperator, PureState};

const TAU: f64 = std::f64::consts::TAU;
const PI: f64 = std::f64::consts::PI;

/// The `(N+1)` phase states `|theta_m>` for a reference phase `theta_0`.
#[derive(Debug, Clone)]
pub struct PhaseBasis {
    theta0: f64,
    states: Vec<PureState>,
}

/// Build the phase basis on the `(N+1)`-dimensional space, `N >= 1`. The
/// reference phase defaults to zero everywhere in this crate; every bound is
/// invariant under it.
pub fn phase_basis(n: usize, theta0: f64) -> Result<PhaseBasis> {
    if n < 1 {
        return Err(Error::domain("phase basis needs N >= 1"));
    }
    let dim = n + 1;
    let norm = 1.0 / (dim as f64).sqrt();
    let states = (0..dim)
        .map(|m| {
            let theta = theta0 + TAU * m as f64 / dim as f64;
            let v = nalgebra::DVector::from_fn(dim, |k, _| {
                C64::from_polar(norm, theta * k as f64)
            });
            PureState::new(v).expect("phase states are normalized by construction")
        })
        .collect();
    Ok(PhaseBasis { theta0, states })
}

impl PhaseBasis {
    /// Dimension `N + 1` of the underlying space.
    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    /// The eigenphases `theta_m`.
    pub fn thetas(&self) -> Vec<f64> {
        let dim = self.dim();
        (0..dim)
            .map(|m| self.theta0 + TAU * m as f64 / dim as f64)
            .collect()
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    pub fn state(&self, m: usize) -> &PureState {
        &self.states[m]
    }

    /// Projective POVM onto the phase states.
    pub fn povm(&self) -> Povm {
        let dim = self.dim();
        let mut u = CMatrix::zeros(dim, dim);
        for (m, st) in self.states.iter().enumerate() {
            for i in 0..dim {
                u[(i, m)] = st.amplitude(i);
            }
        }
        Povm::from_unitary_columns(&u).expect("phase basis is orthonormal")
    }

    /// Outcome probabilities `|<theta_m|psi>|^2` of a pure state with
    /// truncation at most `N + 1` (embedded if smaller).
    pub fn probabilities_pure(&self, psi: &PureState) -> Result<DiscreteDistribution> {
        let dim = self.dim();
        if psi.dim() > dim {
            return Err(Error::shape(format!(
                "state dim {} exceeds basis dim {dim}",
                psi.dim()
            )));
        }
        let norm = 1.0 / (dim as f64).sqrt();
        let probs: Vec<f64> = (0..dim)
            .map(|m| {
                let theta = self.theta0 + TAU * m as f64 / dim as f64;
                let mut acc = C64::new(0.0, 0.0);
                for n in 0..psi.dim() {
                    acc += C64::from_polar(norm, -theta * n as f64) * psi.amplitude(n);
                }
                acc.norm_sqr()
            })
            .collect();
        DiscreteDistribution::new(probs)
    }
}

/// Phase operator `sum_m theta_m |theta_m><theta_m|`; Hermitian with
/// spectrum exactly `{theta_m}`.
pub fn phase_operator(n: usize, theta0: f64) -> Result<CMatrix> {
    let basis = phase_basis(n, theta0)?;
    let dim = basis.dim();
    let thetas = basis.thetas();
    let mut op = CMatrix::zeros(dim, dim);
    for (m, st) in basis.states().iter().enumerate() {
        for i in 0..dim {
            for j in 0..dim {
                op[(i, j)] += st.amplitude(i) * st.amplitude(j).conj() * thetas[m];
            }
        }
    }
    Ok(op)
}

/// Fourier coefficients `c_k = sum_m <m|rho|m+k>` of the limiting phase
/// density; `P(theta) = (c_0 + 2 Re sum_{k>=1} c_k e^{ik theta}) / (2 pi)`.
fn phase_series_coeffs(rho: &DensityOperator) -> Vec<C64> {
    let d = rho.dim();
    (0..d)
        .map(|k| {
            let mut acc = C64::new(0.0, 0.0);
            for m in 0..d - k {
                acc += rho.entry(m, m + k);
            }
            acc
        })
        .collect()
}

fn eval_phase_series(coeffs: &[C64], theta: f64) -> f64 {
    let rot = C64::from_polar(1.0, theta);
    let mut phase = rot;
    let mut acc = coeffs[0].re;
    for c in &coeffs[1..] {
        acc += 2.0 * (c * phase).re;
        phase *= rot;
    }
    acc / TAU
}

/// Limiting phase density of a truncated state, sampled on `grid` uniform
/// points over `[0, 2 pi]`.
pub fn phase_density(rho: &DensityOperator, grid: usize) -> Result<Density1D> {
    phase_density_window(rho, grid, 0.0)
}

/// Same density on the window `[theta0, theta0 + 2 pi]` (the series is
/// periodic, so any window carries the full distribution).
pub fn phase_density_window(rho: &DensityOperator, grid: usize, theta0: f64) -> Result<Density1D> {
    if grid < 2 * rho.dim() + 2 {
        return Err(Error::UnderResolvedBin(format!(
            "grid {grid} cannot resolve a dim-{} state; need at least {}",
            rho.dim(),
            2 * rho.dim() + 2
        )));
    }
    let coeffs = phase_series_coeffs(rho);
    let h = TAU / (grid - 1) as f64;
    let grid_pts: Vec<f64> = (0..grid).map(|i| theta0 + h * i as f64).collect();
    let mut values = Vec::with_capacity(grid);
    for &theta in &grid_pts {
        let mut v = eval_phase_series(&coeffs, theta);
        if v < 0.0 {
            if v <= -1e-8 {
                return Err(Error::validation(format!(
                    "phase density reached {v:e}; truncation too small for this state"
                )));
            }
            v = 0.0;
        }
        values.push(v);
    }
    let density = Density1D::from_parts_unchecked(grid_pts, values);
    let total = density.integrate();
    if (total - 1.0).abs() > 1e-8 {
        return Err(Error::validation(format!(
            "phase density integrates to {total}, drift beyond 1e-8"
        )));
    }
    Ok(density)
}

/// Moment of the phase operator at finite `N` together with its limiting
/// integral companion; the two converge as `N` grows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseMoment {
    /// `tr(Theta_{N+1}^order rho)`.
    pub finite: f64,
    /// `int theta^order P(theta) dtheta` over `[theta0, theta0 + 2 pi]`.
    pub integral: f64,
}

/// Compute both sides of the phase-moment limit for a state of truncation
/// at most `N + 1`.
pub fn phase_moment(
    rho: &DensityOperator,
    order: u32,
    n: usize,
    theta0: f64,
) -> Result<PhaseMoment> {
    let dim = n + 1;
    if rho.dim() > dim {
        return Err(Error::shape(format!(
            "state dim {} exceeds N + 1 = {dim}",
            rho.dim()
        )));
    }
    // <theta_m|rho|theta_m> = (2 pi / (N+1)) P(theta_m) for the embedded
    // state, so the finite moment only needs the series coefficients.
    let coeffs = phase_series_coeffs(rho);
    let mut finite = 0.0;
    for m in 0..dim {
        let theta = theta0 + TAU * m as f64 / dim as f64;
        finite += theta.powi(order as i32) * (TAU / dim as f64) * eval_phase_series(&coeffs, theta);
    }
    let grid = DEFAULT_GRID.max(2 * rho.dim() + 2);
    let density = phase_density_window(rho, grid, theta0)?;
    let integrand: Vec<f64> = density
        .grid()
        .iter()
        .zip(density.values())
        .map(|(&th, &p)| th.powi(order as i32) * p)
        .collect();
    let integral = density
        .grid()
        .windows(2)
        .zip(integrand.windows(2))
        .map(|(x, v)| 0.5 * (v[0] + v[1]) * (x[1] - x[0]))
        .sum();
    Ok(PhaseMoment { finite, integral })
}

/// Number-basis outcome distribution `q_n = <n|rho|n>`.
pub fn number_distribution(rho: &DensityOperator) -> DiscreteDistribution {
    let probs: Vec<f64> = (0..rho.dim())
        .map(|n| rho.entry(n, n).re.max(0.0))
        .collect();
    let sum: f64 = probs.iter().sum();
    DiscreteDistribution::new(probs.iter().map(|p| p / sum).collect())
        .expect("density diagonal is a distribution")
}

/// Minimum amplitude for the Gaussian multiphoton approximations.
pub const MULTIPHOTON_MIN_AMPLITUDE: f64 = 3.0;

/// Gaussian multiphoton pair for a coherent amplitude `z`, `|z| >= 3`:
/// the phase-side density with variance `1/(4|z|^2)` on the window
/// `[phi - pi, phi + pi]` and the continuous number-side density with
/// variance `|z|^2` on `[|z|^2 - 10|z|, |z|^2 + 10|z|]`.
pub fn gaussian_pair(z: C64, grid: usize) -> Result<(Density1D, Density1D)> {
    let r = z.norm();
    if r < MULTIPHOTON_MIN_AMPLITUDE {
        return Err(Error::domain(format!(
            "multiphoton approximation needs |z| >= {MULTIPHOTON_MIN_AMPLITUDE}, got {r}"
        )));
    }
    if grid < 64 {
        return Err(Error::domain("gaussian_pair needs grid >= 64"));
    }
    let phi = z.arg();
    let lambda = r * r;
    let phase = Density1D::from_fn(phi - PI, phi + PI, grid, |theta| {
        let d = theta - phi;
        (2.0 * lambda / PI).sqrt() * (-2.0 * lambda * d * d).exp()
    })?;
    let number = Density1D::from_fn(lambda - 10.0 * r, lambda + 10.0 * r, grid, |x| {
        let d = x - lambda;
        (1.0 / (TAU * lambda)).sqrt() * (-d * d / (2.0 * lambda)).exp()
    })?;
    Ok((phase, number))
}

/// Largest deviation of the Fourier transform of the number-side root
/// density from the phase-side root density. The two Gaussian approximations
/// form a Fourier pair in the shifted variables; this round-trips within
/// 1e-6 on adequate grids.
pub fn gaussian_fourier_defect(z: C64, grid: usize) -> Result<f64> {
    let (phase, number) = gaussian_pair(z, grid)?;
    let phi = z.arg();
    let lambda = z.norm_sqr();
    let kappa: Vec<f64> = number.grid().iter().map(|&x| x - lambda).collect();
    let root_w: Vec<f64> = number.values().iter().map(|&v| v.sqrt()).collect();
    let mut worst = 0.0f64;
    for (idx, &theta) in phase.grid().iter().enumerate() {
        let xi = theta - phi;
        // (2 pi)^{-1/2} int e^{i xi kappa} sqrt(W)(kappa) dkappa, trapezoid
        let mut acc = C64::new(0.0, 0.0);
        for w in 0..kappa.len() - 1 {
            let f0 = C64::from_polar(root_w[w], xi * kappa[w]);
            let f1 = C64::from_polar(root_w[w + 1], xi * kappa[w + 1]);
            acc += (f0 + f1) * C64::new(0.5 * (kappa[w + 1] - kappa[w]), 0.0);
        }
        let transformed = acc / C64::new(TAU.sqrt(), 0.0);
        worst = worst.max((transformed - C64::new(phase.values()[idx].sqrt(), 0.0)).norm());
    }
    Ok(worst)
}

/// Binned multiphoton distributions: phase-side bin masses of the Gaussian
/// phase density, and number-side unit-cell masses
/// `q_n = int_n^{n+1} W(y) dy` over the integer cells covering the window.
pub fn multiphoton_binned(
    z: C64,
    part: &PhasePartition,
) -> Result<(DiscreteDistribution, DiscreteDistribution)> {
    let r = z.norm();
    let (phase, _) = gaussian_pair(z, DEFAULT_GRID)?;
    let binned = bin_density(&phase, part)?;
    let lambda = r * r;
    let sigma = r;
    let lo = (lambda - 10.0 * r).floor() as i64;
    let hi = (lambda + 10.0 * r).ceil() as i64;
    let cdf = |x: f64| 0.5 * (1.0 + erf((x - lambda) / (sigma * 2f64.sqrt())));
    let cells: Vec<f64> = (lo..hi)
        .map(|n| (cdf(n as f64 + 1.0) - cdf(n as f64)).max(0.0))
        .collect();
    let q = DiscreteDistribution::new(cells)?;
    Ok((binned, q))
}

/// All the data needed to check the binned number-phase relation on one
/// state: the state specification, an optional truncation override, the
/// phase partition and the grid resolution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NumberPhaseScenario {
    pub state: StateSpec,
    #[serde(default)]
    pub truncation: Option<usize>,
    pub partition: PhasePartition,
    #[serde(default = "default_grid")]
    pub grid: usize,
}

fn default_grid() -> usize {
    DEFAULT_GRID
}

impl NumberPhaseScenario {
    pub fn new(state: StateSpec, partition: PhasePartition) -> Self {
        NumberPhaseScenario {
            state,
            truncation: None,
            partition,
            grid: DEFAULT_GRID,
        }
    }

    /// Materialize the density operator, honoring the truncation override.
    pub fn build_state(&self) -> Result<DensityOperator> {
        match self.truncation {
            Some(dim) => self.state.build_with_dim(Some(dim)),
            None => self.state.build(),
        }
    }
}

/// Binned number-phase relation for an already materialized state.
pub fn theorem2_report(
    rho: &DensityOperator,
    partition: &PhasePartition,
    grid: usize,
    pair: &ConjugatePair,
    s: f64,
    t: f64,
) -> Result<BoundReport> {
    let density = phase_density(rho, grid)?;
    let r = bin_density(&density, partition)?;
    let q = number_distribution(rho);
    let er = unified_entropy(&r, &UnifiedParams::new(pair.alpha(), s)?);
    let eq = unified_entropy(&q, &UnifiedParams::new(pair.beta(), t)?);
    let bound = angle_bound(partition.max_width(), pair, s, t)?;
    Ok(BoundReport::new("theorem2", pair, s, t, er + eq, bound))
}

/// Binned number-phase uncertainty relation: the entropy sum of the phase
/// bin distribution and the number distribution against the partition bound
/// `(1/nu) ln_mu((2 pi / max_width)^nu)`.
pub fn theorem2_check(
    scn: &NumberPhaseScenario,
    pair: &ConjugatePair,
    s: f64,
    t: f64,
) -> Result<BoundReport> {
    let rho = scn.build_state()?;
    theorem2_report(&rho, &scn.partition, scn.grid, pair, s, t)
}

/// Total-variation distance between the exact series density of a coherent
/// state and its Gaussian approximation, both sampled on the window centered
/// at the coherent phase. A diagnostic for the multiphoton regime.
pub fn coherent_gaussian_tv(z: C64, grid: usize) -> Result<f64> {
    let r = z.norm();
    if r < MULTIPHOTON_MIN_AMPLITUDE {
        return Err(Error::domain(format!(
            "diagnostic needs |z| >= {MULTIPHOTON_MIN_AMPLITUDE}, got {r}"
        )));
    }
    let phi = z.arg();
    let dim = crate::states::default_coherent_dim(z);
    let psi = crate::states::coherent_state(z, dim)?;
    let exact = phase_density_window(&psi.density(), grid.max(2 * dim + 2), phi - PI)?;
    let lambda = r * r;
    let gauss: Vec<f64> = exact
        .grid()
        .iter()
        .map(|&theta| {
            let d = theta - phi;
            (2.0 * lambda / PI).sqrt() * (-2.0 * lambda * d * d).exp()
        })
        .collect();
    let diff: Vec<f64> = exact
        .values()
        .iter()
        .zip(gauss.iter())
        .map(|(a, b)| (a - b).abs())
        .collect();
    let tv = 0.5
        * exact
            .grid()
            .windows(2)
            .zip(diff.windows(2))
            .map(|(x, v)| 0.5 * (v[0] + v[1]) * (x[1] - x[0]))
            .sum::<f64>();
    Ok(tv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{eigh, max_abs_entry};
    use crate::random::{random_pure, rng_from_seed};
    use crate::states::{coherent_state, thermal_state};

    #[test]
    fn phase_basis_n1_is_hadamard_like() {
        let basis = phase_basis(1, 0.0).unwrap();
        assert_eq!(basis.dim(), 2);
        let s0 = basis.state(0);
        let s1 = basis.state(1);
        let r = 1.0 / 2f64.sqrt();
        assert!((s0.amplitude(0) - C64::new(r, 0.0)).norm() < 1e-12);
        assert!((s0.amplitude(1) - C64::new(r, 0.0)).norm() < 1e-12);
        assert!((s1.amplitude(1) - C64::new(-r, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn phase_basis_is_complete_and_unbiased() {
        for n in [3usize, 7] {
            let basis = phase_basis(n, 0.0).unwrap();
            let dim = basis.dim();
            let mut sum = CMatrix::zeros(dim, dim);
            for st in basis.states() {
                for i in 0..dim {
                    for j in 0..dim {
                        sum[(i, j)] += st.amplitude(i) * st.amplitude(j).conj();
                    }
                }
            }
            assert!(max_abs_entry(&(sum - CMatrix::identity(dim, dim))) < 1e-10);
            // |<n|theta_m>|^2 = 1/(N+1)
            for st in basis.states() {
                for k in 0..dim {
                    assert!((st.amplitude(k).norm_sqr() - 1.0 / dim as f64).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn phase_operator_spectrum_is_the_eigenphases() {
        let op = phase_operator(1, 0.0).unwrap();
        let dec = eigh(&op).unwrap();
        assert!(dec.eigenvalues[0].abs() < 1e-10);
        assert!((dec.eigenvalues[1] - PI).abs() < 1e-10);

        let n = 6;
        let op = phase_operator(n, 0.0).unwrap();
        let dec = eigh(&op).unwrap();
        let mut expect = phase_basis(n, 0.0).unwrap().thetas();
        expect.sort_by(f64::total_cmp);
        for (got, want) in dec.eigenvalues.iter().zip(expect.iter()) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn phase_operator_diagonal_in_phase_basis() {
        let n = 4;
        let op = phase_operator(n, 0.0).unwrap();
        let basis = phase_basis(n, 0.0).unwrap();
        let thetas = basis.thetas();
        for (k, sk) in basis.states().iter().enumerate() {
            for (m, sm) in basis.states().iter().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for i in 0..basis.dim() {
                    for j in 0..basis.dim() {
                        acc += sk.amplitude(i).conj() * op[(i, j)] * sm.amplitude(j);
                    }
                }
                let expect = if k == m { thetas[m] } else { 0.0 };
                assert!((acc - C64::new(expect, 0.0)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn number_diagonal_states_have_flat_phase() {
        let rho = thermal_state(1.0, 45).unwrap();
        let density = phase_density(&rho, 1024).unwrap();
        for &v in density.values() {
            assert!((v - 1.0 / TAU).abs() < 1e-12);
        }
        let fock = PureState::fock(8, 3).unwrap().density();
        let density = phase_density(&fock, 256).unwrap();
        for &v in density.values() {
            assert!((v - 1.0 / TAU).abs() < 1e-12);
        }
    }

    #[test]
    fn pure_state_density_matches_amplitude_series() {
        // oracle: P(theta) = |F(theta)|^2 with
        // F = (2 pi)^{-1/2} sum_n e^{-in theta} x_n
        let mut rng = rng_from_seed(13);
        let psi = random_pure(6, &mut rng);
        let density = phase_density(&psi.density(), 512).unwrap();
        for (idx, &theta) in density.grid().iter().enumerate().step_by(37) {
            let mut f = C64::new(0.0, 0.0);
            for n_idx in 0..6 {
                f += C64::from_polar(1.0, -(n_idx as f64) * theta) * psi.amplitude(n_idx);
            }
            let expect = f.norm_sqr() / TAU;
            assert!((density.values()[idx] - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn phase_density_normalizes_for_random_states() {
        let mut rng = rng_from_seed(99);
        for _ in 0..10 {
            let psi = random_pure(16, &mut rng);
            let density = phase_density(&psi.density(), 512).unwrap();
            assert!((density.integrate() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn finite_probabilities_match_series_samples() {
        // p_m = (2 pi / (N+1)) |F(theta_m)|^2 relates the finite-N outcome
        // probabilities to the limiting density
        let mut rng = rng_from_seed(7);
        let psi = random_pure(5, &mut rng);
        let n = 11;
        let basis = phase_basis(n, 0.0).unwrap();
        let p = basis.probabilities_pure(&psi).unwrap();
        let coeffs = phase_series_coeffs(&psi.density());
        for (m, &theta) in basis.thetas().iter().enumerate() {
            let expect = TAU / (n as f64 + 1.0) * eval_phase_series(&coeffs, theta);
            assert!((p.prob(m) - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn phase_moment_order_zero_is_one() {
        let rho = PureState::fock(4, 1).unwrap().density();
        let m = phase_moment(&rho, 0, 16, 0.0).unwrap();
        assert!((m.finite - 1.0).abs() < 1e-10);
        assert!((m.integral - 1.0).abs() < 1e-10);
    }

    #[test]
    fn fock_mean_phase_approaches_pi() {
        // integral oracle: int theta/(2 pi) dtheta = pi on [0, 2 pi]
        let rho = PureState::fock(3, 2).unwrap().density();
        let m = phase_moment(&rho, 1, 255, 0.0).unwrap();
        assert!((m.integral - PI).abs() < 1e-9, "integral {}", m.integral);
        // finite-N mean is pi N/(N+1); converges from below
        assert!((m.finite - PI * 255.0 / 256.0).abs() < 1e-9);
        let coarse = phase_moment(&rho, 1, 15, 0.0).unwrap();
        assert!((m.finite - PI).abs() < (coarse.finite - PI).abs());
    }

    #[test]
    fn coherent_mean_phase_matches_gaussian_centroid() {
        // window symmetric around the coherent phase phi = 0
        let z = C64::new(3.0, 0.0);
        let psi = coherent_state(z, 80).unwrap();
        let m = phase_moment(&psi.density(), 1, 511, -PI).unwrap();
        assert!(m.finite.abs() < 2e-3, "finite {}", m.finite);
        assert!(m.integral.abs() < 2e-3, "integral {}", m.integral);
    }

    #[test]
    fn number_distribution_basics() {
        let fock = PureState::fock(6, 4).unwrap().density();
        let q = number_distribution(&fock);
        assert!((q.prob(4) - 1.0).abs() < 1e-12);

        let z = C64::new(1.3, 0.4);
        let psi = coherent_state(z, 30).unwrap();
        let q = number_distribution(&psi.density());
        let lambda = z.norm_sqr();
        let mut w = (-lambda).exp();
        for n_idx in 0..10 {
            assert!((q.prob(n_idx) - w).abs() < 1e-12);
            w *= lambda / (n_idx as f64 + 1.0);
        }

        let rho = thermal_state(0.8, 50).unwrap();
        let q = number_distribution(&rho);
        let ratio: f64 = 0.8 / 1.8;
        for n_idx in 0..10usize {
            let expect = (1.0 - ratio) * ratio.powi(n_idx as i32);
            assert!((q.prob(n_idx) - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn gaussian_pair_peaks_and_norms() {
        let z = C64::new(10.0, 0.0);
        let (p, w) = gaussian_pair(z, 4097).unwrap();
        let lambda = 100.0;
        let p_max = p.values().iter().fold(0.0f64, |a, &b| a.max(b));
        assert!((p_max - (2.0 * lambda / PI).sqrt()).abs() < 1e-12);
        let w_max = w.values().iter().fold(0.0f64, |a, &b| a.max(b));
        assert!((w_max - 1.0 / (TAU.sqrt() * 10.0)).abs() < 1e-14);
        assert!((w.integrate() - 1.0).abs() < 1e-10);
        assert!(gaussian_pair(C64::new(1.0, 0.0), 256).is_err());
    }

    #[test]
    fn gaussian_pair_is_a_fourier_pair() {
        for z in [C64::new(10.0, 0.0), C64::from_polar(5.0, 1.2)] {
            let defect = gaussian_fourier_defect(z, 1025).unwrap();
            assert!(defect < 1e-6, "defect {defect:e} for z = {z}");
        }
    }

    #[test]
    fn multiphoton_binned_symmetry_and_mass() {
        // phi = pi puts the Gaussian window exactly on [0, 2 pi]; a
        // symmetric partition then yields a symmetric bin distribution
        let z = C64::from_polar(10.0, PI);
        let part = PhasePartition::equal_bins(16).unwrap();
        let (r, q) = multiphoton_binned(z, &part).unwrap();
        for m in 0..8 {
            assert!(
                (r.prob(m) - r.prob(15 - m)).abs() < 1e-10,
                "bin {m} asymmetric"
            );
        }
        let total: f64 = q.probs().iter().sum();
        assert!((total - 1.0).abs() < 1e-8);
    }

    #[test]
    fn multiphoton_shannon_relation_holds() {
        let z = C64::from_polar(10.0, PI);
        let part = PhasePartition::equal_bins(16).unwrap();
        let (r, q) = multiphoton_binned(z, &part).unwrap();
        let shannon = UnifiedParams::shannon();
        let sum = unified_entropy(&r, &shannon) + unified_entropy(&q, &shannon);
        let bound = (std::f64::consts::E * PI / part.max_width()).ln();
        assert!(sum - bound >= -1e-9, "sum {sum} vs bound {bound}");
    }

    #[test]
    fn theorem2_saturates_for_fock_states() {
        let scn = NumberPhaseScenario::new(
            StateSpec::Fock { n: 2, dim: Some(8) },
            PhasePartition::equal_bins(8).unwrap(),
        );
        let report = theorem2_check(&scn, &ConjugatePair::shannon(), 0.0, 0.0).unwrap();
        assert!((report.entropy_sum - 8f64.ln()).abs() < 1e-9);
        assert!((report.bound - 8f64.ln()).abs() < 1e-12);
        assert!(report.slack.abs() < 1e-9);
    }

    #[test]
    fn theorem2_renyi_bound_is_log_resolution() {
        let scn = NumberPhaseScenario::new(
            StateSpec::Fock { n: 0, dim: Some(4) },
            PhasePartition::equal_bins(6).unwrap(),
        );
        let pair = ConjugatePair::from_beta(0.75).unwrap();
        let report = theorem2_check(&scn, &pair, 0.0, 0.0).unwrap();
        assert!((report.bound - 6f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn theorem2_holds_for_random_truncated_states() {
        let pair = ConjugatePair::from_beta(2.0 / 3.0).unwrap();
        for seed in 0..10u64 {
            let scn = NumberPhaseScenario::new(
                StateSpec::Random { seed, dim: 24 },
                PhasePartition::equal_bins(8).unwrap(),
            );
            let report = theorem2_check(&scn, &pair, 1.0, 1.0).unwrap();
            assert!(report.holds(), "slack {}", report.slack);
        }
    }

    #[test]
    fn riemann_sum_converges_to_integral() {
        // finite-N power sums of the sampled density approach the quadrature
        // integral once N is several times the truncation
        let mut rng = rng_from_seed(31);
        let psi = random_pure(8, &mut rng);
        let b = 1.4; // |F|^b = P^{b/2}
        let density = phase_density(&psi.density(), 4096).unwrap();
        let integral = density.power_integral(b / 2.0);
        let n = 8 * 8;
        let basis = phase_basis(n - 1, 0.0).unwrap();
        let p = basis.probabilities_pure(&psi).unwrap();
        let dtheta = TAU / n as f64;
        // |F(theta_m)|^b = (p_m (N+1)/(2 pi))^{b/2}
        let riemann: f64 = p
            .probs()
            .iter()
            .map(|&pm| (pm * n as f64 / TAU).powf(b / 2.0) * dtheta)
            .sum();
        assert!(
            (riemann - integral).abs() < 1e-4,
            "riemann {riemann} vs integral {integral}"
        );
    }

    #[test]
    fn finite_norm_inequalities_hold() {
        use crate::bounds::{verify_norm_inequality, NormInput};
        use crate::measurement::measure_probabilities;
        let mut rng = rng_from_seed(311);
        let pair = ConjugatePair::from_beta(0.7).unwrap();
        for n in [4usize, 16] {
            let basis = phase_basis(n - 1, 0.0).unwrap();
            let number = Povm::number_basis(n);
            for _ in 0..20 {
                let psi = random_pure(n, &mut rng);
                let p = basis.probabilities_pure(&psi).unwrap();
                let q = measure_probabilities(&number, &psi.density()).unwrap();
                let slack = verify_norm_inequality(
                    NormInput::Discrete(&q),
                    NormInput::Discrete(&p),
                    1.0 / (n as f64).sqrt(),
                    &pair,
                )
                .unwrap();
                assert!(slack.min() >= -1e-9, "N = {n}: slack {}", slack.min());
            }
        }
    }

    #[test]
    fn coherent_tv_diagnostic_is_small_at_large_amplitude() {
        let tv = coherent_gaussian_tv(C64::new(10.0, 0.0), DEFAULT_GRID).unwrap();
        assert!(tv < 0.01, "tv {tv}");
        assert!(coherent_gaussian_tv(C64::new(0.5, 0.0), 512).is_err());
    }
}
