//! Gridded one-dimensional probability densities, their unified entropies,
//! and discretization into bin probabilities.
//!
//! Quadrature is the composite trapezoidal rule on the stored grid, i.e.
//! exact integration of the piecewise-linear interpolant. Phase densities are
//! smooth and periodic, where the trapezoidal rule is spectrally accurate;
//! the default grid is 4096 uniform points.

use serde::{Deserialize, Serialize};

use crate::entropy::{DiscreteDistribution, UnifiedParams};
use crate::error::{Error, Result};

/// Default number of grid points for phase densities.
pub const DEFAULT_GRID: usize = 4096;

const TAU: f64 = std::f64::consts::TAU;

/// Probability density sampled on a strictly increasing grid. Phase
/// densities live on a window of length `2 pi`; the number-side Gaussian of
/// the multiphoton approximation uses an arbitrary interval.
#[derive(Debug, Clone, PartialEq)]
pub struct Density1D {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl Density1D {
    /// Validate a sampled density: strictly increasing grid, non-negative
    /// values (rounding noise above `-1e-10` is clamped to zero) and unit
    /// integral within `1e-6`.
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() < 2 || grid.len() != values.len() {
            return Err(Error::validation(format!(
                "density needs matching grid/value lengths >= 2, got {} and {}",
                grid.len(),
                values.len()
            )));
        }
        if grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::validation("density grid must be strictly increasing"));
        }
        if grid.iter().any(|x| !x.is_finite()) || values.iter().any(|v| !v.is_finite()) {
            return Err(Error::validation("density has non-finite entries"));
        }
        let mut values = values;
        for v in &mut values {
            if *v < 0.0 {
                if *v < -1e-10 {
                    return Err(Error::validation(format!(
                        "density value {v:e} below the negativity clamp"
                    )));
                }
                *v = 0.0;
            }
        }
        let d = Density1D { grid, values };
        let total = d.integrate();
        if (total - 1.0).abs() > 1e-6 {
            return Err(Error::validation(format!(
                "density integrates to {total}, not 1 within 1e-6"
            )));
        }
        Ok(d)
    }

    /// Sample `f` on `n` uniform points over `[a, b]` and validate.
    pub fn from_fn(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if !(b > a) || n < 2 {
            return Err(Error::domain("from_fn requires b > a and n >= 2"));
        }
        let h = (b - a) / (n - 1) as f64;
        let grid: Vec<f64> = (0..n).map(|i| a + h * i as f64).collect();
        let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
        Density1D::new(grid, values)
    }

    /// The flat phase density `1/(2 pi)` on `[0, 2 pi]`.
    pub fn uniform_phase(n: usize) -> Self {
        let h = TAU / (n - 1) as f64;
        Density1D {
            grid: (0..n).map(|i| h * i as f64).collect(),
            values: vec![1.0 / TAU; n],
        }
    }

    pub(crate) fn from_parts_unchecked(grid: Vec<f64>, values: Vec<f64>) -> Self {
        Density1D { grid, values }
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Start of the support window.
    pub fn window_start(&self) -> f64 {
        self.grid[0]
    }

    /// End of the support window.
    pub fn window_end(&self) -> f64 {
        *self.grid.last().unwrap()
    }

    /// Trapezoidal integral over the whole grid.
    pub fn integrate(&self) -> f64 {
        trapezoid(&self.grid, &self.values)
    }

    /// Trapezoidal integral of `values^a` (with `0^a = 0`).
    pub fn power_integral(&self, a: f64) -> f64 {
        let powered: Vec<f64> = self
            .values
            .iter()
            .map(|&v| if v > 0.0 { v.powf(a) } else { 0.0 })
            .collect();
        trapezoid(&self.grid, &powered)
    }

    /// Integral of the piecewise-linear interpolant over `[a, b]`, which must
    /// lie inside the grid window.
    pub fn integrate_range(&self, a: f64, b: f64) -> Result<f64> {
        let (lo, hi) = (self.window_start(), self.window_end());
        let eps = 1e-9 * (hi - lo).abs().max(1.0);
        if a < lo - eps || b > hi + eps || a > b {
            return Err(Error::domain(format!(
                "integration range [{a}, {b}] outside window [{lo}, {hi}]"
            )));
        }
        let a = a.clamp(lo, hi);
        let b = b.clamp(lo, hi);
        let mut acc = 0.0;
        for i in 0..self.grid.len() - 1 {
            let (x0, x1) = (self.grid[i], self.grid[i + 1]);
            if x1 <= a || x0 >= b {
                continue;
            }
            let s = a.max(x0);
            let e = b.min(x1);
            let (v0, v1) = (self.values[i], self.values[i + 1]);
            let interp = |x: f64| v0 + (v1 - v0) * (x - x0) / (x1 - x0);
            acc += 0.5 * (interp(s) + interp(e)) * (e - s);
        }
        Ok(acc)
    }

    /// Number of grid points strictly inside `[a, b]`.
    fn points_within(&self, a: f64, b: f64) -> usize {
        self.grid.iter().filter(|&&x| x >= a && x <= b).count()
    }
}

fn trapezoid(grid: &[f64], values: &[f64]) -> f64 {
    grid.windows(2)
        .zip(values.windows(2))
        .map(|(x, v)| 0.5 * (v[0] + v[1]) * (x[1] - x[0]))
        .sum()
}

/// Total-variation distance `(1/2) int |p - q|` between densities sampled on
/// the same grid.
pub fn total_variation(p: &Density1D, q: &Density1D) -> Result<f64> {
    if p.grid != q.grid {
        return Err(Error::shape("total_variation requires identical grids"));
    }
    let diff: Vec<f64> = p
        .values
        .iter()
        .zip(q.values.iter())
        .map(|(a, b)| (a - b).abs())
        .collect();
    Ok(0.5 * trapezoid(&p.grid, &diff))
}

/// Continuous unified entropy together with a warning flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuousEntropy {
    pub value: f64,
    /// Set when the density's alpha-norm lies on the wrong side of one, so
    /// the functional is negative-capable and does not express an
    /// uncertainty on its own. The value is still returned.
    pub norm_warning: bool,
}

/// Unified `(alpha, s)`-entropy of a continuous density, each sum of the
/// discrete definition replaced by a quadrature integral. May be negative;
/// see [`ContinuousEntropy::norm_warning`].
pub fn continuous_unified_entropy(p: &Density1D, params: &UnifiedParams) -> ContinuousEntropy {
    let alpha = params.alpha();
    let s = params.s();
    if alpha == 1.0 {
        let integrand: Vec<f64> = p
            .values
            .iter()
            .map(|&v| if v > 0.0 { -v * v.ln() } else { 0.0 })
            .collect();
        let value = trapezoid(&p.grid, &integrand);
        return ContinuousEntropy {
            value,
            norm_warning: value < 0.0,
        };
    }
    let eps = alpha - 1.0;
    // int P^alpha - 1 = int P expm1(eps ln P); stable arbitrarily close to
    // alpha = 1 because the density integrates to one
    let integrand: Vec<f64> = p
        .values
        .iter()
        .map(|&v| if v > 0.0 { v * f64::exp_m1(eps * v.ln()) } else { 0.0 })
        .collect();
    let t_minus_1 = trapezoid(&p.grid, &integrand) + (p.integrate() - 1.0);
    let l = f64::ln_1p(t_minus_1);
    let value = if s == 0.0 {
        -l / eps
    } else {
        f64::exp_m1(s * l) / (-eps * s)
    };
    // alpha > 1 requires int P^alpha <= 1, alpha < 1 requires >= 1
    let norm_warning = if eps > 0.0 { t_minus_1 > 0.0 } else { t_minus_1 < 0.0 };
    ContinuousEntropy { value, norm_warning }
}

/// Norm-like functional `(int P^beta)^{1/beta}` of a density.
pub fn continuous_beta_functional(p: &Density1D, beta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::domain(format!("beta-functional requires beta > 0, got {beta}")));
    }
    Ok(p.power_integral(beta).powf(1.0 / beta))
}

/// Partition `0 = edge_0 < ... < edge_M = 2 pi` of the phase window.
/// Serializes as its plain edge list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct PhasePartition {
    edges: Vec<f64>,
}

impl TryFrom<Vec<f64>> for PhasePartition {
    type Error = Error;

    fn try_from(edges: Vec<f64>) -> Result<Self> {
        PhasePartition::new(edges)
    }
}

impl From<PhasePartition> for Vec<f64> {
    fn from(p: PhasePartition) -> Vec<f64> {
        p.edges
    }
}

impl PhasePartition {
    pub fn new(edges: Vec<f64>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::validation("partition needs at least two edges"));
        }
        if edges[0].abs() > 1e-12 || (edges.last().unwrap() - TAU).abs() > 1e-12 {
            return Err(Error::validation("partition must run from 0 to 2 pi"));
        }
        if edges.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::validation("partition edges must be strictly increasing"));
        }
        Ok(PhasePartition { edges })
    }

    /// `m` bins of equal width `2 pi / m`.
    pub fn equal_bins(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("partition needs at least one bin"));
        }
        let edges = (0..=m).map(|k| TAU * k as f64 / m as f64).collect();
        Ok(PhasePartition { edges })
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn n_bins(&self) -> usize {
        self.edges.len() - 1
    }

    pub fn widths(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Largest bin width, the resolution entering the uncertainty bounds.
    pub fn max_width(&self) -> f64 {
        self.widths().into_iter().fold(0.0, f64::max)
    }
}

/// Bin probabilities `r_m = int_{edge_m}^{edge_{m+1}} P dtheta`, renormalized
/// by the density's total integral so they form an exact distribution.
///
/// The density's window may start anywhere; bins are mapped into it
/// periodically (phase densities repeat with period `2 pi`). Errors when the
/// grid resolves a bin with fewer than 8 points.
pub fn bin_density(p: &Density1D, part: &PhasePartition) -> Result<DiscreteDistribution> {
    let span = p.window_end() - p.window_start();
    if (span - TAU).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "bin_density needs a full 2 pi window, got span {span}"
        )));
    }
    let w0 = p.window_start();
    let w1 = p.window_end();
    let total = p.integrate();
    if total <= 0.0 {
        return Err(Error::validation("density has non-positive total mass"));
    }
    let mut probs = Vec::with_capacity(part.n_bins());
    for (m, w) in part.edges().windows(2).enumerate() {
        // shift the bin into the density's window, splitting at the seam
        let mut a = w[0];
        let mut b = w[1];
        let shift = ((a - w0) / TAU).floor() * TAU;
        a -= shift;
        b -= shift;
        let mut points = 0usize;
        let mut mass = 0.0;
        if b <= w1 + 1e-12 {
            mass += p.integrate_range(a, b.min(w1))?;
            points += p.points_within(a, b.min(w1));
        } else {
            mass += p.integrate_range(a, w1)?;
            mass += p.integrate_range(w0, w0 + (b - w1))?;
            points += p.points_within(a, w1);
            points += p.points_within(w0, w0 + (b - w1));
        }
        if points < 8 {
            return Err(Error::UnderResolvedBin(format!(
                "bin {m} covered by {points} grid points (< 8)"
            )));
        }
        probs.push(mass / total);
    }
    // rounding can leave sum - 1 at the 1e-16 level; exact renormalization
    let sum: f64 = probs.iter().sum();
    for q in &mut probs {
        *q /= sum;
    }
    DiscreteDistribution::new(probs)
}
