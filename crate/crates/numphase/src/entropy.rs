//! Unified (alpha,s)-entropies of discrete distributions, together with the
//! alpha-deformed logarithm/exponential pair and the norm-like
//! beta-functional.
//!
//! The two-parameter family
//!
//! ```text
//! E_alpha^(s)(p) = [ (sum_n p_n^alpha)^s - 1 ] / [ (1 - alpha) s ]
//! ```
//!
//! contains the Tsallis entropy at `s = 1`, the Renyi entropy in the limit
//! `s -> 0` and the Shannon entropy in the limit `alpha -> 1`. The raw
//! quotient loses all precision at those limits, so the evaluation here goes
//! through `ln_1p`/`exp_m1`: with `eps = alpha - 1`,
//!
//! ```text
//! T - 1 = sum_n p_n * expm1(eps * ln p_n)        (exact rearrangement)
//! L     = ln_1p(T - 1)
//! E     = expm1(s * L) / ((1 - alpha) * s)
//! ```
//!
//! which stays accurate arbitrarily close to `alpha = 1` and `s = 0` and
//! reduces to the defining expression away from them.

use crate::error::{Error, Result};

/// Parameters `(alpha, s)` of the unified entropy. `s = 0` selects the Renyi
/// entropy; `alpha = 1` selects the Shannon entropy regardless of `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnifiedParams {
    alpha: f64,
    s: f64,
}

impl UnifiedParams {
    pub fn new(alpha: f64, s: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::domain(format!("entropy order alpha must be > 0, got {alpha}")));
        }
        if !s.is_finite() {
            return Err(Error::domain("entropy parameter s must be finite"));
        }
        Ok(UnifiedParams { alpha, s })
    }

    /// Renyi entropy of order `alpha` (`s = 0`).
    pub fn renyi(alpha: f64) -> Result<Self> {
        Self::new(alpha, 0.0)
    }

    /// Tsallis entropy of degree `alpha` (`s = 1`).
    pub fn tsallis(alpha: f64) -> Result<Self> {
        Self::new(alpha, 1.0)
    }

    /// Shannon entropy (`alpha = 1`).
    pub fn shannon() -> Self {
        UnifiedParams { alpha: 1.0, s: 0.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn s(&self) -> f64 {
        self.s
    }
}

/// Entropy orders `(alpha, beta)` constrained by `1/alpha + 1/beta = 2`, the
/// hypothesis of every bound in this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatePair {
    alpha: f64,
    beta: f64,
}

impl ConjugatePair {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.5 && beta > 0.5 && alpha.is_finite() && beta.is_finite()) {
            return Err(Error::domain(format!(
                "conjugate orders must both exceed 1/2, got ({alpha}, {beta})"
            )));
        }
        let defect = (1.0 / alpha + 1.0 / beta - 2.0).abs();
        if defect > 1e-12 {
            return Err(Error::domain(format!(
                "1/alpha + 1/beta = 2 violated by {defect:e} for ({alpha}, {beta})"
            )));
        }
        Ok(ConjugatePair { alpha, beta })
    }

    /// Build the pair from `beta` in `(1/2, 1]` (or any admissible order);
    /// `alpha = beta / (2 beta - 1)`.
    pub fn from_beta(beta: f64) -> Result<Self> {
        if !(beta > 0.5 && beta.is_finite()) {
            return Err(Error::domain(format!("beta must exceed 1/2, got {beta}")));
        }
        let alpha = beta / (2.0 * beta - 1.0);
        Self::new(alpha, beta)
    }

    pub fn from_alpha(alpha: f64) -> Result<Self> {
        if !(alpha > 0.5 && alpha.is_finite()) {
            return Err(Error::domain(format!("alpha must exceed 1/2, got {alpha}")));
        }
        let beta = alpha / (2.0 * alpha - 1.0);
        Self::new(alpha, beta)
    }

    /// Shannon point `alpha = beta = 1`.
    pub fn shannon() -> Self {
        ConjugatePair { alpha: 1.0, beta: 1.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// True at the Shannon point.
    pub fn is_shannon(&self) -> bool {
        self.alpha == 1.0 && self.beta == 1.0
    }
}

/// Probability vector: entries >= 0 with unit sum within 1e-9. Serializes
/// as its plain probability array.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct DiscreteDistribution {
    probs: Vec<f64>,
}

impl TryFrom<Vec<f64>> for DiscreteDistribution {
    type Error = Error;

    fn try_from(probs: Vec<f64>) -> Result<Self> {
        DiscreteDistribution::new(probs)
    }
}

impl From<DiscreteDistribution> for Vec<f64> {
    fn from(d: DiscreteDistribution) -> Vec<f64> {
        d.probs
    }
}

impl DiscreteDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::validation("distribution must be non-empty"));
        }
        if let Some(p) = probs.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
            return Err(Error::validation(format!(
                "distribution entries must be finite and >= 0, found {p}"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::validation(format!(
                "distribution sums to {sum}, drift {:e} > 1e-9",
                (sum - 1.0).abs()
            )));
        }
        Ok(DiscreteDistribution { probs })
    }

    /// Uniform distribution over `n` outcomes.
    pub fn uniform(n: usize) -> Self {
        DiscreteDistribution {
            probs: vec![1.0 / n as f64; n.max(1)],
        }
    }

    /// Point mass on outcome `k` of `n`.
    pub fn deterministic(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::domain(format!("outcome {k} >= size {n}")));
        }
        let mut probs = vec![0.0; n];
        probs[k] = 1.0;
        Ok(DiscreteDistribution { probs })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, i: usize) -> f64 {
        self.probs[i]
    }
}

/// Deformed logarithm `ln_alpha(x) = (x^{1-alpha} - 1)/(1 - alpha)`, the
/// natural logarithm at `alpha = 1`.
pub fn alpha_log(x: f64, alpha: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("alpha_log requires x > 0, got {x}")));
    }
    let eps = 1.0 - alpha;
    if eps == 0.0 {
        Ok(x.ln())
    } else {
        Ok(f64::exp_m1(eps * x.ln()) / eps)
    }
}

/// Deformed exponential `exp_alpha(x) = (1 + (1-alpha) x)_+^{1/(1-alpha)}`,
/// the natural exponential at `alpha = 1`. Inverse of [`alpha_log`] wherever
/// the positive-part clamp is inactive.
pub fn alpha_exp(x: f64, alpha: f64) -> f64 {
    let eps = 1.0 - alpha;
    if eps == 0.0 {
        x.exp()
    } else {
        let base = 1.0 + eps * x;
        if base <= 0.0 {
            0.0
        } else {
            (base.ln() / eps).exp()
        }
    }
}

/// Norm-like functional `||p||_beta = (sum_n p_n^beta)^{1/beta}` with the
/// convention `0^beta = 0`. An actual norm for `beta >= 1`, but meaningful
/// for all `beta > 0`.
pub fn beta_functional(p: &DiscreteDistribution, beta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::domain(format!("beta-functional requires beta > 0, got {beta}")));
    }
    Ok(power_sum(p.probs(), beta).powf(1.0 / beta))
}

/// `sum_n p_n^a` with `0^a = 0`.
pub(crate) fn power_sum(probs: &[f64], a: f64) -> f64 {
    probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p.powf(a))
        .sum()
}

/// Shannon entropy `-sum p ln p` with `0 ln 0 = 0`.
pub fn shannon_entropy(p: &DiscreteDistribution) -> f64 {
    shannon_of(p.probs())
}

pub(crate) fn shannon_of(probs: &[f64]) -> f64 {
    -probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.ln())
        .sum::<f64>()
}

/// Unified `(alpha, s)`-entropy of a discrete distribution.
///
/// Dispatches to the Shannon branch at `alpha = 1` and the Renyi branch at
/// `s = 0`; elsewhere evaluates the stabilized defining expression (see the
/// module docs). Always non-negative.
pub fn unified_entropy(p: &DiscreteDistribution, params: &UnifiedParams) -> f64 {
    unified_of(p.probs(), params)
}

pub(crate) fn unified_of(probs: &[f64], params: &UnifiedParams) -> f64 {
    let alpha = params.alpha();
    let s = params.s();
    if alpha == 1.0 {
        return shannon_of(probs);
    }
    let eps = alpha - 1.0;
    // T - 1 = sum_n p_n expm1(eps ln p_n), exact for probability vectors
    let t_minus_1: f64 = probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * f64::exp_m1(eps * p.ln()))
        .sum();
    let l = f64::ln_1p(t_minus_1);
    let value = if s == 0.0 {
        -l / eps
    } else {
        f64::exp_m1(s * l) / (-eps * s)
    };
    // the functional is non-negative for probability vectors; clip the
    // rounding fuzz at zero so ordering properties hold exactly
    if value < 0.0 && value > -1e-14 {
        0.0
    } else {
        value
    }
}
