//! The uncertainty-bound engine.
//!
//! For two measurements with outcome distributions `p` and `q` and conjugate
//! orders `1/alpha + 1/beta = 2`, the sum of unified entropies
//! `E_alpha^(s)(p) + E_beta^(t)(q)` is bounded below by
//!
//! ```text
//! (1/nu) ln_mu( g^{-2 nu} )
//! ```
//!
//! where `g` is the state-dependent overlap of the two measurements (or its
//! state-independent majorant `f_bar`) and `(mu, nu)` select the order/index
//! pair according to the common sign of `s` and `t`. The minimum is attained
//! on the boundary of the constraint region
//!
//! ```text
//! D = { 0 <= xi <= 1, 1 <= zeta, c xi^{beta/alpha} <= zeta },
//!       c = g^{-2(1-beta)},
//! ```
//!
//! for `h(xi, zeta) = (xi^s - 1)/((1-alpha)s) + (zeta^t - 1)/((1-beta)t)`;
//! [`brute_force_h_min`] walks that boundary directly and serves as the
//! independent oracle for the closed form [`lemma1_min`].
//!
//! Closed-form specializations cover mutually unbiased bases, angular
//! partitions, and the Gaussian multiphoton regime with its sharpening
//! factor [`multiphoton_kappa`].

use serde::{Deserialize, Serialize};

use crate::density::{continuous_beta_functional, Density1D};
use crate::entropy::{
    beta_functional, unified_entropy, ConjugatePair, DiscreteDistribution, UnifiedParams,
};
use crate::error::{Error, Result};
use crate::linalg::{spectral_norm, sqrtm_psd, trace};
use crate::measurement::{measure_probabilities, Povm};
use crate::states::DensityOperator;

/// Threshold below which outcome probabilities are treated as zero when
/// forming the state-dependent overlap.
pub const ZERO_PROBABILITY_CUTOFF: f64 = 1e-12;

/// Slack below which a verified inequality counts as violated.
pub const SLACK_TOLERANCE: f64 = -1e-9;

/// Effective order `mu` and index `nu` entering every closed-form bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuNu {
    pub mu: f64,
    /// `nu = 0` is the Renyi/Shannon sentinel: the bound degenerates to a
    /// plain logarithm.
    pub nu: f64,
}

/// Select `(mu, nu)`: for `s, t > 0` the larger of the two orders, for
/// `s, t < 0` the smaller, with `nu` the index attached to that order.
/// `s = t = 0` yields the Renyi sentinel; the Shannon point `alpha = beta = 1`
/// is admitted for any `(s, t)` since every branch degenerates there.
pub fn select_mu_nu(pair: &ConjugatePair, s: f64, t: f64) -> Result<MuNu> {
    if pair.is_shannon() {
        return Ok(MuNu { mu: 1.0, nu: 0.0 });
    }
    if s == 0.0 && t == 0.0 {
        return Ok(MuNu {
            mu: pair.alpha().max(pair.beta()),
            nu: 0.0,
        });
    }
    if s * t <= 0.0 {
        return Err(Error::domain(format!(
            "indices must satisfy s*t > 0 (or s = t = 0), got s = {s}, t = {t}"
        )));
    }
    let mu = if s > 0.0 {
        pair.alpha().max(pair.beta())
    } else {
        pair.alpha().min(pair.beta())
    };
    let nu = if mu == pair.alpha() { s } else { t };
    Ok(MuNu { mu, nu })
}

/// `(1/nu) ln_mu(base^nu)` evaluated stably; the `nu -> 0` and `mu -> 1`
/// limits are both `ln(base)`.
fn deformed_log_bound(base: f64, mn: MuNu) -> f64 {
    let lb = base.ln();
    if mn.nu == 0.0 || mn.mu == 1.0 {
        lb
    } else {
        let eps = 1.0 - mn.mu;
        f64::exp_m1(mn.nu * eps * lb) / (eps * mn.nu)
    }
}

/// Closed-form minimum of `h` over the constraint region: the entropic lower
/// bound `(1/nu) ln_mu(g^{-2 nu})` for overlap `g` in `(0, 1]`.
pub fn lemma1_min(g: f64, pair: &ConjugatePair, s: f64, t: f64) -> Result<f64> {
    if !(g > 0.0 && g <= 1.0) {
        return Err(Error::domain(format!("overlap g must lie in (0, 1], got {g}")));
    }
    let mn = select_mu_nu(pair, s, t)?;
    Ok(deformed_log_bound(1.0 / (g * g), mn))
}

/// Direct minimization of `h(xi, zeta)` over the boundary of the constraint
/// region, the independent oracle for [`lemma1_min`].
///
/// `h` is decreasing in `xi` and increasing in `zeta` throughout the region,
/// so its minimum lies on the lower boundary; the walk samples the curve
/// `zeta = c xi^{beta/alpha}` on a log-uniform `xi` grid (endpoints
/// included exactly), the segment `zeta = 1`, and the edge `xi = 1` above
/// the curve, with `grid` points each.
pub fn brute_force_h_min(
    g: f64,
    pair: &ConjugatePair,
    s: f64,
    t: f64,
    grid: usize,
) -> Result<f64> {
    if grid < 512 {
        return Err(Error::domain(format!("oracle grid must be >= 512, got {grid}")));
    }
    if !(g > 0.0 && g <= 1.0) {
        return Err(Error::domain(format!("overlap g must lie in (0, 1], got {g}")));
    }
    if s * t <= 0.0 {
        return Err(Error::domain(
            "the oracle minimizes h, which requires s*t > 0".to_string(),
        ));
    }
    // orient so big > 1 > small; h is symmetric under relabeling the two
    // coordinates together with their indices
    let (big, small, s_big, t_small) = if pair.alpha() >= pair.beta() {
        (pair.alpha(), pair.beta(), s, t)
    } else {
        (pair.beta(), pair.alpha(), t, s)
    };
    if big == 1.0 {
        return Err(Error::domain(
            "h is undefined at the Shannon point; use lemma1_min".to_string(),
        ));
    }
    let h = |xi: f64, zeta: f64| -> f64 {
        (xi.powf(s_big) - 1.0) / ((1.0 - big) * s_big)
            + (zeta.powf(t_small) - 1.0) / ((1.0 - small) * t_small)
    };
    let c = g.powf(-2.0 * (1.0 - small));
    let xi0 = c.powf(-big / small).max(f64::MIN_POSITIVE);
    let curve = |xi: f64| (c * xi.powf(small / big)).max(1.0);

    let mut best = h(1.0, c.max(1.0)).min(h(xi0, 1.0));
    let log_walk = |from: f64, to: f64, n: usize, best: &mut f64, f: &mut dyn FnMut(f64) -> f64| {
        let (la, lb) = (from.ln(), to.ln());
        for k in 0..=n {
            let x = (la + (lb - la) * k as f64 / n as f64).exp();
            let v = f(x);
            if v < *best {
                *best = v;
            }
        }
    };
    // constraint curve from xi0 to 1
    log_walk(xi0, 1.0, grid, &mut best, &mut |xi| h(xi, curve(xi)));
    // segment zeta = 1 for xi in (0, xi0]
    log_walk(xi0 * 1e-6, xi0, grid, &mut best, &mut |xi| h(xi, 1.0));
    // edge xi = 1 for zeta >= c
    log_walk(c.max(1.0), c.max(1.0) * 8.0, grid, &mut best, &mut |z| h(1.0, z));
    Ok(best)
}

/// State-dependent overlap of two POVMs:
/// `max |tr(M_i N_j rho)| / sqrt(p_i q_j)` over outcome pairs whose
/// probabilities exceed [`ZERO_PROBABILITY_CUTOFF`].
pub fn g_function(m: &Povm, n: &Povm, rho: &DensityOperator) -> Result<f64> {
    if m.dim() != n.dim() || m.dim() != rho.dim() {
        return Err(Error::shape(format!(
            "g_function dims: M {}, N {}, rho {}",
            m.dim(),
            n.dim(),
            rho.dim()
        )));
    }
    let p = measure_probabilities(m, rho)?;
    let q = measure_probabilities(n, rho)?;
    let mut best: Option<f64> = None;
    for (i, mi) in m.effects().iter().enumerate() {
        if p.prob(i) <= ZERO_PROBABILITY_CUTOFF {
            continue;
        }
        let mi_rho = mi * rho.matrix();
        for (j, nj) in n.effects().iter().enumerate() {
            if q.prob(j) <= ZERO_PROBABILITY_CUTOFF {
                continue;
            }
            let t = trace(&(nj * &mi_rho)).norm();
            let ratio = t / (p.prob(i) * q.prob(j)).sqrt();
            best = Some(best.map_or(ratio, |b: f64| b.max(ratio)));
        }
    }
    best.ok_or_else(|| {
        Error::validation("all outcome pairs excluded by the zero-probability cutoff".to_string())
    })
}

/// State-independent overlap: `max_{i,j} || M_i^{1/2} N_j^{1/2} ||_inf`,
/// an upper bound on [`g_function`] for every state.
pub fn f_bar(m: &Povm, n: &Povm) -> Result<f64> {
    if m.dim() != n.dim() {
        return Err(Error::shape(format!(
            "f_bar dims: M {}, N {}",
            m.dim(),
            n.dim()
        )));
    }
    let m_roots: Vec<_> = m
        .effects()
        .iter()
        .map(|e| sqrtm_psd(e, 1e-10))
        .collect::<Result<_>>()?;
    let n_roots: Vec<_> = n
        .effects()
        .iter()
        .map(|e| sqrtm_psd(e, 1e-10))
        .collect::<Result<_>>()?;
    let mut best = 0.0f64;
    for mr in &m_roots {
        for nr in &n_roots {
            best = best.max(spectral_norm(&(mr * nr)));
        }
    }
    Ok(best)
}

/// Outcome of comparing an entropy sum against its lower bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub scenario: String,
    pub alpha: f64,
    pub beta: f64,
    pub s: f64,
    pub t: f64,
    pub entropy_sum: f64,
    pub bound: f64,
    pub slack: f64,
}

impl BoundReport {
    pub fn new(
        scenario: impl Into<String>,
        pair: &ConjugatePair,
        s: f64,
        t: f64,
        entropy_sum: f64,
        bound: f64,
    ) -> Self {
        BoundReport {
            scenario: scenario.into(),
            alpha: pair.alpha(),
            beta: pair.beta(),
            s,
            t,
            entropy_sum,
            bound,
            slack: entropy_sum - bound,
        }
    }

    /// True when the inequality holds within [`SLACK_TOLERANCE`].
    pub fn holds(&self) -> bool {
        self.slack >= SLACK_TOLERANCE
    }
}

fn entropy_sum(
    p: &DiscreteDistribution,
    q: &DiscreteDistribution,
    pair: &ConjugatePair,
    s: f64,
    t: f64,
) -> Result<f64> {
    let ep = unified_entropy(p, &UnifiedParams::new(pair.alpha(), s)?);
    let eq = unified_entropy(q, &UnifiedParams::new(pair.beta(), t)?);
    Ok(ep + eq)
}

/// Two-measurement uncertainty relation in the state-dependent form: the
/// entropy sum of the outcome distributions against the bound built from
/// [`g_function`].
pub fn theorem1_bound(
    m: &Povm,
    n: &Povm,
    rho: &DensityOperator,
    pair: &ConjugatePair,
    s: f64,
    t: f64,
) -> Result<BoundReport> {
    let p = measure_probabilities(m, rho)?;
    let q = measure_probabilities(n, rho)?;
    let g = g_function(m, n, rho)?;
    let bound = lemma1_min(g.min(1.0), pair, s, t)?;
    Ok(BoundReport::new(
        "theorem1",
        pair,
        s,
        t,
        entropy_sum(&p, &q, pair, s, t)?,
        bound,
    ))
}

/// State-independent form: the overlap is replaced by [`f_bar`], which never
/// exceeds one and never falls below the state-dependent overlap.
pub fn theorem1_bound_state_independent(
    m: &Povm,
    n: &Povm,
    rho: &DensityOperator,
    pair: &ConjugatePair,
    s: f64,
    t: f64,
) -> Result<BoundReport> {
    let p = measure_probabilities(m, rho)?;
    let q = measure_probabilities(n, rho)?;
    let fb = f_bar(m, n)?;
    let bound = lemma1_min(fb.min(1.0), pair, s, t)?;
    Ok(BoundReport::new(
        "theorem1-independent",
        pair,
        s,
        t,
        entropy_sum(&p, &q, pair, s, t)?,
        bound,
    ))
}

/// Entropy sum against an explicitly supplied overlap value (e.g. an exact
/// constant known for the measurement pair).
pub fn bound_report_with_overlap(
    scenario: impl Into<String>,
    overlap: f64,
    p: &DiscreteDistribution,
    q: &DiscreteDistribution,
    pair: &ConjugatePair,
    s: f64,
    t: f64,
) -> Result<BoundReport> {
    let bound = lemma1_min(overlap, pair, s, t)?;
    Ok(BoundReport::new(
        scenario,
        pair,
        s,
        t,
        entropy_sum(p, q, pair, s, t)?,
        bound,
    ))
}

/// Closed-form bound `(1/nu) ln_mu(N^nu)` for a pair of mutually unbiased
/// bases in dimension `N` (overlap `1/sqrt(N)`).
pub fn mub_bound(dim_n: usize, pair: &ConjugatePair, s: f64, t: f64) -> Result<f64> {
    if dim_n == 0 {
        return Err(Error::domain("dimension must be positive"));
    }
    let mn = select_mu_nu(pair, s, t)?;
    Ok(deformed_log_bound(dim_n as f64, mn))
}

/// Closed-form bound `(1/nu) ln_mu((2 pi / delta_phi)^nu)` for an angular
/// partition with maximal bin width `delta_phi`.
pub fn angle_bound(delta_phi: f64, pair: &ConjugatePair, s: f64, t: f64) -> Result<f64> {
    if !(delta_phi > 0.0 && delta_phi < std::f64::consts::TAU) {
        return Err(Error::domain(format!(
            "bin width must lie in (0, 2 pi), got {delta_phi}"
        )));
    }
    let mn = select_mu_nu(pair, s, t)?;
    Ok(deformed_log_bound(std::f64::consts::TAU / delta_phi, mn))
}

/// Sharpening factor `kappa = sqrt(alpha^{1/(alpha-1)} beta^{1/(beta-1)})`
/// of the multiphoton bound; runs from 2 (at `beta = 1/2`) up to `e` (at the
/// Shannon point), monotonically in `beta`.
pub fn multiphoton_kappa(pair: &ConjugatePair) -> f64 {
    // ln(x)/(x-1) evaluated stably, -> 1 as x -> 1
    let log_ratio = |x: f64| {
        let d = x - 1.0;
        if d == 0.0 {
            1.0
        } else if d.abs() < 0.5 {
            f64::ln_1p(d) / d
        } else {
            x.ln() / d
        }
    };
    (0.5 * (log_ratio(pair.alpha()) + log_ratio(pair.beta()))).exp()
}

/// Multiphoton (Gaussian-regime) bound `(1/nu) ln_mu((kappa pi / delta)^nu)`.
/// Valid for distributions built from the Gaussian approximations of a
/// large-amplitude coherent state; may be non-positive for coarse bins.
pub fn multiphoton_bound(delta: f64, pair: &ConjugatePair, s: f64, t: f64) -> Result<f64> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::domain(format!("bin width must be positive, got {delta}")));
    }
    let mn = select_mu_nu(pair, s, t)?;
    let kappa = multiphoton_kappa(pair);
    Ok(deformed_log_bound(kappa * std::f64::consts::PI / delta, mn))
}

/// Either side of a norm inequality: a discrete distribution or a gridded
/// density (sums replaced by integrals).
#[derive(Debug, Clone, Copy)]
pub enum NormInput<'a> {
    Discrete(&'a DiscreteDistribution),
    Continuous(&'a Density1D),
}

impl NormInput<'_> {
    fn norm(&self, order: f64) -> Result<f64> {
        match self {
            NormInput::Discrete(p) => beta_functional(p, order),
            NormInput::Continuous(p) => continuous_beta_functional(p, order),
        }
    }
}

/// Directional slacks of the norm inequality pair
/// `||p||_alpha <= factor^{2(1-beta)/beta} ||q||_beta` and its mirror.
#[derive(Debug, Clone, Copy)]
pub struct NormSlack {
    /// `factor^{2(1-beta)/beta} ||q||_beta - ||p||_alpha`.
    pub forward: f64,
    /// `factor^{2(1-beta)/beta} ||p||_beta - ||q||_alpha`.
    pub reverse: f64,
}

impl NormSlack {
    pub fn min(&self) -> f64 {
        self.forward.min(self.reverse)
    }
}

/// Evaluate both directions of the norm inequality with transformation
/// constant `factor` (an overlap like `1/sqrt(N)` or `1/sqrt(2 pi)`).
/// Callers require both slacks `>= -1e-9`.
pub fn verify_norm_inequality(
    p: NormInput<'_>,
    q: NormInput<'_>,
    factor: f64,
    pair: &ConjugatePair,
) -> Result<NormSlack> {
    if !(pair.beta() < 1.0 && 1.0 < pair.alpha()) {
        return Err(Error::domain(format!(
            "norm inequality needs beta < 1 < alpha, got ({}, {})",
            pair.alpha(),
            pair.beta()
        )));
    }
    if !(factor > 0.0 && factor.is_finite()) {
        return Err(Error::domain(format!("factor must be positive, got {factor}")));
    }
    let scale = factor.powf(2.0 * (1.0 - pair.beta()) / pair.beta());
    let forward = scale * q.norm(pair.beta())? - p.norm(pair.alpha())?;
    let reverse = scale * p.norm(pair.beta())? - q.norm(pair.alpha())?;
    Ok(NormSlack { forward, reverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_density, random_projective_povm, random_pure, rng_from_seed};
    use crate::states::PureState;

    fn pair(beta: f64) -> ConjugatePair {
        ConjugatePair::from_beta(beta).unwrap()
    }

    #[test]
    fn mu_nu_selection_follows_index_sign() {
        let p = pair(2.0 / 3.0); // alpha = 2
        let mn = select_mu_nu(&p, 1.0, 1.0).unwrap();
        assert!((mn.mu - 2.0).abs() < 1e-12);
        assert_eq!(mn.nu, 1.0);
        let mn = select_mu_nu(&p, -1.0, -1.0).unwrap();
        assert!((mn.mu - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(mn.nu, -1.0);
        let mn = select_mu_nu(&p, 0.0, 0.0).unwrap();
        assert_eq!(mn.nu, 0.0);
        assert!(select_mu_nu(&p, 1.0, -1.0).is_err());
        assert!(select_mu_nu(&p, 0.0, 1.0).is_err());
    }

    #[test]
    fn mixed_indices_allowed_at_shannon_point() {
        let p = ConjugatePair::shannon();
        let mn = select_mu_nu(&p, 1.0, -2.0).unwrap();
        assert_eq!(mn.nu, 0.0);
    }

    #[test]
    fn lemma1_min_trivial_and_renyi_cases() {
        let p = pair(2.0 / 3.0);
        assert!(lemma1_min(1.0, &p, 1.0, 1.0).unwrap().abs() < 1e-15);
        let v = lemma1_min(0.5, &p, 0.0, 0.0).unwrap();
        assert!((v - 2.0 * 2f64.ln()).abs() < 1e-14);
        assert!(lemma1_min(0.0, &p, 1.0, 1.0).is_err());
        assert!(lemma1_min(1.5, &p, 1.0, 1.0).is_err());
    }

    #[test]
    fn lemma1_min_matches_brute_force() {
        let p = pair(2.0 / 3.0);
        let closed = lemma1_min(0.6, &p, 1.0, 1.0).unwrap();
        let brute = brute_force_h_min(0.6, &p, 1.0, 1.0, 4096).unwrap();
        assert!((closed - brute).abs() < 1e-4, "{closed} vs {brute}");
    }

    #[test]
    fn brute_force_minimizer_locations() {
        // s,t > 0: minimum at (xi0, 1); s,t < 0: minimum at (1, c)
        let p = pair(0.75); // alpha = 1.5
        let g: f64 = 0.55;
        let (alpha, beta) = (p.alpha(), p.beta());
        let c = g.powf(-2.0 * (1.0 - beta));
        let xi0 = c.powf(-alpha / beta);
        let h = |xi: f64, zeta: f64, s: f64, t: f64| {
            (xi.powf(s) - 1.0) / ((1.0 - alpha) * s) + (zeta.powf(t) - 1.0) / ((1.0 - beta) * t)
        };
        let pos = brute_force_h_min(g, &p, 1.0, 1.0, 2048).unwrap();
        assert!((pos - h(xi0, 1.0, 1.0, 1.0)).abs() < 1e-10);
        let neg = brute_force_h_min(g, &p, -1.0, -1.0, 2048).unwrap();
        assert!((neg - h(1.0, c, -1.0, -1.0)).abs() < 1e-10);
    }

    #[test]
    fn brute_force_validates_inputs() {
        let p = pair(0.75);
        assert!(brute_force_h_min(0.5, &p, 1.0, 1.0, 100).is_err());
        assert!(brute_force_h_min(0.5, &p, 0.0, 0.0, 1024).is_err());
        assert!(brute_force_h_min(1.0, &p, 1.0, 1.0, 1024).unwrap().abs() < 1e-12);
    }

    #[test]
    fn lemma1_min_decreases_in_g() {
        let p = pair(0.6);
        for (s, t) in [(1.0, 1.0), (0.0, 0.0), (-1.0, -1.0), (2.0, 0.5)] {
            let mut prev = f64::INFINITY;
            for k in 1..=20 {
                let g = k as f64 / 20.0;
                let v = lemma1_min(g, &p, s, t).unwrap();
                assert!(v <= prev + 1e-12, "bound must decrease in g");
                prev = v;
            }
            assert!(prev.abs() < 1e-12, "bound at g = 1 must vanish");
        }
    }

    #[test]
    fn g_function_is_one_for_identical_projective_measurements() {
        let mut rng = rng_from_seed(17);
        let povm = random_projective_povm(4, &mut rng);
        let rho = random_density(4, &mut rng);
        let g = g_function(&povm, &povm, &rho).unwrap();
        assert!((g - 1.0).abs() < 1e-10);
    }

    #[test]
    fn g_function_matches_enumeration_oracle() {
        // independent loop over all outcome pairs from raw traces
        let mut rng = rng_from_seed(29);
        let m = random_projective_povm(3, &mut rng);
        let n = random_projective_povm(3, &mut rng);
        let rho = random_density(3, &mut rng);
        let p = measure_probabilities(&m, &rho).unwrap();
        let q = measure_probabilities(&n, &rho).unwrap();
        let mut expected = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                if p.prob(i) <= 1e-12 || q.prob(j) <= 1e-12 {
                    continue;
                }
                let prod = m.effect(i) * n.effect(j) * rho.matrix();
                let t: crate::linalg::C64 = prod.diagonal().iter().sum();
                expected = expected.max(t.norm() / (p.prob(i) * q.prob(j)).sqrt());
            }
        }
        let g = g_function(&m, &n, &rho).unwrap();
        assert!((g - expected).abs() < 1e-12);
    }

    #[test]
    fn f_bar_for_mub_pair_is_inverse_sqrt_dim() {
        for dim in [2usize, 3, 5] {
            let m = Povm::number_basis(dim);
            let n = Povm::dft_basis(dim);
            let fb = f_bar(&m, &n).unwrap();
            assert!(
                (fb - 1.0 / (dim as f64).sqrt()).abs() < 1e-12,
                "dim {dim}: {fb}"
            );
        }
    }

    #[test]
    fn f_bar_dominates_g_function() {
        let mut rng = rng_from_seed(41);
        let m = random_projective_povm(3, &mut rng);
        let n = random_projective_povm(3, &mut rng);
        let fb = f_bar(&m, &n).unwrap();
        for _ in 0..100 {
            let rho = random_density(3, &mut rng);
            let g = g_function(&m, &n, &rho).unwrap();
            assert!(g <= fb + 1e-10, "g = {g} exceeds f_bar = {fb}");
        }
    }

    #[test]
    fn theorem1_saturates_for_mub_and_number_state() {
        let dim = 5;
        let m = Povm::number_basis(dim);
        let n = Povm::dft_basis(dim);
        let rho = PureState::fock(dim, 2).unwrap().density();
        let pair = ConjugatePair::shannon();
        let report = theorem1_bound(&m, &n, &rho, &pair, 0.0, 0.0).unwrap();
        let ln_dim = (dim as f64).ln();
        assert!((report.entropy_sum - ln_dim).abs() < 1e-9);
        assert!((report.bound - ln_dim).abs() < 1e-9);
        assert!(report.slack.abs() < 1e-9);
    }

    #[test]
    fn theorem1_holds_for_random_inputs() {
        let mut rng = rng_from_seed(71);
        let p = pair(2.0 / 3.0);
        for dim in 2..=5 {
            for _ in 0..25 {
                let rho = random_density(dim, &mut rng);
                let m = random_projective_povm(dim, &mut rng);
                let n = random_projective_povm(dim, &mut rng);
                let r = theorem1_bound(&m, &n, &rho, &p, 1.0, 1.0).unwrap();
                assert!(r.holds(), "slack {}", r.slack);
                let ri = theorem1_bound_state_independent(&m, &n, &rho, &p, 1.0, 1.0).unwrap();
                assert!(ri.holds());
                // state-independent bound can never exceed state-dependent
                assert!(ri.bound <= r.bound + 1e-12);
            }
        }
    }

    #[test]
    fn mub_bound_specializations() {
        let p = pair(2.0 / 3.0);
        assert!((mub_bound(4, &p, 0.0, 0.0).unwrap() - 4f64.ln()).abs() < 1e-14);
        assert!(mub_bound(1, &p, 1.0, 1.0).unwrap().abs() < 1e-15);
        let v = mub_bound(4, &p, 1.0, 1.0).unwrap();
        assert!((v - 0.75).abs() < 1e-14, "ln_2(4) = 3/4, got {v}");
        let via_lemma = lemma1_min(0.5, &p, 1.0, 1.0).unwrap();
        assert!((v - via_lemma).abs() < 1e-14);
    }

    #[test]
    fn angle_bound_specializations() {
        let p = pair(0.8);
        let eps = 1e-9;
        let near_full = angle_bound(std::f64::consts::TAU - eps, &p, 0.0, 0.0).unwrap();
        assert!(near_full.abs() < 1e-8);
        let v = angle_bound(0.7, &p, 0.0, 0.0).unwrap();
        assert!((v - (std::f64::consts::TAU / 0.7).ln()).abs() < 1e-14);
        let sh = angle_bound(std::f64::consts::PI / 8.0, &ConjugatePair::shannon(), 0.0, 0.0)
            .unwrap();
        assert!((sh - 16f64.ln()).abs() < 1e-14);
        assert!(angle_bound(0.0, &p, 0.0, 0.0).is_err());
        assert!(angle_bound(7.0, &p, 0.0, 0.0).is_err());
    }

    #[test]
    fn kappa_endpoints_and_monotonicity() {
        assert!((multiphoton_kappa(&ConjugatePair::shannon()) - std::f64::consts::E).abs() < 1e-12);
        let near_half = multiphoton_kappa(&pair(0.500001));
        assert!((near_half - 2.0).abs() < 1e-4, "{near_half}");
        let mid = multiphoton_kappa(&pair(0.75));
        assert!(mid > 2.0 && mid < std::f64::consts::E);
        let mut prev = 0.0;
        for k in 1..=50 {
            let beta = 0.5 + 0.5 * k as f64 / 51.0;
            let v = multiphoton_kappa(&pair(beta));
            assert!(v > prev, "kappa must increase in beta");
            prev = v;
        }
    }

    #[test]
    fn multiphoton_bound_cases() {
        // at beta = 1/2 the factor kappa -> 2 and the bound matches the
        // general 2 pi / delta form
        let p = pair(0.5000001);
        let delta = std::f64::consts::PI / 4.0;
        let mp = multiphoton_bound(delta, &p, 0.0, 0.0).unwrap();
        let general = angle_bound(delta, &p, 0.0, 0.0).unwrap();
        assert!((mp - general).abs() < 1e-5, "{mp} vs {general}");
        // Shannon with delta = pi: ln(e pi / pi) = 1
        let sh = multiphoton_bound(std::f64::consts::PI, &ConjugatePair::shannon(), 1.0, 1.0)
            .unwrap();
        assert!((sh - 1.0).abs() < 1e-14);
        // composition with the kappa factor
        let p2 = pair(2.0 / 3.0);
        let kappa = multiphoton_kappa(&p2);
        let expect = {
            let mn = select_mu_nu(&p2, 1.0, 1.0).unwrap();
            let base = kappa * std::f64::consts::PI / delta;
            (f64::exp_m1(mn.nu * (1.0 - mn.mu) * base.ln())) / ((1.0 - mn.mu) * mn.nu)
        };
        let got = multiphoton_bound(delta, &p2, 1.0, 1.0).unwrap();
        assert!((got - expect).abs() < 1e-12);
    }

    #[test]
    fn norm_inequality_on_uniform_pair() {
        let p = DiscreteDistribution::uniform(4);
        let q = DiscreteDistribution::uniform(4);
        let slack =
            verify_norm_inequality(NormInput::Discrete(&p), NormInput::Discrete(&q), 1.0, &pair(0.75))
                .unwrap();
        assert!(slack.min() >= 0.0);
    }

    #[test]
    fn norm_inequality_for_mub_pair() {
        let dim = 4;
        let mut rng = rng_from_seed(83);
        let m = Povm::number_basis(dim);
        let n = Povm::dft_basis(dim);
        let cp = pair(0.7);
        for _ in 0..50 {
            let psi = random_pure(dim, &mut rng).density();
            let p = measure_probabilities(&n, &psi).unwrap();
            let q = measure_probabilities(&m, &psi).unwrap();
            let slack = verify_norm_inequality(
                NormInput::Discrete(&p),
                NormInput::Discrete(&q),
                1.0 / (dim as f64).sqrt(),
                &cp,
            )
            .unwrap();
            assert!(slack.min() >= -1e-9, "slack {}", slack.min());
        }
    }

    #[test]
    fn norm_inequality_rejects_bad_orders() {
        let p = DiscreteDistribution::uniform(2);
        assert!(verify_norm_inequality(
            NormInput::Discrete(&p),
            NormInput::Discrete(&p),
            1.0,
            &ConjugatePair::shannon()
        )
        .is_err());
    }
}
