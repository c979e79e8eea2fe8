//! States on a truncated Fock space: pure state vectors, density operators,
//! and the standard quantum-optics constructors (Fock, coherent, thermal).
//!
//! Infinite-dimensional states are truncated so that the dropped tail mass is
//! below `TAIL_TOLERANCE`; the `default_*_dim` helpers pick a dimension that
//! satisfies the rule for the requested parameters.

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::linalg::{all_finite, hermiticity_defect, C64, CMatrix, CVector, Tolerances};

/// Tail mass allowed to be dropped when truncating an infinite-dimensional
/// state.
pub const TAIL_TOLERANCE: f64 = 1e-12;

/// Normalized state vector in the number basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: CVector,
}

impl PureState {
    /// Wrap a vector, requiring unit norm within the default tolerance.
    pub fn new(amplitudes: CVector) -> Result<Self> {
        Self::new_with(amplitudes, &Tolerances::default())
    }

    pub fn new_with(amplitudes: CVector, tol: &Tolerances) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::validation("state vector must be non-empty"));
        }
        if !amplitudes.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
            return Err(Error::validation("state vector has non-finite entries"));
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > tol.state_norm {
            return Err(Error::validation(format!(
                "state vector norm {norm} deviates from 1 beyond {:e}",
                tol.state_norm
            )));
        }
        Ok(PureState { amplitudes })
    }

    /// Normalize an arbitrary nonzero vector into a state.
    pub fn from_unnormalized(v: CVector) -> Result<Self> {
        let n = v.norm();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::validation("cannot normalize a zero or non-finite vector"));
        }
        PureState::new(v.map(|c| c / C64::new(n, 0.0)))
    }

    /// Number state `|n>` in a `dim`-dimensional space.
    pub fn fock(dim: usize, n: usize) -> Result<Self> {
        if n >= dim {
            return Err(Error::domain(format!("fock level {n} >= dim {dim}")));
        }
        let mut v = CVector::zeros(dim);
        v[n] = C64::new(1.0, 0.0);
        Ok(PureState { amplitudes: v })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn amplitude(&self, n: usize) -> C64 {
        self.amplitudes[n]
    }

    /// `<self|other>`.
    pub fn overlap(&self, other: &PureState) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::shape(format!(
                "overlap: dim {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// Rank-one density operator `|psi><psi|`.
    pub fn density(&self) -> DensityOperator {
        let d = self.dim();
        let m = CMatrix::from_fn(d, d, |i, j| {
            self.amplitudes[i] * self.amplitudes[j].conj()
        });
        DensityOperator { matrix: m }
    }

    /// Zero-pad the amplitudes up to `dim`.
    pub fn embed(&self, dim: usize) -> Result<Self> {
        if dim < self.dim() {
            return Err(Error::domain(format!(
                "cannot embed dim {} state into dim {dim}",
                self.dim()
            )));
        }
        let mut v = CVector::zeros(dim);
        for i in 0..self.dim() {
            v[i] = self.amplitudes[i];
        }
        Ok(PureState { amplitudes: v })
    }
}

/// Density operator: Hermitian, positive semidefinite, unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: CMatrix,
}

impl DensityOperator {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        Self::new_with(matrix, &Tolerances::default())
    }

    pub fn new_with(matrix: CMatrix, tol: &Tolerances) -> Result<Self> {
        if !matrix.is_square() || matrix.is_empty() {
            return Err(Error::shape("density operator must be square and non-empty"));
        }
        if !all_finite(&matrix) {
            return Err(Error::validation("density operator has non-finite entries"));
        }
        let defect = hermiticity_defect(&matrix);
        if defect > tol.hermiticity {
            return Err(Error::validation(format!(
                "density operator not Hermitian: defect {defect:e} > {:e}",
                tol.hermiticity
            )));
        }
        let tr: C64 = matrix.diagonal().iter().sum();
        if (tr.re - 1.0).abs() > tol.trace || tr.im.abs() > tol.trace {
            return Err(Error::validation(format!(
                "density operator trace {tr} deviates from 1 beyond {:e}",
                tol.trace
            )));
        }
        // positivity via the smallest eigenvalue of the symmetrized matrix
        let herm = (&matrix + matrix.adjoint()).scale(0.5);
        let min_eig = herm
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .fold(f64::INFINITY, |a, &b| a.min(b));
        if min_eig < -tol.psd {
            return Err(Error::validation(format!(
                "density operator not PSD: min eigenvalue {min_eig:e} < -{:e}",
                tol.psd
            )));
        }
        Ok(DensityOperator { matrix })
    }

    pub fn from_pure(psi: &PureState) -> Self {
        psi.density()
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.matrix[(i, j)]
    }

    /// Zero-pad into a larger space (the state keeps its support).
    pub fn embed(&self, dim: usize) -> Result<Self> {
        if dim < self.dim() {
            return Err(Error::domain(format!(
                "cannot embed dim {} operator into dim {dim}",
                self.dim()
            )));
        }
        let mut m = CMatrix::zeros(dim, dim);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                m[(i, j)] = self.matrix[(i, j)];
            }
        }
        Ok(DensityOperator { matrix: m })
    }

    /// Maximally mixed state `I/dim`.
    pub fn maximally_mixed(dim: usize) -> Self {
        DensityOperator {
            matrix: CMatrix::identity(dim, dim).scale(1.0 / dim as f64),
        }
    }
}

/// Truncation dimension for a coherent state with amplitude `z` such that the
/// dropped Poisson tail is below [`TAIL_TOLERANCE`].
pub fn default_coherent_dim(z: C64) -> usize {
    let r = z.norm();
    (r * r + 12.0 * r + 20.0).ceil() as usize
}

/// Log Poisson weight `ln[ e^{-lambda} lambda^n / n! ]`.
fn ln_poisson(lambda: f64, n: usize) -> f64 {
    if lambda == 0.0 {
        return if n == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    -lambda + (n as f64) * lambda.ln() - ln_gamma(n as f64 + 1.0)
}

/// Truncated coherent state `|z>` with amplitudes proportional to
/// `e^{-|z|^2/2} z^n / sqrt(n!)`, renormalized after truncation.
///
/// Fails when `dim` leaves more than [`TAIL_TOLERANCE`] of the Poisson number
/// distribution outside the truncation.
pub fn coherent_state(z: C64, dim: usize) -> Result<PureState> {
    if dim == 0 {
        return Err(Error::domain("coherent state needs dim >= 1"));
    }
    let lambda = z.norm_sqr();
    let phi = z.arg();
    let mut weights = Vec::with_capacity(dim);
    let mut mass = 0.0f64;
    for n in 0..dim {
        let w = ln_poisson(lambda, n).exp();
        weights.push(w);
        mass += w;
    }
    if 1.0 - mass > TAIL_TOLERANCE {
        return Err(Error::InsufficientDim(format!(
            "coherent |z|^2 = {lambda}: dim {dim} leaves tail mass {:e} > {TAIL_TOLERANCE:e} \
             (default dim would be {})",
            1.0 - mass,
            default_coherent_dim(z)
        )));
    }
    let renorm = mass.sqrt();
    let v = CVector::from_fn(dim, |n, _| {
        C64::from_polar(weights[n].sqrt() / renorm, phi * n as f64)
    });
    Ok(PureState { amplitudes: v })
}

/// Truncation dimension for a thermal state so the geometric tail
/// `r^dim` with `r = nbar/(1+nbar)` is below [`TAIL_TOLERANCE`].
pub fn default_thermal_dim(nbar: f64) -> usize {
    if nbar <= 0.0 {
        return 1;
    }
    let r = nbar / (1.0 + nbar);
    (TAIL_TOLERANCE.ln() / r.ln()).ceil() as usize + 1
}

/// Truncated thermal state, diagonal in the number basis with Bose-Einstein
/// weights proportional to `(nbar/(1+nbar))^n`, renormalized.
pub fn thermal_state(nbar: f64, dim: usize) -> Result<DensityOperator> {
    if !(nbar >= 0.0 && nbar.is_finite()) {
        return Err(Error::domain(format!("thermal nbar must be >= 0, got {nbar}")));
    }
    if dim == 0 {
        return Err(Error::domain("thermal state needs dim >= 1"));
    }
    let r = nbar / (1.0 + nbar);
    // tail mass of the untruncated distribution beyond dim is exactly r^dim
    let tail = r.powi(dim as i32);
    if tail > TAIL_TOLERANCE {
        return Err(Error::InsufficientDim(format!(
            "thermal nbar = {nbar}: dim {dim} leaves tail mass {tail:e} > {TAIL_TOLERANCE:e} \
             (default dim would be {})",
            default_thermal_dim(nbar)
        )));
    }
    let mut weights: Vec<f64> = (0..dim).map(|n| r.powi(n as i32)).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut m = CMatrix::zeros(dim, dim);
    for (n, w) in weights.iter().enumerate() {
        m[(n, n)] = C64::new(*w, 0.0);
    }
    Ok(DensityOperator { matrix: m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fock_is_a_basis_vector() {
        let s = PureState::fock(4, 2).unwrap();
        assert_eq!(s.amplitude(2), C64::new(1.0, 0.0));
        assert_eq!(s.amplitude(0), C64::new(0.0, 0.0));
    }

    #[test]
    fn coherent_vacuum_is_fock_zero() {
        let s = coherent_state(C64::new(0.0, 0.0), 5).unwrap();
        assert!((s.amplitude(0) - C64::new(1.0, 0.0)).norm() < 1e-15);
        for n in 1..5 {
            assert!(s.amplitude(n).norm() < 1e-15);
        }
    }

    #[test]
    fn coherent_mean_and_variance_match_poisson() {
        let s = coherent_state(C64::new(2.0, 0.0), 40).unwrap();
        let q: Vec<f64> = (0..40).map(|n| s.amplitude(n).norm_sqr()).collect();
        let mean: f64 = q.iter().enumerate().map(|(n, p)| n as f64 * p).sum();
        let second: f64 = q
            .iter()
            .enumerate()
            .map(|(n, p)| (n as f64) * (n as f64) * p)
            .sum();
        assert!((mean - 4.0).abs() < 1e-9, "mean {mean}");
        assert!((second - mean * mean - 4.0).abs() < 1e-8);
    }

    #[test]
    fn coherent_amplitudes_match_poisson_pointwise() {
        // |amplitude_n|^2 against the raw Poisson weights, before the
        // renormalization (which here is within 1e-12 of one anyway).
        let z = C64::new(1.5, -0.7);
        let lambda = z.norm_sqr();
        let s = coherent_state(z, 40).unwrap();
        let mut w = (-lambda).exp();
        for n in 0..40 {
            assert!((s.amplitude(n).norm_sqr() - w).abs() < 1e-12, "n = {n}");
            w *= lambda / (n as f64 + 1.0);
        }
    }

    #[test]
    fn coherent_phases_follow_arg_z() {
        let z = C64::from_polar(1.2, 0.9);
        let s = coherent_state(z, 30).unwrap();
        for n in 0..6 {
            let expected = 0.9 * n as f64;
            let got = s.amplitude(n).arg();
            let diff = (got - expected).rem_euclid(std::f64::consts::TAU);
            assert!(diff < 1e-10 || (std::f64::consts::TAU - diff) < 1e-10);
        }
    }

    #[test]
    fn coherent_insufficient_dim_is_an_error() {
        assert!(matches!(
            coherent_state(C64::new(10.0, 0.0), 30),
            Err(Error::InsufficientDim(_))
        ));
        assert!(coherent_state(C64::new(10.0, 0.0), default_coherent_dim(C64::new(10.0, 0.0))).is_ok());
    }

    #[test]
    fn thermal_vacuum_limit() {
        let rho = thermal_state(0.0, 3).unwrap();
        assert!((rho.entry(0, 0) - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(rho.entry(1, 1).norm() < 1e-15);
    }

    #[test]
    fn thermal_mean_photon_number() {
        // geometric-series oracle: truncated mean differs from nbar by the
        // renormalized tail, far below 1e-9 at dim 60
        let rho = thermal_state(1.0, 60).unwrap();
        let mean: f64 = (0..60).map(|n| n as f64 * rho.entry(n, n).re).sum();
        assert!((mean - 1.0).abs() < 1e-9, "mean {mean}");
    }

    #[test]
    fn thermal_insufficient_dim_is_an_error() {
        assert!(matches!(
            thermal_state(5.0, 20),
            Err(Error::InsufficientDim(_))
        ));
        assert!(thermal_state(5.0, default_thermal_dim(5.0)).is_ok());
    }

    #[test]
    fn density_operator_rejects_bad_inputs() {
        // non-Hermitian
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(0.5, 0.0),
                C64::new(0.3, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.5, 0.0),
            ],
        );
        assert!(DensityOperator::new(m).is_err());
        // trace != 1
        let m = CMatrix::identity(2, 2);
        assert!(DensityOperator::new(m).is_err());
        // negative eigenvalue
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(1.5, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(-0.5, 0.0),
            ],
        );
        assert!(DensityOperator::new(m).is_err());
    }

    #[test]
    fn embedding_preserves_entries() {
        let s = PureState::fock(3, 1).unwrap();
        let rho = s.density().embed(6).unwrap();
        assert_eq!(rho.dim(), 6);
        assert!((rho.entry(1, 1) - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(rho.entry(5, 5).norm() < 1e-15);
    }
}
