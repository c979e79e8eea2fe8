//! Complex linear-algebra substrate: Hermitian eigendecomposition, the
//! Hilbert-Schmidt inner product, spectral norms and PSD square roots.
//!
//! Matrices are dense `nalgebra` matrices over `Complex<f64>`. Everything in
//! this module is a pure function; validation tolerances live in
//! [`Tolerances`] and default to the values used by the rest of the crate.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type C64 = Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = DMatrix<C64>;
/// Dense complex vector.
pub type CVector = DVector<C64>;

/// Validation tolerances. The defaults are the ones assumed by every
/// constructor in this crate; callers with noisier inputs can relax them.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Max entrywise deviation from `H = H^dagger`.
    pub hermiticity: f64,
    /// Allowed negativity of eigenvalues for "positive semidefinite".
    pub psd: f64,
    /// Max deviation of a trace from its required value.
    pub trace: f64,
    /// Max entrywise deviation of an effect sum / Kraus sum from identity.
    pub completeness: f64,
    /// Max deviation of a state vector norm from one.
    pub state_norm: f64,
    /// Orthonormality / unitarity tolerance for supplied bases.
    pub orthonormality: f64,
    /// Allowed drift of a probability vector's sum from one.
    pub probability_drift: f64,
    /// Allowed deviation of a density's integral from one.
    pub density_norm: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            hermiticity: 1e-10,
            psd: 1e-10,
            trace: 1e-10,
            completeness: 1e-10,
            state_norm: 1e-10,
            orthonormality: 1e-8,
            probability_drift: 1e-9,
            density_norm: 1e-6,
        }
    }
}

/// Largest entrywise modulus.
pub fn max_abs_entry(m: &CMatrix) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Largest entrywise deviation from Hermiticity, `max |M - M^dagger|`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    if !m.is_square() {
        return f64::INFINITY;
    }
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            worst = worst.max(d);
        }
    }
    worst
}

/// True when every entry is finite.
pub fn all_finite(m: &CMatrix) -> bool {
    m.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

/// Result of a Hermitian eigendecomposition: `H V = V diag(lambda)` with
/// eigenvalues ascending and `V` unitary.
#[derive(Debug, Clone)]
pub struct Eigh {
    pub eigenvalues: Vec<f64>,
    /// Columns are the eigenvectors, in eigenvalue order.
    pub eigenvectors: CMatrix,
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues are returned in ascending order. Each eigenvector column is
/// phase-fixed so that its first component of non-negligible modulus is real
/// and positive, which makes the output deterministic.
pub fn eigh(h: &CMatrix) -> Result<Eigh> {
    if !h.is_square() {
        return Err(Error::shape(format!(
            "eigh requires a square matrix, got {}x{}",
            h.nrows(),
            h.ncols()
        )));
    }
    if !all_finite(h) {
        return Err(Error::validation("eigh: matrix has non-finite entries"));
    }
    let defect = hermiticity_defect(h);
    if defect > 1e-8 {
        return Err(Error::validation(format!(
            "eigh: matrix is not Hermitian (defect {defect:e} > 1e-8)"
        )));
    }
    let n = h.nrows();
    // Symmetrize exactly so rounding in the input cannot leak through.
    let herm = (h + h.adjoint()).scale(0.5);
    let se = herm.symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].total_cmp(&se.eigenvalues[b]));

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvalues.push(se.eigenvalues[src]);
        let col = se.eigenvectors.column(src);
        // Phase convention: first component with modulus > 1e-8 made real
        // positive.
        let phase = col
            .iter()
            .find(|c| c.norm() > 1e-8)
            .map(|c| c / c.norm())
            .unwrap_or_else(|| C64::new(1.0, 0.0));
        let fix = phase.conj();
        for i in 0..n {
            eigenvectors[(i, dst)] = col[i] * fix;
        }
    }
    Ok(Eigh {
        eigenvalues,
        eigenvectors,
    })
}

/// Hilbert-Schmidt inner product `tr(A^dagger B)`.
pub fn hs_inner(a: &CMatrix, b: &CMatrix) -> Result<C64> {
    if a.shape() != b.shape() {
        return Err(Error::shape(format!(
            "hs_inner: {}x{} vs {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    Ok(a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum())
}

/// Spectral norm: the largest singular value, computed as the square root of
/// the largest eigenvalue of `A^dagger A`.
pub fn spectral_norm(a: &CMatrix) -> f64 {
    if a.nrows() == 0 || a.ncols() == 0 {
        return 0.0;
    }
    let gram = a.adjoint() * a;
    // gram is Hermitian PSD by construction.
    let se = gram.symmetric_eigen();
    se.eigenvalues
        .iter()
        .fold(0.0f64, |acc, &l| acc.max(l))
        .max(0.0)
        .sqrt()
}

/// Principal square root of a Hermitian PSD matrix via eigendecomposition.
/// Eigenvalues in `[-psd_tol, 0)` are clamped to zero.
pub fn sqrtm_psd(h: &CMatrix, psd_tol: f64) -> Result<CMatrix> {
    let dec = eigh(h)?;
    let n = h.nrows();
    if let Some(&min) = dec
        .eigenvalues
        .first()
        .filter(|&&min| min < -psd_tol)
    {
        return Err(Error::validation(format!(
            "sqrtm_psd: matrix has negative eigenvalue {min:e}"
        )));
    }
    let mut out = CMatrix::zeros(n, n);
    for (k, &l) in dec.eigenvalues.iter().enumerate() {
        let s = l.max(0.0).sqrt();
        let v = dec.eigenvectors.column(k);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += v[i] * v[j].conj() * C64::new(s, 0.0);
            }
        }
    }
    Ok(out)
}

/// Trace of a square matrix.
pub fn trace(m: &CMatrix) -> C64 {
    m.diagonal().iter().sum()
}

/// Unitary discrete Fourier transform matrix, entries
/// `exp(2 pi i k l / n) / sqrt(n)`.
pub fn dft_matrix(n: usize) -> CMatrix {
    let norm = 1.0 / (n as f64).sqrt();
    CMatrix::from_fn(n, n, |k, l| {
        let phase = std::f64::consts::TAU * (k as f64) * (l as f64) / (n as f64);
        C64::from_polar(norm, phase)
    })
}

/// Max entrywise deviation of `U^dagger U` from the identity.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let n = u.ncols();
    let gram = u.adjoint() * u;
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            worst = worst.max((gram[(i, j)] - target).norm());
        }
    }
    worst
}
