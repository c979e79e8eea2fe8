//! Generalized measurements (POVMs) and their outcome statistics.

use crate::entropy::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::linalg::{
    all_finite, dft_matrix, hermiticity_defect, C64, CMatrix, Tolerances,
};
use crate::states::{DensityOperator, PureState};

/// Positive operator-valued measure: effects `M_i >= 0` with
/// `sum_i M_i = I`.
#[derive(Debug, Clone, PartialEq)]
pub struct Povm {
    effects: Vec<CMatrix>,
}

impl Povm {
    pub fn new(effects: Vec<CMatrix>) -> Result<Self> {
        Self::new_with(effects, &Tolerances::default())
    }

    pub fn new_with(effects: Vec<CMatrix>, tol: &Tolerances) -> Result<Self> {
        if effects.is_empty() {
            return Err(Error::validation("POVM must have at least one effect"));
        }
        let dim = effects[0].nrows();
        for (i, m) in effects.iter().enumerate() {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::shape(format!(
                    "effect {i} is {}x{}, expected {dim}x{dim}",
                    m.nrows(),
                    m.ncols()
                )));
            }
            if !all_finite(m) {
                return Err(Error::validation(format!("effect {i} has non-finite entries")));
            }
            let defect = hermiticity_defect(m);
            if defect > tol.hermiticity {
                return Err(Error::validation(format!(
                    "effect {i} not Hermitian: defect {defect:e}"
                )));
            }
            let herm = (m + m.adjoint()).scale(0.5);
            let min_eig = herm
                .symmetric_eigen()
                .eigenvalues
                .iter()
                .fold(f64::INFINITY, |a, &b| a.min(b));
            if min_eig < -tol.psd {
                return Err(Error::validation(format!(
                    "effect {i} not PSD: min eigenvalue {min_eig:e}"
                )));
            }
        }
        let mut sum = CMatrix::zeros(dim, dim);
        for m in &effects {
            sum += m;
        }
        let mut defect = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                defect = defect.max((sum[(i, j)] - target).norm());
            }
        }
        if defect > tol.completeness {
            return Err(Error::validation(format!(
                "effects do not sum to identity: max deviation {defect:e}"
            )));
        }
        Ok(Povm { effects })
    }

    /// The trivial single-effect POVM `{I}`.
    pub fn identity(dim: usize) -> Self {
        Povm {
            effects: vec![CMatrix::identity(dim, dim)],
        }
    }

    /// Rank-one projectors onto the columns of a unitary. Cheaper than
    /// [`Povm::new`] because only the unitarity of `u` needs checking.
    pub fn from_unitary_columns(u: &CMatrix) -> Result<Self> {
        Self::from_unitary_columns_with(u, &Tolerances::default())
    }

    pub fn from_unitary_columns_with(u: &CMatrix, tol: &Tolerances) -> Result<Self> {
        if !u.is_square() {
            return Err(Error::shape("projective POVM requires a square unitary"));
        }
        let defect = crate::linalg::unitarity_defect(u);
        if defect > tol.orthonormality {
            return Err(Error::validation(format!(
                "columns not orthonormal: defect {defect:e}"
            )));
        }
        let dim = u.nrows();
        let effects = (0..dim)
            .map(|k| {
                let col = u.column(k);
                CMatrix::from_fn(dim, dim, |i, j| col[i] * col[j].conj())
            })
            .collect();
        Ok(Povm { effects })
    }

    /// Projective measurement in the number basis.
    pub fn number_basis(dim: usize) -> Self {
        let effects = (0..dim)
            .map(|k| {
                let mut m = CMatrix::zeros(dim, dim);
                m[(k, k)] = C64::new(1.0, 0.0);
                m
            })
            .collect();
        Povm { effects }
    }

    /// Projective measurement in the discrete-Fourier basis, mutually
    /// unbiased with the number basis.
    pub fn dft_basis(dim: usize) -> Self {
        Povm::from_unitary_columns(&dft_matrix(dim)).expect("DFT matrix is unitary")
    }

    pub fn dim(&self) -> usize {
        self.effects[0].nrows()
    }

    pub fn len(&self) -> usize {
        self.effects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.effects.is_empty()
    }

    pub fn effects(&self) -> &[CMatrix] {
        &self.effects
    }

    pub fn effect(&self, i: usize) -> &CMatrix {
        &self.effects[i]
    }
}

/// Projective POVM from a list of orthonormal vectors.
pub fn basis_povm(vectors: &[PureState]) -> Result<Povm> {
    if vectors.is_empty() {
        return Err(Error::validation("basis_povm needs at least one vector"));
    }
    let dim = vectors[0].dim();
    if vectors.len() != dim {
        return Err(Error::validation(format!(
            "need {dim} orthonormal vectors to span dim {dim}, got {}",
            vectors.len()
        )));
    }
    let mut u = CMatrix::zeros(dim, dim);
    for (k, v) in vectors.iter().enumerate() {
        if v.dim() != dim {
            return Err(Error::shape(format!(
                "vector {k} has dim {}, expected {dim}",
                v.dim()
            )));
        }
        for i in 0..dim {
            u[(i, k)] = v.amplitude(i);
        }
    }
    Povm::from_unitary_columns(&u)
}

/// Outcome probabilities `p_i = tr(M_i rho)`.
///
/// Floating-point negatives within `-1e-10` are clamped to zero; a sum drift
/// beyond the tolerance is reported as an error instead of silently
/// renormalized away.
pub fn measure_probabilities(povm: &Povm, rho: &DensityOperator) -> Result<DiscreteDistribution> {
    measure_probabilities_with(povm, rho, &Tolerances::default())
}

pub fn measure_probabilities_with(
    povm: &Povm,
    rho: &DensityOperator,
    tol: &Tolerances,
) -> Result<DiscreteDistribution> {
    if povm.dim() != rho.dim() {
        return Err(Error::shape(format!(
            "POVM dim {} vs state dim {}",
            povm.dim(),
            rho.dim()
        )));
    }
    let mut probs = Vec::with_capacity(povm.len());
    for (i, m) in povm.effects().iter().enumerate() {
        // tr(M rho) = sum_{ij} M_ij rho_ji
        let mut p = C64::new(0.0, 0.0);
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                p += m[(r, c)] * rho.entry(c, r);
            }
        }
        if p.im.abs() > 1e-8 {
            return Err(Error::validation(format!(
                "probability {i} has imaginary part {:e}",
                p.im
            )));
        }
        let mut re = p.re;
        if re < 0.0 {
            if re < -tol.psd {
                return Err(Error::validation(format!(
                    "probability {i} is {re:e}, below the clamp window"
                )));
            }
            re = 0.0;
        }
        probs.push(re);
    }
    let sum: f64 = probs.iter().sum();
    let drift = (sum - 1.0).abs();
    if drift > tol.probability_drift {
        return Err(Error::ProbabilityDrift {
            drift,
            tolerance: tol.probability_drift,
        });
    }
    for p in &mut probs {
        *p /= sum;
    }
    DiscreteDistribution::new(probs)
}
