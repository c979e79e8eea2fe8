//! Quantum channels as Kraus operator sums and their unravelings.
//!
//! An unraveling of a channel is any operator-sum representation
//! `rho -> sum_j A_j rho A_j^dagger`; two unravelings of the same channel are
//! related by a unitary remixing `B_i = sum_j A_j u_ji`. For a fixed input
//! state the Gram matrix `Pi_ij = tr(A_i^dagger A_j rho)` transforms by
//! unitary similarity under remixing, so diagonalizing it yields the
//! unraveling whose effect probabilities are the eigenvalues of `Pi` — the
//! extremal unraveling, which minimizes the unified entropies over all
//! remixings (for the Renyi family only up to order one).

use crate::entropy::{unified_entropy, ConjugatePair, DiscreteDistribution, UnifiedParams};
use crate::error::{Error, Result};
use crate::linalg::{
    all_finite, eigh, hermiticity_defect, max_abs_entry, trace, unitarity_defect, C64, CMatrix,
    Tolerances,
};
use crate::measurement::Povm;
use crate::states::DensityOperator;

/// Operator-sum representation of a channel: Kraus operators with
/// `sum_j A_j^dagger A_j = I`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    operators: Vec<CMatrix>,
}

impl KrausSet {
    pub fn new(operators: Vec<CMatrix>) -> Result<Self> {
        Self::new_with(operators, &Tolerances::default())
    }

    pub fn new_with(operators: Vec<CMatrix>, tol: &Tolerances) -> Result<Self> {
        if operators.is_empty() {
            return Err(Error::validation("a channel needs at least one Kraus operator"));
        }
        let (rows, cols) = operators[0].shape();
        for (j, a) in operators.iter().enumerate() {
            if a.shape() != (rows, cols) {
                return Err(Error::shape(format!(
                    "Kraus operator {j} is {}x{}, expected {rows}x{cols}",
                    a.nrows(),
                    a.ncols()
                )));
            }
            if !all_finite(a) {
                return Err(Error::validation(format!(
                    "Kraus operator {j} has non-finite entries"
                )));
            }
        }
        let mut sum = CMatrix::zeros(cols, cols);
        for a in &operators {
            sum += a.adjoint() * a;
        }
        let defect = max_abs_entry(&(sum - CMatrix::identity(cols, cols)));
        if defect > tol.completeness {
            return Err(Error::validation(format!(
                "Kraus operators violate the completeness relation by {defect:e}"
            )));
        }
        Ok(KrausSet { operators })
    }

    pub fn dim_in(&self) -> usize {
        self.operators[0].ncols()
    }

    pub fn dim_out(&self) -> usize {
        self.operators[0].nrows()
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.operators
    }

    pub fn operator(&self, j: usize) -> &CMatrix {
        &self.operators[j]
    }

    /// Identity channel on `dim` dimensions.
    pub fn identity(dim: usize) -> Self {
        KrausSet {
            operators: vec![CMatrix::identity(dim, dim)],
        }
    }

    /// The measurement effects `M_i = A_i^dagger A_i` of this unraveling;
    /// they form a POVM by the completeness relation.
    pub fn effect_povm(&self) -> Result<Povm> {
        let effects = self
            .operators
            .iter()
            .map(|a| a.adjoint() * a)
            .collect::<Vec<_>>();
        Povm::new(effects)
    }
}

/// Apply the channel: `sum_j A_j rho A_j^dagger`.
pub fn apply_channel(a: &KrausSet, rho: &DensityOperator) -> Result<DensityOperator> {
    if a.dim_in() != rho.dim() {
        return Err(Error::shape(format!(
            "channel input dim {} vs state dim {}",
            a.dim_in(),
            rho.dim()
        )));
    }
    let mut out = CMatrix::zeros(a.dim_out(), a.dim_out());
    for op in a.operators() {
        out += op * rho.matrix() * op.adjoint();
    }
    DensityOperator::new(out)
}

/// Gram matrix of an unraveling at a state: Hermitian, PSD, unit trace, with
/// the effect probabilities on the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    matrix: CMatrix,
}

impl GramMatrix {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.is_empty() {
            return Err(Error::shape("Gram matrix must be square and non-empty"));
        }
        let defect = hermiticity_defect(&matrix);
        if defect > 1e-9 {
            return Err(Error::validation(format!(
                "Gram matrix not Hermitian: defect {defect:e}"
            )));
        }
        let tr = trace(&matrix);
        if (tr.re - 1.0).abs() > 1e-9 || tr.im.abs() > 1e-9 {
            return Err(Error::validation(format!(
                "Gram matrix trace {tr} deviates from 1"
            )));
        }
        let herm = (&matrix + matrix.adjoint()).scale(0.5);
        let min_eig = herm
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .fold(f64::INFINITY, |a, &b| a.min(b));
        if min_eig < -1e-9 {
            return Err(Error::validation(format!(
                "Gram matrix not PSD: min eigenvalue {min_eig:e}"
            )));
        }
        Ok(GramMatrix { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Effect probabilities: the (clamped) real diagonal.
    pub fn diagonal_distribution(&self) -> DiscreteDistribution {
        let probs: Vec<f64> = self
            .matrix
            .diagonal()
            .iter()
            .map(|c| c.re.max(0.0))
            .collect();
        let sum: f64 = probs.iter().sum();
        DiscreteDistribution::new(probs.iter().map(|p| p / sum).collect())
            .expect("Gram diagonal is a distribution")
    }
}

/// `Pi_ij = tr(A_i^dagger A_j rho)`.
pub fn pi_matrix(a: &KrausSet, rho: &DensityOperator) -> Result<GramMatrix> {
    if a.dim_in() != rho.dim() {
        return Err(Error::shape(format!(
            "channel input dim {} vs state dim {}",
            a.dim_in(),
            rho.dim()
        )));
    }
    let k = a.len();
    let mut m = CMatrix::zeros(k, k);
    // precompute A_j rho once per column
    let a_rho: Vec<CMatrix> = a.operators().iter().map(|op| op * rho.matrix()).collect();
    for i in 0..k {
        for j in 0..k {
            m[(i, j)] = trace(&(a.operator(i).adjoint() * &a_rho[j]));
        }
    }
    GramMatrix::new(m)
}

/// Remix an unraveling: `B_i = sum_j A_j u_ji` for a unitary `u` of size
/// equal to the number of operators. Represents the same channel.
pub fn remix_unraveling(a: &KrausSet, u: &CMatrix) -> Result<KrausSet> {
    let k = a.len();
    if u.shape() != (k, k) {
        return Err(Error::shape(format!(
            "remix matrix is {}x{}, expected {k}x{k}",
            u.nrows(),
            u.ncols()
        )));
    }
    let defect = unitarity_defect(u);
    if defect > 1e-8 {
        return Err(Error::validation(format!(
            "remix matrix not unitary: defect {defect:e}"
        )));
    }
    let operators: Vec<CMatrix> = (0..k)
        .map(|i| {
            let mut b = CMatrix::zeros(a.dim_out(), a.dim_in());
            for j in 0..k {
                b += a.operator(j).scale_complex(u[(j, i)]);
            }
            b
        })
        .collect();
    KrausSet::new(operators)
}

trait ScaleComplex {
    fn scale_complex(&self, c: C64) -> CMatrix;
}

impl ScaleComplex for CMatrix {
    fn scale_complex(&self, c: C64) -> CMatrix {
        self.map(|x| x * c)
    }
}

/// The unraveling that diagonalizes the Gram matrix at `rho`: remix by the
/// eigenvector matrix of `Pi(A|rho)`. Eigenvectors are ordered by ascending
/// eigenvalue with a fixed phase convention, so the output is deterministic;
/// the resulting Gram matrix is diagonal and its diagonal carries the
/// eigenvalues.
pub fn extremal_unraveling(a: &KrausSet, rho: &DensityOperator) -> Result<KrausSet> {
    let pi = pi_matrix(a, rho)?;
    let dec = eigh(pi.matrix())?;
    remix_unraveling(a, &dec.eigenvectors)
}

/// Unified entropy of the effect probabilities of an unraveling at a state
/// (the diagonal of its Gram matrix).
pub fn unraveling_entropy(
    a: &KrausSet,
    rho: &DensityOperator,
    params: &UnifiedParams,
) -> Result<f64> {
    let pi = pi_matrix(a, rho)?;
    Ok(unified_entropy(&pi.diagonal_distribution(), params))
}

/// Uncertainty relation for the extremal unravelings of two channels: the
/// entropy sum of their effect probabilities against the overlap bound of
/// the two effect POVMs. Requires `s*t > 0` or the Shannon point; the Renyi
/// case is excluded because one of the conjugate orders then exceeds one,
/// where the diagonalizing unraveling is no longer extremal.
pub fn two_channel_bound(
    a_ex: &KrausSet,
    b_ex: &KrausSet,
    rho: &DensityOperator,
    pair: &ConjugatePair,
    s: f64,
    t: f64,
) -> Result<BoundReport> {
    if !(s * t > 0.0 || pair.is_shannon()) {
        return Err(Error::domain(
            "two-channel bound needs s*t > 0 (or the Shannon point)".to_string(),
        ));
    }
    let pa = pi_matrix(a_ex, rho)?.diagonal_distribution();
    let pb = pi_matrix(b_ex, rho)?.diagonal_distribution();
    let ea = unified_entropy(&pa, &UnifiedParams::new(pair.alpha(), s)?);
    let eb = unified_entropy(&pb, &UnifiedParams::new(pair.beta(), t)?);
    let g = crate::bounds::g_function(&a_ex.effect_povm()?, &b_ex.effect_povm()?, rho)?;
    let bound = crate::bounds::lemma1_min(g.min(1.0), pair, s, t)?;
    Ok(BoundReport::new(
        "two-channel",
        pair,
        s,
        t,
        ea + eb,
        bound,
    ))
}

use crate::bounds::BoundReport;

/// Depolarizing channel on `dim` dimensions with probability `p`, built from
/// the identity plus the Heisenberg-Weyl shift/clock operators.
pub fn depolarizing(dim: usize, p: f64) -> Result<KrausSet> {
    if dim < 2 {
        return Err(Error::domain("depolarizing channel needs dim >= 2"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("probability must lie in [0, 1], got {p}")));
    }
    let d = dim as f64;
    let shift = CMatrix::from_fn(dim, dim, |i, j| {
        if i == (j + 1) % dim { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
    });
    let clock = CMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            C64::from_polar(1.0, std::f64::consts::TAU * i as f64 / d)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let mut ops = Vec::with_capacity(dim * dim);
    let id_weight = (1.0 - p + p / (d * d)).sqrt();
    ops.push(CMatrix::identity(dim, dim).scale(id_weight));
    let w = (p / (d * d)).sqrt();
    let mut xk = CMatrix::identity(dim, dim);
    for j in 0..dim {
        let mut xz = xk.clone();
        for k in 0..dim {
            if (j, k) != (0, 0) {
                ops.push(xz.scale(w));
            }
            xz *= &clock;
        }
        xk *= &shift;
    }
    KrausSet::new(ops)
}

/// Qubit phase-damping channel with damping parameter `gamma`.
pub fn phase_damping(gamma: f64) -> Result<KrausSet> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::domain(format!("gamma must lie in [0, 1], got {gamma}")));
    }
    let a0 = CMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new((1.0 - gamma).sqrt(), 0.0),
        ],
    );
    let a1 = CMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(gamma.sqrt(), 0.0),
        ],
    );
    KrausSet::new(vec![a0, a1])
}

/// Qubit amplitude-damping channel with decay parameter `gamma`.
pub fn amplitude_damping(gamma: f64) -> Result<KrausSet> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::domain(format!("gamma must lie in [0, 1], got {gamma}")));
    }
    let a0 = CMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new((1.0 - gamma).sqrt(), 0.0),
        ],
    );
    let a1 = CMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(0.0, 0.0),
            C64::new(gamma.sqrt(), 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ],
    );
    KrausSet::new(vec![a0, a1])
}
