//! Seeded random generation of states, unitaries, measurements and channels.
//!
//! Everything here is driven by an explicit `Rng` so verification campaigns
//! are reproducible: the same seed yields the same sweep, byte for byte.

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::channels::KrausSet;
use crate::linalg::{C64, CMatrix, CVector};
use crate::measurement::Povm;
use crate::states::{DensityOperator, PureState};

/// Deterministic generator for a campaign seed.
pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn standard_complex<R: Rng>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im)
}

/// Ginibre matrix: i.i.d. standard complex normal entries.
pub fn ginibre<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| standard_complex(rng))
}

/// Random Hermitian matrix with O(1) entries.
pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> CMatrix {
    let g = ginibre(dim, dim, rng);
    (&g + g.adjoint()).scale(0.5)
}

/// Haar-random pure state.
pub fn random_pure<R: Rng>(dim: usize, rng: &mut R) -> PureState {
    loop {
        let v = CVector::from_fn(dim, |_, _| standard_complex(rng));
        let n = v.norm();
        if n > 1e-6 {
            return PureState::new(v.map(|c| c / C64::new(n, 0.0)))
                .expect("normalized vector is a valid state");
        }
    }
}

/// Random full-rank density operator, `G G^dagger` normalized to unit trace.
pub fn random_density<R: Rng>(dim: usize, rng: &mut R) -> DensityOperator {
    let g = ginibre(dim, dim, rng);
    let psd = &g * g.adjoint();
    let tr: f64 = psd.diagonal().iter().map(|c| c.re).sum();
    DensityOperator::new(psd.scale(1.0 / tr)).expect("normalized Gram matrix is a state")
}

/// Haar-random unitary via QR of a Ginibre matrix with the phases of the
/// R diagonal absorbed into Q.
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> CMatrix {
    let g = ginibre(dim, dim, rng);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase.conj();
        }
    }
    q
}

/// Random projective measurement: rank-one projectors onto the columns of a
/// Haar-random unitary.
pub fn random_projective_povm<R: Rng>(dim: usize, rng: &mut R) -> Povm {
    let u = random_unitary(dim, rng);
    Povm::from_unitary_columns(&u).expect("unitary columns form a projective POVM")
}

/// Random channel with `n_ops` Kraus operators on a `dim`-dimensional space,
/// obtained by slicing a Haar-random isometry.
pub fn random_kraus_set<R: Rng>(dim: usize, n_ops: usize, rng: &mut R) -> KrausSet {
    let g = ginibre(n_ops * dim, dim, rng);
    let qr = g.qr();
    let q = qr.q(); // (n_ops*dim) x dim isometry, Q^dagger Q = I
    let ops: Vec<CMatrix> = (0..n_ops)
        .map(|k| {
            DMatrix::from_fn(dim, dim, |i, j| q[(k * dim + i, j)])
        })
        .collect();
    KrausSet::new(ops).expect("isometry blocks satisfy the completeness relation")
}
