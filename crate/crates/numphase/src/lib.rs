//! numphase — number-phase and two-measurement entropic uncertainty
//! relations in terms of unified (alpha, s)-entropies.
//!
//! The crate builds finite-dimensional quantum states and measurements,
//! evaluates the unified entropy family (containing the Renyi, Tsallis and
//! Shannon entropies) on the generated outcome distributions, and verifies
//! the entropic lower bounds that constrain any pair of measurements: the
//! state-dependent and state-independent two-POVM bounds, the number-phase
//! bounds built on the finite-dimensional phase formalism, the Gaussian
//! multiphoton sharpening, and the bounds for extremal unravelings of
//! quantum channels.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`linalg`] | complex matrices, Hermitian eigendecomposition, spectral norms |
//! | [`states`] | pure states, density operators, Fock/coherent/thermal constructors |
//! | [`measurement`] | POVMs and outcome probabilities |
//! | [`entropy`] | unified (alpha, s)-entropies, conjugate pairs, beta-functionals |
//! | [`density`] | gridded densities, continuous entropies, phase partitions, binning |
//! | [`bounds`] | the bound engine: overlaps, closed forms, the boundary-walk oracle |
//! | [`phase`] | phase bases, the phase operator, exact phase densities, Gaussian pair |
//! | [`channels`] | Kraus sets, Gram matrices, extremal unravelings |
//! | [`random`] | seeded random states, unitaries, measurements, channels |
//! | [`config`] | JSON scenario documents (states, channels, parameter grids) |
//! | [`sweep`] | result rows and bit-stable CSV/JSON export |
//! | [`cli`] | the `bound` / `verify` / `phase` subcommands |
//!
//! Start with the runnable examples: each one demonstrates a major
//! capability end to end (`cargo run --example mub_bounds`, etc.).
//!
//! ```
//! use numphase::entropy::{ConjugatePair, DiscreteDistribution, UnifiedParams, unified_entropy};
//! use numphase::bounds::mub_bound;
//!
//! // entropy sum of complementary measurements on a 4-level system is at
//! // least ln 4 for every admissible parameter choice
//! let pair = ConjugatePair::from_beta(2.0 / 3.0).unwrap();
//! let bound = mub_bound(4, &pair, 1.0, 1.0).unwrap();
//! let uniform = DiscreteDistribution::uniform(4);
//! let deterministic = DiscreteDistribution::deterministic(4, 0).unwrap();
//! let sum = unified_entropy(&uniform, &UnifiedParams::new(pair.alpha(), 1.0).unwrap())
//!     + unified_entropy(&deterministic, &UnifiedParams::new(pair.beta(), 1.0).unwrap());
//! assert!(sum >= bound - 1e-12);
//! ```

pub mod bounds;
pub mod channels;
pub mod cli;
pub mod config;
pub mod density;
pub mod entropy;
pub mod error;
pub mod linalg;
pub mod measurement;
pub mod phase;
pub mod random;
pub mod states;
pub mod sweep;

pub use bounds::BoundReport;
pub use entropy::{ConjugatePair, DiscreteDistribution, UnifiedParams};
pub use error::{Error, Result};
pub use linalg::{C64, CMatrix, CVector};
pub use states::{DensityOperator, PureState};
