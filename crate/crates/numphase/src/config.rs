//! JSON-backed scenario configuration: state and channel specifications,
//! entropy parameter grids, and the top-level document consumed by the CLI.

use serde::{Deserialize, Serialize};

use crate::channels::{amplitude_damping, depolarizing, phase_damping, KrausSet};
use crate::entropy::ConjugatePair;
use crate::error::{Error, Result};
use crate::linalg::{C64, CMatrix};
use crate::random::{random_kraus_set, random_pure, rng_from_seed};
use crate::states::{
    coherent_state, default_coherent_dim, default_thermal_dim, thermal_state, DensityOperator,
    PureState,
};

/// Complex matrix in wire form: `entries[i][j] = [re, im]`.
pub type MatrixJson = Vec<Vec<[f64; 2]>>;

pub(crate) fn matrix_from_json(entries: &MatrixJson) -> Result<CMatrix> {
    let rows = entries.len();
    if rows == 0 {
        return Err(Error::config("matrix must have at least one row"));
    }
    let cols = entries[0].len();
    if entries.iter().any(|r| r.len() != cols) {
        return Err(Error::config("matrix rows have inconsistent lengths"));
    }
    Ok(CMatrix::from_fn(rows, cols, |i, j| {
        C64::new(entries[i][j][0], entries[i][j][1])
    }))
}

pub(crate) fn matrix_to_json(m: &CMatrix) -> MatrixJson {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

/// State specification record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StateSpec {
    /// Number state `|n>`; default truncation `n + 1`.
    Fock {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
    },
    /// Coherent state with amplitude `z_re + i z_im`; default truncation by
    /// the Poisson tail rule.
    Coherent {
        z_re: f64,
        z_im: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
    },
    /// Thermal state; default truncation by the geometric tail rule.
    Thermal {
        nbar: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
    },
    /// Haar-random pure state drawn from the given seed.
    Random { seed: u64, dim: usize },
    /// Explicit density matrix.
    Matrix { entries: MatrixJson },
}

impl StateSpec {
    pub fn coherent(z: C64) -> Self {
        StateSpec::Coherent {
            z_re: z.re,
            z_im: z.im,
            dim: None,
        }
    }

    /// Materialize the density operator with the spec's own truncation.
    pub fn build(&self) -> Result<DensityOperator> {
        self.build_with_dim(None)
    }

    /// Materialize with an explicit truncation override.
    pub fn build_with_dim(&self, dim_override: Option<usize>) -> Result<DensityOperator> {
        match self {
            StateSpec::Fock { n, dim } => {
                let d = dim_override.or(*dim).unwrap_or(n + 1);
                Ok(PureState::fock(d, *n)?.density())
            }
            StateSpec::Coherent { z_re, z_im, dim } => {
                let z = C64::new(*z_re, *z_im);
                let d = dim_override.or(*dim).unwrap_or_else(|| default_coherent_dim(z));
                Ok(coherent_state(z, d)?.density())
            }
            StateSpec::Thermal { nbar, dim } => {
                let d = dim_override
                    .or(*dim)
                    .unwrap_or_else(|| default_thermal_dim(*nbar));
                thermal_state(*nbar, d)
            }
            StateSpec::Random { seed, dim } => {
                let d = dim_override.unwrap_or(*dim);
                let mut rng = rng_from_seed(*seed);
                Ok(random_pure(d, &mut rng).density())
            }
            StateSpec::Matrix { entries } => {
                let m = matrix_from_json(entries)?;
                DensityOperator::new(m)
            }
        }
    }
}

/// Channel specification record, either explicit Kraus operators or a named
/// preset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChannelSpec {
    Kraus { operators: Vec<MatrixJson> },
    Depolarizing { dim: usize, p: f64 },
    PhaseDamping { gamma: f64 },
    AmplitudeDamping { gamma: f64 },
    Random { seed: u64, dim: usize, n_ops: usize },
}

impl ChannelSpec {
    pub fn build(&self) -> Result<KrausSet> {
        match self {
            ChannelSpec::Kraus { operators } => {
                let ops = operators
                    .iter()
                    .map(matrix_from_json)
                    .collect::<Result<Vec<_>>>()?;
                KrausSet::new(ops)
            }
            ChannelSpec::Depolarizing { dim, p } => depolarizing(*dim, *p),
            ChannelSpec::PhaseDamping { gamma } => phase_damping(*gamma),
            ChannelSpec::AmplitudeDamping { gamma } => amplitude_damping(*gamma),
            ChannelSpec::Random { seed, dim, n_ops } => {
                let mut rng = rng_from_seed(*seed);
                Ok(random_kraus_set(*dim, *n_ops, &mut rng))
            }
        }
    }

    /// Serialize a Kraus set into an explicit spec.
    pub fn from_kraus(ks: &KrausSet) -> Self {
        ChannelSpec::Kraus {
            operators: ks.operators().iter().map(matrix_to_json).collect(),
        }
    }
}

/// One conjugate parameter quadruple `(alpha, beta, s, t)`. `alpha` may be
/// omitted and is then derived from `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    pub beta: f64,
    pub s: f64,
    pub t: f64,
}

impl ParamSpec {
    pub fn new(beta: f64, s: f64, t: f64) -> Self {
        ParamSpec {
            alpha: None,
            beta,
            s,
            t,
        }
    }

    pub fn resolve(&self) -> Result<(ConjugatePair, f64, f64)> {
        let pair = match self.alpha {
            Some(alpha) => ConjugatePair::new(alpha, self.beta)
                .map_err(|e| Error::config(format!("params: {e}")))?,
            None => ConjugatePair::from_beta(self.beta)
                .map_err(|e| Error::config(format!("params: {e}")))?,
        };
        Ok((pair, self.s, self.t))
    }
}

/// Standalone entropy parameters `(alpha, s)` for single-channel
/// extremality campaigns (not constrained to a conjugate pair).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntropyParamSpec {
    pub alpha: f64,
    pub s: f64,
}

/// Output format for sweep results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Top-level configuration document. Which fields are required depends on
/// the scenario; validation errors name the missing field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    /// Scenario tag, e.g. "mub", "angle", "pb-partition", "multiphoton",
    /// "theorem1", "theorem2", "theorem3", "lemma1-oracle", "extremality",
    /// "two-channel", "norm-finite", "norm-continuous".
    pub scenario: String,
    /// RNG seed; required by every randomized command.
    pub seed: Option<u64>,
    /// Number of randomized trials per scenario row.
    pub trials: Option<usize>,
    /// Conjugate parameter grid.
    pub params: Vec<ParamSpec>,
    /// Standalone entropy parameters (extremality campaigns).
    pub entropy_params: Vec<EntropyParamSpec>,
    /// Single dimension (e.g. the MUB dimension `N`).
    pub dim: Option<usize>,
    /// Several dimensions for campaigns sweeping over them.
    pub dims: Vec<usize>,
    /// Equal-bin count for partition scenarios.
    pub bins: Option<usize>,
    /// Explicit maximal bin width (angle/multiphoton scenarios).
    pub delta: Option<f64>,
    /// Explicit partition edges (overrides `bins`).
    pub partition: Option<crate::density::PhasePartition>,
    /// State under study.
    pub state: Option<StateSpec>,
    /// Several states (phase command).
    pub states: Vec<StateSpec>,
    /// Channel under study.
    pub channel: Option<ChannelSpec>,
    /// Channel pair (two-channel campaigns).
    pub channels: Vec<ChannelSpec>,
    /// Phase-density grid resolution.
    pub grid: Option<usize>,
    /// Truncation override for state builders.
    pub truncation: Option<usize>,
    /// Overlap values for the closed-form-vs-oracle comparison.
    pub g_values: Vec<f64>,
    /// Number of Kraus operators for random channels.
    pub kraus_ops: Option<usize>,
    /// Random remixings per extremality trial.
    pub remixes: Option<usize>,
    /// Output file path.
    pub out: Option<std::path::PathBuf>,
    /// Output format.
    pub format: Option<OutputFormat>,
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::config(e.to_string()))
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn require_seed(&self) -> Result<u64> {
        self.seed.ok_or_else(|| {
            Error::config("randomized command requires a 'seed' (field or --seed)".to_string())
        })
    }

    pub fn require_params(&self) -> Result<&[ParamSpec]> {
        if self.params.is_empty() {
            return Err(Error::config(
                "scenario requires a non-empty 'params' list".to_string(),
            ));
        }
        Ok(&self.params)
    }

    pub fn require_dim(&self, what: &str) -> Result<usize> {
        self.dim
            .ok_or_else(|| Error::config(format!("scenario '{}' requires 'dim'", what)))
    }

    /// Resolve the partition: explicit edges win, then equal bins.
    pub fn resolve_partition(&self) -> Result<crate::density::PhasePartition> {
        if let Some(p) = &self.partition {
            return Ok(p.clone());
        }
        match self.bins {
            Some(m) => crate::density::PhasePartition::equal_bins(m),
            None => Err(Error::config(
                "scenario requires 'bins' or explicit 'partition' edges".to_string(),
            )),
        }
    }

    /// Resolve the maximal bin width for closed-form bound scenarios.
    pub fn resolve_delta(&self) -> Result<f64> {
        if let Some(d) = self.delta {
            return Ok(d);
        }
        if let Some(p) = &self.partition {
            return Ok(p.max_width());
        }
        if let Some(m) = self.bins {
            if m == 0 {
                return Err(Error::config("'bins' must be positive"));
            }
            return Ok(std::f64::consts::TAU / m as f64);
        }
        Err(Error::config(
            "scenario requires 'delta', 'bins' or 'partition'".to_string(),
        ))
    }
}
