//! Sweep results and their tabular serialization.
//!
//! CSV columns are fixed as
//! `scenario,alpha,beta,s,t,entropy_sum,bound,slack,seed`; floats are
//! printed with 17 significant digits so goldens are bit-stable. Fields that
//! do not apply to a row (e.g. the entropy sum of a closed-form bound) are
//! left empty.

use serde::{Deserialize, Serialize};

use crate::bounds::BoundReport;
use crate::error::Result;

/// One result row of a bound or verification sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    pub scenario: String,
    pub alpha: f64,
    pub beta: f64,
    pub s: f64,
    pub t: f64,
    pub entropy_sum: Option<f64>,
    pub bound: f64,
    pub slack: Option<f64>,
    pub seed: Option<u64>,
}

impl SweepRow {
    pub fn from_report(report: &BoundReport, seed: Option<u64>) -> Self {
        SweepRow {
            scenario: report.scenario.clone(),
            alpha: report.alpha,
            beta: report.beta,
            s: report.s,
            t: report.t,
            entropy_sum: Some(report.entropy_sum),
            bound: report.bound,
            slack: Some(report.slack),
            seed,
        }
    }

    /// Row carrying only a closed-form bound.
    pub fn bound_only(
        scenario: impl Into<String>,
        alpha: f64,
        beta: f64,
        s: f64,
        t: f64,
        bound: f64,
    ) -> Self {
        SweepRow {
            scenario: scenario.into(),
            alpha,
            beta,
            s,
            t,
            entropy_sum: None,
            bound,
            slack: None,
            seed: None,
        }
    }
}

/// Ordered collection of sweep rows.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

/// Format a float with 17 significant digits, locale-independent.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

impl SweepResult {
    pub fn new(rows: Vec<SweepRow>) -> Self {
        SweepResult { rows }
    }

    pub fn push(&mut self, row: SweepRow) {
        self.rows.push(row);
    }

    /// Smallest slack over all rows that carry one.
    pub fn min_slack(&self) -> Option<f64> {
        self.rows
            .iter()
            .filter_map(|r| r.slack)
            .min_by(f64::total_cmp)
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("scenario,alpha,beta,s,t,entropy_sum,bound,slack,seed\n");
        for r in &self.rows {
            let opt = |v: &Option<f64>| v.map(fmt_float).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.scenario,
                fmt_float(r.alpha),
                fmt_float(r.beta),
                fmt_float(r.s),
                fmt_float(r.t),
                opt(&r.entropy_sum),
                fmt_float(r.bound),
                opt(&r.slack),
                r.seed.map(|s| s.to_string()).unwrap_or_default(),
            ));
        }
        out
    }

    pub fn to_json_string(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.rows)?;
        s.push('\n');
        Ok(s)
    }
}
