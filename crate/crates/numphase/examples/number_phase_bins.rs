//! Binned number-phase uncertainty relations.
//!
//! The phase of a truncated state is discretized into a partition of
//! [0, 2 pi]; the entropy of the bin distribution plus the entropy of the
//! number distribution stays above (1/nu) ln_mu((2 pi / max_width)^nu). A
//! Fock state saturates the Shannon form exactly: flat phase in M equal
//! bins plus a deterministic photon number.
//!
//! Run with: cargo run --example number_phase_bins

use numphase::config::StateSpec;
use numphase::density::PhasePartition;
use numphase::entropy::ConjugatePair;
use numphase::linalg::C64;
use numphase::phase::{theorem2_check, NumberPhaseScenario};

fn main() -> numphase::Result<()> {
    let shannon = ConjugatePair::shannon();
    let tsallis = ConjugatePair::from_beta(2.0 / 3.0)?;

    println!("Fock |3>, equal partitions, Shannon entropies (saturating):");
    for m in [4usize, 8, 16] {
        let scn = NumberPhaseScenario::new(
            StateSpec::Fock { n: 3, dim: Some(16) },
            PhasePartition::equal_bins(m)?,
        );
        let report = theorem2_check(&scn, &shannon, 0.0, 0.0)?;
        println!(
            "  M = {m:>2}: sum = {:.9}, bound = ln(M) = {:.9}, slack = {:+.2e}",
            report.entropy_sum, report.bound, report.slack
        );
    }

    println!();
    println!("coherent z = 2, Tsallis pair (2, 2/3), s = t = 1:");
    for m in [4usize, 8, 16, 32] {
        let scn = NumberPhaseScenario::new(
            StateSpec::coherent(C64::new(2.0, 0.0)),
            PhasePartition::equal_bins(m)?,
        );
        let report = theorem2_check(&scn, &tsallis, 1.0, 1.0)?;
        println!(
            "  M = {m:>2}: sum = {:.6}, bound = {:.6}, slack = {:+.6}",
            report.entropy_sum, report.bound, report.slack
        );
    }

    println!();
    println!("random truncated state (dim 24), Renyi pair, uneven partition:");
    let edges = vec![
        0.0,
        0.4,
        1.1,
        2.0,
        std::f64::consts::PI,
        4.4,
        5.5,
        std::f64::consts::TAU,
    ];
    let scn = NumberPhaseScenario::new(
        StateSpec::Random { seed: 5, dim: 24 },
        PhasePartition::new(edges)?,
    );
    for beta in [0.6, 0.75, 0.9] {
        let pair = ConjugatePair::from_beta(beta)?;
        let report = theorem2_check(&scn, &pair, 0.0, 0.0)?;
        println!(
            "  beta = {beta}: sum = {:.6}, bound = {:.6}, slack = {:+.6}",
            report.entropy_sum, report.bound, report.slack
        );
    }
    Ok(())
}
