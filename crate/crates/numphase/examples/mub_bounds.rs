//! Complementary observables on an N-level system: the number basis and its
//! discrete-Fourier partner are mutually unbiased, the state-independent
//! overlap is exactly 1/sqrt(N), and the entropy sum of the two outcome
//! distributions is bounded by (1/nu) ln_mu(N^nu) for every admissible
//! (alpha, s) choice.
//!
//! Run with: cargo run --example mub_bounds

use numphase::bounds::{f_bar, mub_bound, theorem1_bound};
use numphase::entropy::ConjugatePair;
use numphase::measurement::Povm;
use numphase::random::{random_pure, rng_from_seed};
use numphase::states::PureState;

fn main() {
    let dim = 4;
    let number = Povm::number_basis(dim);
    let fourier = Povm::dft_basis(dim);

    let fb = f_bar(&number, &fourier).unwrap();
    println!("dim {dim}: f_bar = {fb:.12} (exact 1/sqrt(N) = {:.12})", 0.5);
    println!();

    println!("closed-form bounds (1/nu) ln_mu(N^nu):");
    println!("{:>6} {:>6} {:>6} {:>6} {:>12}", "alpha", "beta", "s", "t", "bound");
    for (beta, s, t) in [
        (1.0, 0.0, 0.0),   // Shannon
        (2.0 / 3.0, 0.0, 0.0), // Renyi pair (2, 2/3)
        (2.0 / 3.0, 1.0, 1.0), // Tsallis pair
        (2.0 / 3.0, -1.0, -1.0),
        (0.75, 2.0, 0.5),
    ] {
        let pair = ConjugatePair::from_beta(beta).unwrap();
        let bound = mub_bound(dim, &pair, s, t).unwrap();
        println!(
            "{:>6.3} {:>6.3} {:>6.1} {:>6.1} {:>12.8}",
            pair.alpha(),
            pair.beta(),
            s,
            t,
            bound
        );
    }

    // a number-basis state saturates the Shannon bound: one distribution is
    // deterministic, the other uniform
    println!();
    let fock = PureState::fock(dim, 1).unwrap().density();
    let report = theorem1_bound(
        &number,
        &fourier,
        &fock,
        &ConjugatePair::shannon(),
        0.0,
        0.0,
    )
    .unwrap();
    println!(
        "number state |1>: entropy sum = {:.9}, bound = {:.9}, slack = {:+.2e} (saturated)",
        report.entropy_sum, report.bound, report.slack
    );

    // random states keep a strictly positive slack
    let mut rng = rng_from_seed(1);
    println!();
    println!("random pure states, Tsallis pair (2, 2/3):");
    let pair = ConjugatePair::from_beta(2.0 / 3.0).unwrap();
    for k in 0..5 {
        let rho = random_pure(dim, &mut rng).density();
        let report = theorem1_bound(&number, &fourier, &rho, &pair, 1.0, 1.0).unwrap();
        println!(
            "  state {k}: sum = {:.6}, bound = {:.6}, slack = {:+.6}",
            report.entropy_sum, report.bound, report.slack
        );
    }
}
