//! The bound engine's core minimum: closed form against the boundary walk.
//!
//! The entropy-sum bound comes from minimizing
//! h(xi, zeta) = (xi^s - 1)/((1-alpha)s) + (zeta^t - 1)/((1-beta)t)
//! over the region cut out by the norm inequality. The closed form picks the
//! right corner of the boundary depending on the sign of the indices; the
//! brute-force walk samples the whole boundary and must land on the same
//! value.
//!
//! Run with: cargo run --example lemma1_minimum

use numphase::bounds::{brute_force_h_min, lemma1_min, select_mu_nu};
use numphase::entropy::ConjugatePair;

fn main() {
    println!(
        "{:>6} {:>7} {:>6} {:>6} {:>5} {:>14} {:>14} {:>10}",
        "beta", "alpha", "s", "t", "g", "closed", "boundary", "|diff|"
    );
    let mut worst = 0.0f64;
    for beta in [0.55, 0.6, 0.75, 0.9] {
        let pair = ConjugatePair::from_beta(beta).unwrap();
        for (s, t) in [(1.0, 1.0), (2.0, 0.5), (-1.0, -1.0), (-0.5, -2.0)] {
            for g in [0.2, 0.5, 0.9] {
                let closed = lemma1_min(g, &pair, s, t).unwrap();
                let brute = brute_force_h_min(g, &pair, s, t, 4096).unwrap();
                let diff = (closed - brute).abs();
                worst = worst.max(diff);
                println!(
                    "{:>6.2} {:>7.3} {:>6.1} {:>6.1} {:>5.1} {:>14.9} {:>14.9} {:>10.2e}",
                    beta,
                    pair.alpha(),
                    s,
                    t,
                    g,
                    closed,
                    brute,
                    diff
                );
            }
        }
    }
    println!();
    println!("worst agreement over the grid: {worst:.3e}");

    // the effective order/index selection behind the closed form
    println!();
    let pair = ConjugatePair::from_beta(2.0 / 3.0).unwrap();
    for (s, t) in [(1.0, 1.0), (-1.0, -1.0), (0.0, 0.0)] {
        let mn = select_mu_nu(&pair, s, t).unwrap();
        println!(
            "orders (2, 2/3), indices ({s}, {t}) -> mu = {:.4}, nu = {:.1}",
            mn.mu, mn.nu
        );
    }
}
