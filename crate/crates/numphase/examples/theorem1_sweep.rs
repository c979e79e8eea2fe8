//! State-dependent vs state-independent two-measurement bounds.
//!
//! For random projective measurement pairs the state-dependent overlap
//! g(M,N|rho) never exceeds the state-independent majorant f_bar(M,N), so
//! the state-dependent bound is always at least as tight. Both stay below
//! the entropy sum.
//!
//! Run with: cargo run --example theorem1_sweep

use numphase::bounds::{f_bar, g_function, theorem1_bound, theorem1_bound_state_independent};
use numphase::entropy::ConjugatePair;
use numphase::random::{random_density, random_projective_povm, random_pure, rng_from_seed};

fn main() {
    let mut rng = rng_from_seed(7);
    let dim = 4;
    let pair = ConjugatePair::from_beta(2.0 / 3.0).unwrap();
    let (s, t) = (1.0, 1.0);

    println!("dim {dim}, Tsallis orders (alpha, beta) = (2, 2/3)");
    println!(
        "{:>5} {:>5} {:>10} {:>10} {:>12} {:>14} {:>14}",
        "trial", "mixed", "g", "f_bar", "entropy_sum", "bound(g)", "bound(f_bar)"
    );
    let mut worst_slack = f64::INFINITY;
    for trial in 0..12 {
        let mixed = trial % 2 == 1;
        let rho = if mixed {
            random_density(dim, &mut rng)
        } else {
            random_pure(dim, &mut rng).density()
        };
        let m = random_projective_povm(dim, &mut rng);
        let n = random_projective_povm(dim, &mut rng);
        let g = g_function(&m, &n, &rho).unwrap();
        let fb = f_bar(&m, &n).unwrap();
        let dep = theorem1_bound(&m, &n, &rho, &pair, s, t).unwrap();
        let indep = theorem1_bound_state_independent(&m, &n, &rho, &pair, s, t).unwrap();
        worst_slack = worst_slack.min(dep.slack.min(indep.slack));
        println!(
            "{trial:>5} {:>5} {:>10.6} {:>10.6} {:>12.6} {:>14.6} {:>14.6}",
            mixed, g, fb, dep.entropy_sum, dep.bound, indep.bound
        );
        assert!(g <= fb + 1e-10, "overlap hierarchy violated");
        assert!(indep.bound <= dep.bound + 1e-12, "bound hierarchy violated");
    }
    println!();
    println!("worst slack over the sweep: {worst_slack:+.6e} (must stay above -1e-9)");
}
