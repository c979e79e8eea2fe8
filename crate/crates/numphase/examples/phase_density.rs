//! Phase densities of standard quantum-optics states.
//!
//! Number-diagonal states (Fock, thermal) carry a completely flat phase
//! density 1/(2 pi); coherent states concentrate around the coherent phase,
//! approaching the Gaussian approximation as |z| grows. Writes plot-ready
//! CSV files to the working directory.
//!
//! Run with: cargo run --example phase_density

use numphase::density::DEFAULT_GRID;
use numphase::linalg::C64;
use numphase::phase::{coherent_gaussian_tv, phase_density, phase_density_window};
use numphase::states::{coherent_state, default_coherent_dim, thermal_state, PureState};

fn main() -> numphase::Result<()> {
    let tau = std::f64::consts::TAU;

    let fock = PureState::fock(6, 5)?.density();
    let flat = phase_density(&fock, 1024)?;
    println!(
        "Fock |5>:        P(theta) in [{:.10}, {:.10}], 1/(2 pi) = {:.10}",
        flat.values().iter().cloned().fold(f64::INFINITY, f64::min),
        flat.values().iter().cloned().fold(0.0f64, f64::max),
        1.0 / tau
    );

    let thermal = thermal_state(1.0, 45)?;
    let flat = phase_density(&thermal, 1024)?;
    println!(
        "thermal nbar=1:  P(theta) in [{:.10}, {:.10}]",
        flat.values().iter().cloned().fold(f64::INFINITY, f64::min),
        flat.values().iter().cloned().fold(0.0f64, f64::max),
    );

    println!();
    println!("coherent states, window centered on the coherent phase:");
    for r in [1.0, 3.0, 10.0] {
        let z = C64::new(r, 0.0);
        let dim = default_coherent_dim(z);
        let psi = coherent_state(z, dim)?;
        let density = phase_density_window(
            &psi.density(),
            DEFAULT_GRID.max(2 * dim + 2),
            -std::f64::consts::PI,
        )?;
        let peak = density.values().iter().cloned().fold(0.0f64, f64::max);
        let path = format!("coherent_z{r}_density.csv");
        let mut csv = String::from("theta,p\n");
        for (&theta, &p) in density.grid().iter().zip(density.values()) {
            csv.push_str(&format!("{theta:.10e},{p:.10e}\n"));
        }
        std::fs::write(&path, csv)?;
        print!("  |z| = {r:>4}: dim {dim:>4}, peak {peak:>9.5}, wrote {path}");
        if r >= 3.0 {
            let tv = coherent_gaussian_tv(z, DEFAULT_GRID)?;
            print!(", TV to Gaussian = {tv:.3e}");
        }
        println!();
    }
    Ok(())
}
