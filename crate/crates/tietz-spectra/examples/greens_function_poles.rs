//! The Case1 radial Green's function: finite between bound energies,
//! divergent at them. The returned value drops the constant -2i mu /
//! (hbar b_h), so pole locations and ratios are what matters.
//!
//! Run: cargo run --example greens_function_poles

use tietz_spectra::model::{fit_centrifugal_approx, PotentialParams};
use tietz_spectra::spectra::{case1_green_function, case1_levels};

fn main() {
    let p = PotentialParams::natural(10.0, 2.0, 1.0, 0.5, 0.5).unwrap();
    let approx = fit_centrifugal_approx(&p).unwrap();
    let levels = case1_levels(&p, 0, &approx).unwrap();
    let (e0, e1) = (levels[0].energy, levels[1].energy);
    println!("bound levels: E0 = {e0:.8}, E1 = {e1:.8}");

    let r1 = p.r_e + 0.3;
    let r2 = p.r_e + 0.9;
    println!("\nG(r1, r2; E) along the energy axis (r1 = {r1}, r2 = {r2}):");
    for frac in [0.2, 0.5, 0.9, 0.99, 0.999] {
        let e = e0 + frac * (e1 - e0);
        let g = case1_green_function(&p, 0, r1, r2, e, &approx).unwrap();
        println!("  E = E0 + {frac:>6.3} (E1-E0)   G = {g:>14.6e}");
    }
    println!("  (the divergence as E -> E1 is the spectral pole)");

    // Approaching E0 from below shows the same pole from the other side.
    for offset in [1e-2, 1e-4, 1e-6] {
        let e = e0 - offset * p.well_depth;
        let g = case1_green_function(&p, 0, r1, r2, e, &approx).unwrap();
        println!("  E = E0 - {offset:.0e} D       G = {g:>14.6e}");
    }
}
