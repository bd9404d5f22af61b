//! The Case1 closed-form spectrum: vibration-rotation levels from the
//! pole condition M1 - L_E = -n_r, including the l-dressed constants from
//! the exponential centrifugal replacement.
//!
//! Run: cargo run --example closed_form_levels

use tietz_spectra::model::{fit_centrifugal_approx, PotentialParams};
use tietz_spectra::spectra::{case1_level_count, case1_levels};

fn main() {
    // Natural units: hbar = 1 and mu = 1/2, so hbar^2/2mu = 1.
    let p = PotentialParams::natural(10.0, 2.0, 1.0, 0.5, 0.5).unwrap();
    let approx = fit_centrifugal_approx(&p).unwrap();
    println!(
        "D = {}, r_e = {}, b_h = {}, c_h = {} (natural units)",
        p.well_depth, p.r_e, p.b_h, p.c_h
    );
    println!(
        "centrifugal replacement: C0 = {:.6}, B0 = {:.6}, A0 = {:.6}\n",
        approx.c0, approx.b0, approx.a0
    );

    for l in 0..=2 {
        let count = case1_level_count(&p, l, &approx).unwrap();
        println!("l = {l}: {count} bound level(s)");
        for level in case1_levels(&p, l, &approx).unwrap() {
            println!(
                "  n_r = {}   E = {:>14.10}   pole residual = {:.2e}",
                level.n_r, level.energy, level.residual
            );
        }
    }
}
