//! The builtin molecule records and the derived minimal deformation
//! e^{-b_h r_e}, plus a molecular-units spectrum for a user-supplied well
//! depth and reduced mass.
//!
//! Run: cargo run --example molecule_table

use tietz_spectra::model::{fit_centrifugal_approx, PotentialParams};
use tietz_spectra::moldb::builtin_molecules;
use tietz_spectra::spectra::case1_levels;

fn main() {
    println!(
        "{:<20} {:>10} {:>8} {:>14}",
        "molecule", "b_h (1/A)", "r_e (A)", "minimal c_h"
    );
    for record in builtin_molecules() {
        println!(
            "{:<20} {:>10.6} {:>8.3} {:>14.9}",
            record.name,
            record.b_h,
            record.r_e,
            record.c_h_min()
        );
    }

    // Energy levels need D and mu, which the table does not carry: supply
    // them explicitly. H2: D = 4.7446 eV, mu = 0.50391 amu, c_h just above
    // the minimal value so the closed form applies.
    let h2 = &builtin_molecules()[3];
    let c_h = 1.2 * h2.c_h_min();
    let p = PotentialParams::molecular(4.7446, h2.r_e, h2.b_h, c_h, 0.50391).unwrap();
    let approx = fit_centrifugal_approx(&p).unwrap();
    println!(
        "\n{} at c_h = {c_h:.6}, D = {} eV, mu = {} amu (hbar^2/2mu = {:.6e} eV A^2):",
        h2.name, p.well_depth, p.mu, p.hbar2_over_2mu
    );
    for level in case1_levels(&p, 0, &approx).unwrap().iter().take(6) {
        println!("  n_r = {:>2}   E = {:>10.6} eV", level.n_r, level.energy);
    }
}
