//! Potential-curve data across the regimes, in the style of the usual
//! shape plots: one column of r against one V column per deformation.
//!
//! Run: cargo run --example potential_scan > curves.csv

use tietz_spectra::model::{classify_regime, potential_eval, PotentialParams};

fn main() {
    // H2 geometry, a representative deformation per regime.
    let b_h = 1.61890;
    let r_e = 0.741;
    let depth = 4.7446; // eV
    let deformations = [-0.5, -0.2, 0.0, 0.2, 0.5];

    let params: Vec<PotentialParams> = deformations
        .iter()
        .map(|&c_h| PotentialParams::molecular(depth, r_e, b_h, c_h, 0.50391).unwrap())
        .collect();
    let start = params
        .iter()
        .map(|p| classify_regime(p).domain_start())
        .fold(0.0_f64, f64::max)
        + 0.02;

    print!("r");
    for c_h in deformations {
        print!(",V(c_h={c_h})");
    }
    println!();
    let stop = r_e + 6.0 / b_h;
    let n = 240;
    for i in 0..=n {
        let r = start + (stop - start) * i as f64 / n as f64;
        print!("{r:.6}");
        for p in &params {
            print!(",{:.8}", potential_eval(p, r).unwrap());
        }
        println!();
    }
}
