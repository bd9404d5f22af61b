//! The c_h -> 0 limit: Case3 spectra collapse onto the Morse closed form.
//!
//! Run: cargo run --example morse_limit

use tietz_spectra::model::PotentialParams;
use tietz_spectra::spectra::{morse_levels, transcendental_case3_levels, RootScanConfig};

fn main() {
    let morse = PotentialParams::natural(10.0, 2.0, 1.0, 0.0, 0.5).unwrap();
    let reference = morse_levels(&morse).unwrap();
    println!("Morse spectrum (D = 10, beta = 1, natural units):");
    for level in &reference {
        println!("  n_r = {}   E = {:>13.9}", level.n_r, level.energy);
    }

    println!("\nCase3 ground state as |c_h| shrinks:");
    println!("{:>10}  {:>14}  {:>12}", "c_h", "E_0", "|dev from Morse|");
    for magnitude in [0.3, 0.1, 0.03, 0.01, 0.003, 0.001] {
        let p = PotentialParams::natural(10.0, 2.0, 1.0, -magnitude, 0.5).unwrap();
        let scan = RootScanConfig::for_params(&p);
        let roots = transcendental_case3_levels(&p, &scan).unwrap().levels;
        let dev = (roots[0].energy - reference[0].energy).abs();
        println!("{:>10.3e}  {:>14.10}  {:>12.3e}", -magnitude, roots[0].energy, dev);
    }
}
