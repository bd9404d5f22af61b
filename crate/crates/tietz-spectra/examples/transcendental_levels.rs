//! Half-space regimes: the spectrum comes from the zeros of a Gauss
//! hypergeometric function of the energy, located by a grid scan plus
//! bisection.
//!
//! Run: cargo run --example transcendental_levels

use tietz_spectra::model::PotentialParams;
use tietz_spectra::spectra::{
    case2_condition, transcendental_case2_levels, transcendental_case3_levels, RootScanConfig,
};

fn main() {
    // Case2: 0 < c_h < e^{-b_h r_e}.
    let p2 = PotentialParams::natural(10.0, 2.0, 1.0, 0.05, 0.5).unwrap();
    let scan = RootScanConfig::for_params(&p2);
    println!(
        "Case2 (c_h = {}): scanning F(E) over ({:.3e}, {:.6}) with {} grid points",
        p2.c_h, scan.e_min, scan.e_max, scan.grid_points
    );
    let outcome = transcendental_case2_levels(&p2, &scan).unwrap();
    for level in &outcome.levels {
        println!(
            "  n_r = {}   E = {:>14.10}   |F|/local swing = {:.2e}",
            level.n_r, level.energy, level.residual
        );
    }
    // The quantization function itself is exposed for plotting.
    let e_probe = 0.5 * (outcome.levels[0].energy + outcome.levels[1].energy);
    println!(
        "  between the first two roots F({e_probe:.4}) = {:.4e}\n",
        case2_condition(&p2, e_probe).unwrap()
    );

    // Case3: -1 < c_h < 0.
    let p3 = PotentialParams::natural(10.0, 2.0, 1.0, -0.3, 0.5).unwrap();
    let scan = RootScanConfig::for_params(&p3);
    println!("Case3 (c_h = {}):", p3.c_h);
    for level in &transcendental_case3_levels(&p3, &scan).unwrap().levels {
        println!(
            "  n_r = {}   E = {:>14.10}   |G|/local swing = {:.2e}",
            level.n_r, level.energy, level.residual
        );
    }
}
