//! Normalized bound-state wave functions: analytic normalization in Case1,
//! quadrature normalization elsewhere, node structure, orthogonality.
//!
//! Run: cargo run --example wavefunctions

use tietz_spectra::model::{fit_centrifugal_approx, PotentialParams};
use tietz_spectra::spectra::{transcendental_case3_levels, RootScanConfig};
use tietz_spectra::wavefn::{overlap, Wavefunction};

fn main() {
    let p = PotentialParams::natural(10.0, 2.0, 1.0, 0.5, 0.5).unwrap();
    let approx = fit_centrifugal_approx(&p).unwrap();

    println!("Case1 ground and first excited state (l = 0):");
    let ground = Wavefunction::case1(&p, 0, 0, &approx).unwrap();
    let excited = Wavefunction::case1(&p, 0, 1, &approx).unwrap();
    println!(
        "  analytic N = {:.10}, quadrature N = {:.10}",
        ground.analytic_norm_constant().unwrap(),
        ground.quadrature_norm_constant().unwrap()
    );
    println!(
        "  <0|0> = {:.10},  <1|1> = {:.10},  <0|1> = {:+.2e}",
        overlap(&ground, &ground).unwrap(),
        overlap(&excited, &excited).unwrap(),
        overlap(&ground, &excited).unwrap()
    );

    println!("\n  sampled chi (r0 = {:.4}):", ground.domain_start());
    println!("  {:>8}  {:>13}  {:>13}", "r", "chi_0", "chi_1");
    for i in 0..=12 {
        let r = ground.domain_start() + 0.02 + i as f64 * 0.5;
        println!(
            "  {r:>8.3}  {:>13.6e}  {:>13.6e}",
            ground.eval(r).unwrap(),
            excited.eval(r).unwrap()
        );
    }

    // A Case3 state from the transcendental spectrum.
    let p3 = PotentialParams::natural(10.0, 2.0, 1.0, -0.3, 0.5).unwrap();
    let scan = RootScanConfig::for_params(&p3);
    let levels = transcendental_case3_levels(&p3, &scan).unwrap().levels;
    let wf = Wavefunction::case3(&p3, &levels[1]).unwrap();
    println!(
        "\nCase3 n_r = 1 at E = {:.8}: chi(1e-6) = {:.2e} (wall), peak |chi| = {:.4}",
        wf.level().energy,
        wf.eval(1e-6).unwrap(),
        wf.peak_abs()
    );
}
