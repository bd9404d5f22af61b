//! Every analytic result in this crate is validated against an independent
//! Numerov shooting solver. This example runs the comparison for one
//! parameter set per regime and prints the relative deviations.
//!
//! Run: cargo run --release --example oracle_crosscheck

use tietz_spectra::model::{fit_centrifugal_approx, PotentialParams};
use tietz_spectra::oracle::{numerov_levels, richardson_check, CentrifugalMode, NumerovConfig};
use tietz_spectra::spectra::{
    case1_levels, morse_levels, transcendental_case2_levels, transcendental_case3_levels,
    BoundLevel, RootScanConfig,
};

fn compare(label: &str, analytic: &[BoundLevel], oracle: &[BoundLevel]) {
    println!("{label}: {} analytic vs {} oracle levels", analytic.len(), oracle.len());
    for (a, o) in analytic.iter().zip(oracle) {
        let dev = ((a.energy - o.energy) / o.energy).abs();
        println!(
            "  n_r = {}   analytic {:>14.10}   oracle {:>14.10}   rel dev {:.2e}",
            a.n_r, a.energy, o.energy, dev
        );
    }
}

fn main() {
    // Case1, s waves: the closed form is exact for the walled potential.
    let p = PotentialParams::natural(10.0, 2.0, 1.0, 0.5, 0.5).unwrap();
    let approx = fit_centrifugal_approx(&p).unwrap();
    let cfg = NumerovConfig::for_params(&p);
    let oracle = numerov_levels(&p, 0, &cfg, 8).unwrap();
    compare("Case1 l=0", &case1_levels(&p, 0, &approx).unwrap(), &oracle);

    // Case1, l = 1 on the approximated effective potential.
    let mut cfg_l = NumerovConfig::for_params(&p);
    cfg_l.centrifugal_mode = CentrifugalMode::Approximated;
    let oracle = numerov_levels(&p, 1, &cfg_l, 8).unwrap();
    compare("Case1 l=1 (approximated centrifugal)", &case1_levels(&p, 1, &approx).unwrap(), &oracle);

    // Case2 and Case3 transcendental roots with the chi(0) = 0 wall.
    let p2 = PotentialParams::natural(10.0, 2.0, 1.0, 0.05, 0.5).unwrap();
    let roots = transcendental_case2_levels(&p2, &RootScanConfig::for_params(&p2)).unwrap();
    let oracle = numerov_levels(&p2, 0, &NumerovConfig::for_params(&p2), 8).unwrap();
    compare("Case2", &roots.levels, &oracle);

    let p3 = PotentialParams::natural(10.0, 2.0, 1.0, -0.3, 0.5).unwrap();
    let roots = transcendental_case3_levels(&p3, &RootScanConfig::for_params(&p3)).unwrap();
    let oracle = numerov_levels(&p3, 0, &NumerovConfig::for_params(&p3), 8).unwrap();
    compare("Case3", &roots.levels, &oracle);

    // Morse closed form.
    let pm = PotentialParams::natural(25.0, 10.0, 1.0, 0.0, 0.5).unwrap();
    let oracle = numerov_levels(&pm, 0, &NumerovConfig::for_params(&pm), 8).unwrap();
    compare("Morse", &morse_levels(&pm).unwrap(), &oracle);

    // Grid-convergence diagnostic: Numerov is fourth order, so halving the
    // step should barely move the levels on the default grid.
    let report = richardson_check(&pm, 0, &NumerovConfig::for_params(&pm)).unwrap();
    println!(
        "\nRichardson check (Morse set): max level shift {:.2e} on grid halving across {} levels",
        report.max_shift_rel, report.levels_compared
    );
}
