//! Sweep the deformation parameter across its range and watch the problem
//! change character: Rosen-Morse for negative c_h, Morse at zero,
//! half-space Manning-Rosen below e^{-b_h r_e} and the walled
//! Manning-Rosen regime above it.
//!
//! Run: cargo run --example classify_regimes

use tietz_spectra::model::{regime_for, Regime};

fn main() {
    // H2 ground-state geometry from the builtin table.
    let b_h: f64 = 1.61890;
    let r_e: f64 = 0.741;
    let threshold = (-b_h * r_e).exp();
    println!("H2 geometry: b_h = {b_h} 1/A, r_e = {r_e} A");
    println!("Case1/Case2 threshold e^(-b_h r_e) = {threshold:.9}\n");
    println!("{:>8}  {:<6} {:<36} boundary", "c_h", "regime", "character");

    for c_h in [-0.75, -0.3, -0.01, 0.0, 0.05, 0.2, threshold, 0.5, 0.9] {
        let regime = regime_for(b_h, r_e, c_h);
        let boundary = match regime {
            Regime::Case1 { r0 } => format!("wall at r0 = {r0:.6} A"),
            Regime::Case2 { xi0 } => format!("half-space offset xi0 = {xi0:.6}"),
            Regime::Case3 { x0 } => format!("half-space offset x0 = {x0:.6}"),
            Regime::Morse => "none".to_string(),
        };
        println!(
            "{c_h:>8.4}  {:<6} {:<36} {boundary}",
            regime.label(),
            regime.description()
        );
    }
}
