//! Property-based invariants over randomized parameter draws.

use proptest::prelude::*;
use tietz_spectra::model::{
    classify_regime, deformed_hyperbolic, potential_eval, potential_eval_deformed, DeformedKind,
    PotentialParams, Regime,
};
use tietz_spectra::moldb::parse_molecules;
use tietz_spectra::specfun::{gauss_2f1, log_gamma, SeriesControl};

proptest! {
    /// Arai's deformed functions obey cosh_q^2 - sinh_q^2 = q.
    #[test]
    fn deformed_pythagorean_identity(q in 1e-3..1.0_f64, x in -5.0..5.0_f64) {
        let s = deformed_hyperbolic(DeformedKind::Sinh, q, x).unwrap();
        let c = deformed_hyperbolic(DeformedKind::Cosh, q, x).unwrap();
        let lhs = c * c - s * s;
        prop_assert!((lhs - q).abs() <= 1e-12 * q.max(c * c));
    }

    /// The direct potential and its deformed-hyperbolic representation are
    /// the same function.
    #[test]
    fn potential_forms_agree(
        depth in 0.5..30.0_f64,
        r_e in 0.5..3.0_f64,
        b_h in 0.4..3.0_f64,
        c_mag in 0.02..0.95_f64,
        negative in proptest::bool::ANY,
        frac in 0.001..0.999_f64,
    ) {
        let c_h = if negative { -c_mag } else { c_mag };
        let p = PotentialParams::natural(depth, r_e, b_h, c_h, 0.5).unwrap();
        let start = classify_regime(&p).domain_start();
        let r = start + 1e-3 + frac * (r_e + 8.0 / b_h - start);
        let direct = potential_eval(&p, r).unwrap();
        let deformed = potential_eval_deformed(&p, r).unwrap();
        prop_assert!((direct - deformed).abs() <= 1e-12 * depth.max(direct.abs()));
    }

    /// ln Gamma(x+1) = ln Gamma(x) + ln x.
    #[test]
    fn log_gamma_recurrence(x in 0.1..100.0_f64) {
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-13, "gap {:e} at x = {x}", (lhs - rhs).abs());
    }

    /// Terminating 2F1 polynomials match an independent binomial-sum
    /// evaluation.
    #[test]
    fn terminating_series_matches_binomial_sum(
        n in 0usize..8,
        b in 0.3..20.0_f64,
        c in 0.7..15.0_f64,
        z in 0.0..0.95_f64,
    ) {
        let implemented = gauss_2f1(-(n as f64), b, c, z, &SeriesControl::default()).unwrap();
        // Direct Horner-free sum of (-n)_k (b)_k / ((c)_k k!) z^k.
        let mut reference = 0.0_f64;
        let mut coeff = 1.0_f64;
        for k in 0..=n {
            reference += coeff;
            let kf = k as f64;
            coeff *= (kf - n as f64) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        }
        prop_assert!(
            (implemented - reference).abs() <= 1e-12 * reference.abs().max(1.0),
            "poly mismatch at n={n} b={b} c={c} z={z}"
        );
    }

    /// Classification is a partition: exactly one regime per valid c_h,
    /// with the documented boundary quantities.
    #[test]
    fn classification_partitions_the_deformation_axis(
        r_e in 0.5..3.0_f64,
        b_h in 0.4..3.0_f64,
        c_h in -0.999..0.999_f64,
    ) {
        let p = PotentialParams::natural(1.0, r_e, b_h, c_h, 0.5).unwrap();
        let threshold = (-b_h * r_e).exp();
        match classify_regime(&p) {
            Regime::Case1 { r0 } => {
                prop_assert!(c_h >= threshold && c_h < 1.0);
                prop_assert!(r0 >= -1e-12);
            }
            Regime::Case2 { xi0 } => {
                prop_assert!(c_h > 0.0 && c_h < threshold);
                prop_assert!(xi0 > 0.0);
            }
            Regime::Case3 { .. } => prop_assert!(c_h < 0.0),
            Regime::Morse => prop_assert!(c_h == 0.0),
        }
    }

    /// Number parsing survives decimal commas and digit grouping.
    #[test]
    fn molecule_numbers_parse_with_grouping(value in 0.001..9999.0_f64) {
        let plain = format!("{value:.6}");
        let grouped = {
            // Inject a space into the digits when long enough.
            let mut s = plain.replace('.', ",");
            if s.len() > 4 {
                s.insert(2, ' ');
            }
            s
        };
        let text = format!("name: T2\nb_h: {plain}\nr_e: {grouped}\n");
        let records = parse_molecules(&text).unwrap();
        prop_assert!((records[0].b_h - value).abs() <= 1e-6 * value);
        prop_assert!((records[0].r_e - value).abs() <= 1e-6 * value);
    }
}
