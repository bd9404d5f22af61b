//! Adaptive quadrature for the normalization and overlap integrals.
//!
//! The integrands here are smooth and decay exponentially, so composite
//! adaptive Simpson with a pilot estimate is plenty.

/// Adaptive Simpson integration of `f` over [a, b] to roughly `rel_tol`
/// accuracy relative to the integral of |f|.
///
/// A composite pilot pass over 1024 panels sets the absolute error scale
/// (and seeds the refinement on subintervals fine enough to see narrow
/// features); each subinterval then splits until its Richardson estimate
/// fits an error budget proportional to its length. Scaling by |f| keeps
/// the budget meaningful for integrals that nearly cancel, such as
/// overlaps of orthogonal states.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let n = 1024;
    let h = (b - a) / n as f64;
    let mut samples = Vec::with_capacity(n + 1);
    for i in 0..=n {
        samples.push(f(a + i as f64 * h));
    }
    let mut pilot_abs = 0.0;
    for i in (0..n).step_by(2) {
        pilot_abs += h.abs() / 3.0
            * (samples[i].abs() + 4.0 * samples[i + 1].abs() + samples[i + 2].abs());
    }
    let tol_abs = rel_tol * pilot_abs.max(1e-300);

    let mut total = 0.0;
    for i in (0..n).step_by(2) {
        let xa = a + i as f64 * h;
        let xb = xa + 2.0 * h;
        let whole = simpson(samples[i], samples[i + 1], samples[i + 2], 2.0 * h);
        let budget = tol_abs * (2.0 * h) / (b - a).abs();
        total += recurse(
            f,
            xa,
            xb,
            samples[i],
            samples[i + 1],
            samples[i + 2],
            whole,
            budget,
            48,
        );
    }
    total
}

fn simpson(fa: f64, fm: f64, fb: f64, len: f64) -> f64 {
    len / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    budget: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * budget {
        return left + right + delta / 15.0;
    }
    recurse(f, a, m, fa, flm, fm, left, budget / 2.0, depth - 1)
        + recurse(f, m, b, fm, frm, fb, right, budget / 2.0, depth - 1)
}
