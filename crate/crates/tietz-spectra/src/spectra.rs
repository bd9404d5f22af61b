//! Bound-state energies for all four regimes.
//!
//! Case1 has a closed-form spectrum: the poles of the radial Green's
//! function sit where M1 - L_E is a non-positive integer, which resolves to
//!
//! ```text
//! E(n_r, l) = V0^l - (hbar^2 b_h^2 / 8 mu) (N_r^2 + lambda_l^2 / N_r^2),
//! N_r = n_r + delta_l + 1/2,
//! ```
//!
//! with at most n_r < sqrt(lambda_l) - delta_l - 1/2 bound levels. Case2 and
//! Case3 impose a Dirichlet wall at r = 0 instead, which turns the spectrum
//! into the zeros of a Gauss hypergeometric function of the energy; those
//! are found by a uniform scan plus bisection. The Morse regime (c_h = 0)
//! is again closed form.

use crate::model::{
    classify_regime, effective_mr_constants, mr_constants, rm_constants, CentrifugalApprox,
    ModelError, PotentialParams, Regime,
};
use crate::specfun::{gauss_2f1, log_gamma_signed, SeriesControl, SpecFunError};
use std::fmt;

/// Provenance of a computed level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedFormCase1,
    TranscendentalCase2,
    TranscendentalCase3,
    Morse,
    Oracle,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::ClosedFormCase1 => "closed_form_case1",
            Method::TranscendentalCase2 => "transcendental_case2",
            Method::TranscendentalCase3 => "transcendental_case3",
            Method::Morse => "morse",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundLevel {
    pub n_r: usize,
    pub l: usize,
    pub energy: f64,
    pub method: Method,
    /// Quantization-condition residual at the reported energy:
    /// |M1 - L_E + n_r| for the closed forms, the normalized |F(E)| for the
    /// transcendental regimes, the relative bracket width for the oracle.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpectraError {
    Regime { needed: &'static str, found: String },
    /// n_r at or beyond the bound-state count.
    LevelIndex { n_r: usize, count: usize },
    Bracket(String),
    /// Green's function requested within the snap band of a spectral pole.
    NearPole { gamma_argument: f64 },
    Domain(String),
    SpecFun(SpecFunError),
    Model(ModelError),
}

impl fmt::Display for SpectraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectraError::Regime { needed, found } => {
                write!(f, "operation requires {needed}, parameters are {found}")
            }
            SpectraError::LevelIndex { n_r, count } => write!(
                f,
                "n_r = {n_r} exceeds the bound-state count (n_r,max = {}, {count} levels)",
                count.saturating_sub(1)
            ),
            SpectraError::Bracket(msg) => write!(f, "bad energy bracket: {msg}"),
            SpectraError::NearPole { gamma_argument } => write!(
                f,
                "Green's function evaluated within 1e-9 of a spectral pole (gamma argument {gamma_argument})"
            ),
            SpectraError::Domain(msg) => write!(f, "domain error: {msg}"),
            SpectraError::SpecFun(e) => write!(f, "special-function failure: {e}"),
            SpectraError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SpectraError {}

impl From<SpecFunError> for SpectraError {
    fn from(e: SpecFunError) -> Self {
        SpectraError::SpecFun(e)
    }
}

impl From<ModelError> for SpectraError {
    fn from(e: ModelError) -> Self {
        SpectraError::Model(e)
    }
}

fn require_case1(p: &PotentialParams) -> Result<f64, SpectraError> {
    match classify_regime(p) {
        Regime::Case1 { r0 } => Ok(r0),
        other => Err(SpectraError::Regime {
            needed: "Case1 (e^{-b_h r_e} <= c_h < 1)",
            found: other.label().into(),
        }),
    }
}

/// Number of integers n >= 0 with n < bound.
fn count_below(bound: f64) -> usize {
    if !(bound > 0.0) {
        return 0;
    }
    let r = bound.round();
    if (bound - r).abs() < 1e-12 {
        r as usize
    } else {
        bound.ceil() as usize
    }
}

/// The Case1 spectral quantities at one bound level.
#[derive(Debug, Clone, Copy)]
pub struct Case1Auxiliaries {
    /// delta_l >= 1/2, the strength index of the 1/sinh^2 core.
    pub delta_l: f64,
    /// lambda_l, the dimensionless well strength; bound states need
    /// lambda_l / N_r > N_r.
    pub lambda_l: f64,
    /// N_r = n_r + delta_l + 1/2.
    pub n_eff: f64,
    /// L_E, M1, M2 evaluated at the level energy; the pole condition is
    /// M1 - L_E = -n_r.
    pub l_e: f64,
    pub m1: f64,
    pub m2: f64,
}

/// delta_l and lambda_l from the l-dressed Manning-Rosen constants.
fn case1_indices(
    p: &PotentialParams,
    l: usize,
    approx: &CentrifugalApprox,
) -> Result<(f64, f64), SpectraError> {
    require_case1(p)?;
    let eff = effective_mr_constants(p, l, approx)?;
    let b2 = p.b_h * p.b_h;
    let delta_sq = 4.0 * eff.v2 / (p.hbar2_over_2mu * b2 * p.c_h) + 0.25;
    if delta_sq < 0.0 {
        return Err(SpectraError::Domain(
            "delta_l^2 negative; the centrifugal coefficients are unphysical".into(),
        ));
    }
    let lambda_l = 2.0 * eff.v1 / (p.hbar2_over_2mu * b2);
    Ok((delta_sq.sqrt(), lambda_l))
}

/// L_E, M1, M2 at an arbitrary energy below the Case1 continuum threshold.
fn case1_exponents(
    p: &PotentialParams,
    l: usize,
    approx: &CentrifugalApprox,
    delta_l: f64,
    e: f64,
) -> Result<(f64, f64, f64), SpectraError> {
    let eff = effective_mr_constants(p, l, approx)?;
    let deep = eff.v0 + eff.v1 - e;
    let shallow = eff.v0 - eff.v1 - e;
    if deep < 0.0 || shallow < 0.0 {
        return Err(SpectraError::Domain(format!(
            "E = {e} is above the continuum threshold {}",
            eff.v0 - eff.v1
        )));
    }
    let kappa_deep = (deep / p.hbar2_over_2mu).sqrt() / p.b_h;
    let kappa = (shallow / p.hbar2_over_2mu).sqrt() / p.b_h;
    Ok((-0.5 + kappa_deep, delta_l + kappa, delta_l - kappa))
}

/// Number of Case1 bound levels: integers n_r with
/// n_r < sqrt(lambda_l) - delta_l - 1/2.
pub fn case1_level_count(
    p: &PotentialParams,
    l: usize,
    approx: &CentrifugalApprox,
) -> Result<usize, SpectraError> {
    let (delta_l, lambda_l) = case1_indices(p, l, approx)?;
    if lambda_l <= 0.0 {
        return Ok(0);
    }
    Ok(count_below(lambda_l.sqrt() - delta_l - 0.5))
}

/// The closed-form Case1 level.
pub fn case1_energy(
    p: &PotentialParams,
    l: usize,
    n_r: usize,
    approx: &CentrifugalApprox,
) -> Result<BoundLevel, SpectraError> {
    let count = case1_level_count(p, l, approx)?;
    if n_r >= count {
        return Err(SpectraError::LevelIndex { n_r, count });
    }
    let (delta_l, lambda_l) = case1_indices(p, l, approx)?;
    let eff = effective_mr_constants(p, l, approx)?;
    let n_eff = n_r as f64 + delta_l + 0.5;
    let b2 = p.b_h * p.b_h;
    let energy = eff.v0
        - p.hbar2_over_2mu * b2 / 4.0 * (n_eff * n_eff + lambda_l * lambda_l / (n_eff * n_eff));
    let residual = pole_residual_at(p, l, approx, delta_l, energy, n_r)?;
    Ok(BoundLevel {
        n_r,
        l,
        energy,
        method: Method::ClosedFormCase1,
        residual,
    })
}

/// All Case1 levels for one l.
pub fn case1_levels(
    p: &PotentialParams,
    l: usize,
    approx: &CentrifugalApprox,
) -> Result<Vec<BoundLevel>, SpectraError> {
    let count = case1_level_count(p, l, approx)?;
    (0..count).map(|n| case1_energy(p, l, n, approx)).collect()
}

/// The spectral quantities of one level, evaluated at its energy.
pub fn case1_auxiliaries(
    p: &PotentialParams,
    l: usize,
    n_r: usize,
    approx: &CentrifugalApprox,
) -> Result<Case1Auxiliaries, SpectraError> {
    let level = case1_energy(p, l, n_r, approx)?;
    let (delta_l, lambda_l) = case1_indices(p, l, approx)?;
    let (l_e, m1, m2) = case1_exponents(p, l, approx, delta_l, level.energy)?;
    Ok(Case1Auxiliaries {
        delta_l,
        lambda_l,
        n_eff: n_r as f64 + delta_l + 0.5,
        l_e,
        m1,
        m2,
    })
}

fn pole_residual_at(
    p: &PotentialParams,
    l: usize,
    approx: &CentrifugalApprox,
    delta_l: f64,
    e: f64,
    n_r: usize,
) -> Result<f64, SpectraError> {
    let (l_e, m1, _) = case1_exponents(p, l, approx, delta_l, e)?;
    Ok((m1 - l_e + n_r as f64).abs())
}

/// |M1 - L_E + n_r| at the closed-form energy: the pole condition of the
/// radial Green's function, which the closed form must satisfy to ~1e-10.
pub fn case1_pole_residual(
    p: &PotentialParams,
    l: usize,
    n_r: usize,
    approx: &CentrifugalApprox,
) -> Result<f64, SpectraError> {
    let level = case1_energy(p, l, n_r, approx)?;
    let (delta_l, _) = case1_indices(p, l, approx)?;
    pole_residual_at(p, l, approx, delta_l, level.energy, n_r)
}

/// |M1 - L_E + n_r| at an arbitrary trial energy (diagnostic; grows away
/// from the true level).
pub fn case1_pole_residual_at_energy(
    p: &PotentialParams,
    l: usize,
    n_r: usize,
    approx: &CentrifugalApprox,
    e: f64,
) -> Result<f64, SpectraError> {
    let (delta_l, _) = case1_indices(p, l, approx)?;
    pole_residual_at(p, l, approx, delta_l, e, n_r)
}

/// The radial Green's function of Case1 at energy E, up to the constant
/// -2 i mu / (hbar b_h), which is dropped: only pole locations and ratios
/// matter here. The returned value is the real product of the gamma-ratio
/// prefactor and the two hypergeometric factors.
pub fn case1_green_function(
    p: &PotentialParams,
    l: usize,
    r1: f64,
    r2: f64,
    e: f64,
    approx: &CentrifugalApprox,
) -> Result<f64, SpectraError> {
    let r0 = require_case1(p)?;
    if r1 <= r0 || r2 <= r0 {
        return Err(SpectraError::Domain(format!(
            "both points must lie above the wall r0 = {r0}"
        )));
    }
    let (delta_l, _) = case1_indices(p, l, approx)?;
    let (l_e, m1, m2) = case1_exponents(p, l, approx, delta_l, e)?;
    let pole_arg = m1 - l_e;
    if (pole_arg - pole_arg.round()).abs() < 1e-9 && pole_arg.round() <= 0.0 {
        return Err(SpectraError::NearPole {
            gamma_argument: pole_arg,
        });
    }
    let y1 = (-p.b_h * (r1 - p.r_e)).exp();
    let y2 = (-p.b_h * (r2 - p.r_e)).exp();
    let (y_outer, y_inner) = if r1 >= r2 { (y1, y2) } else { (y2, y1) };

    let (ln_a, sign_a) = log_gamma_signed(pole_arg);
    let (ln_b, sign_b) = log_gamma_signed(l_e + m1 + 1.0);
    let (ln_c, _) = log_gamma_signed(m1 - m2 + 1.0);
    let (ln_d, _) = log_gamma_signed(m1 + m2 + 1.0);
    let ln_shape = 0.5 * (m1 + m2 + 1.0) * ((1.0 - p.c_h * y1).ln() + (1.0 - p.c_h * y2).ln())
        + 0.5 * (m1 - m2) * (p.c_h * p.c_h * y1 * y2).ln();

    let ctrl = SeriesControl::default();
    let a = pole_arg;
    let b = l_e + m1 + 1.0;
    let f_outer = gauss_2f1(a, b, m1 - m2 + 1.0, p.c_h * y_outer, &ctrl)?;
    let f_inner = gauss_2f1(a, b, m1 + m2 + 1.0, 1.0 - p.c_h * y_inner, &ctrl)?;

    Ok(sign_a * sign_b * (ln_a + ln_b - ln_c - ln_d + ln_shape).exp() * f_outer * f_inner)
}

/// Search bracket and refinement controls for the transcendental scans.
#[derive(Debug, Clone, Copy)]
pub struct RootScanConfig {
    pub e_min: f64,
    pub e_max: f64,
    pub grid_points: usize,
    pub bisect_rel_tol: f64,
}

impl RootScanConfig {
    /// The full physical window (eps D, (1 - eps) D): the well minimum is 0
    /// and the continuum opens at D, where M2 turns complex.
    pub fn for_params(p: &PotentialParams) -> Self {
        let eps = 1e-9;
        RootScanConfig {
            e_min: eps * p.well_depth,
            e_max: (1.0 - eps) * p.well_depth,
            grid_points: 2000,
            bisect_rel_tol: 1e-12,
        }
    }

    fn validate(&self, p: &PotentialParams) -> Result<(), SpectraError> {
        if !(self.e_min < self.e_max) {
            return Err(SpectraError::Bracket("e_min must be below e_max".into()));
        }
        if !(self.e_min > 0.0) {
            return Err(SpectraError::Bracket("e_min must be positive".into()));
        }
        if self.e_max >= p.well_depth {
            return Err(SpectraError::Bracket(
                "e_max must stay below D (M2 turns complex at the continuum)".into(),
            ));
        }
        if self.grid_points < 16 {
            return Err(SpectraError::Bracket("grid_points must be >= 16".into()));
        }
        if !(self.bisect_rel_tol > 0.0) {
            return Err(SpectraError::Bracket("bisect_rel_tol must be positive".into()));
        }
        Ok(())
    }
}

/// A non-fatal observation from a root scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanWarning {
    /// Two grid-adjacent sign changes: a near-tangent pair of roots may
    /// hide further structure between them.
    pub e_lo: f64,
    pub e_hi: f64,
    pub message: String,
}

/// Scan result: levels ordered by energy plus any warnings.
#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub levels: Vec<BoundLevel>,
    pub warnings: Vec<ScanWarning>,
}

/// Exponents of the Case2 problem at energy E. The wave-function factors
/// reuse them, so they live here next to the quantization condition.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Case2Setup {
    pub delta0: f64,
    pub l_e: f64,
    /// sqrt(2 mu (V0 - V1 - E)) / (hbar b_h) = sqrt(2 mu (D - E)) / (hbar b_h):
    /// the physical r -> infinity decay index, (M1 - M2)/2.
    pub kappa: f64,
    pub m1: f64,
    pub m2: f64,
}

pub(crate) fn case2_setup(p: &PotentialParams, e: f64) -> Result<Case2Setup, SpectraError> {
    match classify_regime(p) {
        Regime::Case2 { .. } => {}
        other => {
            return Err(SpectraError::Regime {
                needed: "Case2 (0 < c_h < e^{-b_h r_e})",
                found: other.label().into(),
            })
        }
    }
    let mr = mr_constants(p)?;
    let b2 = p.b_h * p.b_h;
    let delta0 = (0.25 + 4.0 * mr.v2 / (p.hbar2_over_2mu * b2 * p.c_h)).sqrt();
    let deep = mr.v0 + mr.v1 - e;
    let shallow = mr.v0 - mr.v1 - e;
    if shallow < 0.0 || deep < 0.0 || e <= 0.0 {
        return Err(SpectraError::Domain(format!(
            "E = {e} is outside the bound window (0, D)"
        )));
    }
    let kappa_deep = (deep / p.hbar2_over_2mu).sqrt() / p.b_h;
    let kappa = (shallow / p.hbar2_over_2mu).sqrt() / p.b_h;
    Ok(Case2Setup {
        delta0,
        l_e: -0.5 + kappa_deep,
        kappa,
        m1: delta0 + kappa,
        m2: delta0 - kappa,
    })
}

/// The Case2 quantization function
/// F(E) = 2F1(M1 - L_E, L_E + M1 + 1; M1 - M2 + 1; c_h e^{b_h r_e});
/// bound energies are its zeros.
pub fn case2_condition(p: &PotentialParams, e: f64) -> Result<f64, SpectraError> {
    let s = case2_setup(p, e)?;
    let z0 = p.c_h * (p.b_h * p.r_e).exp();
    Ok(gauss_2f1(
        s.m1 - s.l_e,
        s.l_e + s.m1 + 1.0,
        s.m1 - s.m2 + 1.0,
        z0,
        &SeriesControl::default(),
    )?)
}

/// Exponents of the Case3 problem at energy E.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Case3Setup {
    /// The energy-independent index of the 1/cosh^2 core.
    pub l0: f64,
    /// sqrt(2 mu (D - E)) / (hbar b_h).
    pub k1: f64,
    /// sqrt(2 mu (D/|c_h|^2 - E)) / (hbar b_h).
    pub k2: f64,
    pub m1: f64,
    pub m2: f64,
}

pub(crate) fn case3_setup(p: &PotentialParams, e: f64) -> Result<Case3Setup, SpectraError> {
    match classify_regime(p) {
        Regime::Case3 { .. } => {}
        other => {
            return Err(SpectraError::Regime {
                needed: "Case3 (-1 < c_h < 0)",
                found: other.label().into(),
            })
        }
    }
    let rm = rm_constants(p)?;
    let q = p.c_h.abs();
    let b2 = p.b_h * p.b_h;
    let l0 = -0.5 + (0.25 + 4.0 * rm.u2 / (p.hbar2_over_2mu * b2 * q)).sqrt();
    let d = p.well_depth;
    if e >= d || e <= 0.0 {
        return Err(SpectraError::Domain(format!(
            "E = {e} is outside the bound window (0, D)"
        )));
    }
    let k1 = ((d - e) / p.hbar2_over_2mu).sqrt() / p.b_h;
    let k2 = ((d / (q * q) - e) / p.hbar2_over_2mu).sqrt() / p.b_h;
    Ok(Case3Setup {
        l0,
        k1,
        k2,
        m1: k1 + k2,
        m2: k1 - k2,
    })
}

/// The Case3 quantization function
/// G(E) = 2F1(M1 - L, L + M1 + 1; M1 + M2 + 1; |c_h| / (e^{-b_h r_e} + |c_h|)),
/// where L is energy independent.
pub fn case3_condition(p: &PotentialParams, e: f64) -> Result<f64, SpectraError> {
    let s = case3_setup(p, e)?;
    let q = p.c_h.abs();
    let z0 = q / ((-p.b_h * p.r_e).exp() + q);
    Ok(gauss_2f1(
        s.m1 - s.l0,
        s.l0 + s.m1 + 1.0,
        s.m1 + s.m2 + 1.0,
        z0,
        &SeriesControl::default(),
    )?)
}

/// Shared grid-scan-plus-bisection driver.
fn scan_roots<F: Fn(f64) -> Result<f64, SpectraError>>(
    f: F,
    scan: &RootScanConfig,
    method: Method,
) -> Result<ScanOutcome, SpectraError> {
    let n = scan.grid_points;
    let step = (scan.e_max - scan.e_min) / (n - 1) as f64;
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let e = scan.e_min + i as f64 * step;
        let v = f(e)?;
        values.push((e, v));
    }
    let mut levels = Vec::new();
    let mut warnings = Vec::new();
    let mut last_change: Option<usize> = None;
    for i in 0..n - 1 {
        let (ea, fa) = values[i];
        let (eb, fb) = values[i + 1];
        if fa == 0.0 {
            levels.push((ea, 0.0));
            continue;
        }
        if fa.signum() == fb.signum() {
            continue;
        }
        if let Some(j) = last_change {
            if j + 1 == i {
                warnings.push(ScanWarning {
                    e_lo: values[j].0,
                    e_hi: eb,
                    message: format!(
                        "sign changes in adjacent grid cells near E = {}; a tangent pair may be unresolved",
                        0.5 * (values[j].0 + eb)
                    ),
                });
            }
        }
        last_change = Some(i);
        let (mut a, mut f_lo) = (ea, fa);
        let mut b = eb;
        // bisect_rel_tol is the guaranteed bound; the loop then keeps
        // halving to machine precision so the residual |F(root)| sits at
        // the summation noise floor rather than at |F'| * tolerance.
        let floor = (4.0 * f64::EPSILON * b.abs()).min(scan.bisect_rel_tol * b.abs());
        while b - a > floor {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            let fm = f(mid)?;
            if fm == 0.0 {
                a = mid;
                b = mid;
                break;
            }
            if fm.signum() == f_lo.signum() {
                a = mid;
                f_lo = fm;
            } else {
                b = mid;
            }
        }
        let root = 0.5 * (a + b);
        // Residual relative to the condition's local swing: probes a tenth
        // of a percent to either side (clamped into the bracket) set the
        // scale a genuine root must be small against.
        let probe_lo = f((root * (1.0 - 1e-3)).max(scan.e_min))?.abs();
        let probe_hi = f((root * (1.0 + 1e-3)).min(scan.e_max))?.abs();
        let scale = probe_lo.max(probe_hi).max(f64::MIN_POSITIVE);
        levels.push((root, f(root)?.abs() / scale));
    }
    let levels = levels
        .into_iter()
        .enumerate()
        .map(|(k, (e, res))| BoundLevel {
            n_r: k,
            l: 0,
            energy: e,
            method,
            residual: res,
        })
        .collect();
    Ok(ScanOutcome { levels, warnings })
}

/// All s-wave bound states of the half-space Manning-Rosen regime inside
/// the scan bracket, labeled by ascending energy.
pub fn transcendental_case2_levels(
    p: &PotentialParams,
    scan: &RootScanConfig,
) -> Result<ScanOutcome, SpectraError> {
    scan.validate(p)?;
    case2_condition(p, 0.5 * (scan.e_min + scan.e_max))?; // regime check up front
    scan_roots(|e| case2_condition(p, e), scan, Method::TranscendentalCase2)
}

/// All s-wave bound states of the half-space Rosen-Morse regime inside the
/// scan bracket, labeled by ascending energy.
pub fn transcendental_case3_levels(
    p: &PotentialParams,
    scan: &RootScanConfig,
) -> Result<ScanOutcome, SpectraError> {
    scan.validate(p)?;
    case3_condition(p, 0.5 * (scan.e_min + scan.e_max))?;
    scan_roots(|e| case3_condition(p, e), scan, Method::TranscendentalCase3)
}

/// The Morse spectrum at c_h = 0 (beta = b_h):
/// E_n = (hbar^2 beta^2 / 2 mu) [2 (n + 1/2) s - (n + 1/2)^2] with
/// s = sqrt(2 mu D) / (hbar beta), for n + 1/2 < s.
///
/// The level count uses the monotone-increase condition (n + 1/2) < s,
/// which is also where E_n crosses the dissociation limit.
pub fn morse_levels(p: &PotentialParams) -> Result<Vec<BoundLevel>, SpectraError> {
    if p.c_h != 0.0 {
        return Err(SpectraError::Regime {
            needed: "Morse (c_h = 0)",
            found: classify_regime(p).label().into(),
        });
    }
    let beta = p.b_h;
    let s = (p.well_depth / p.hbar2_over_2mu).sqrt() / beta;
    let count = count_below(s - 0.5);
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let half = n as f64 + 0.5;
        let energy = p.hbar2_over_2mu * beta * beta * (2.0 * half * s - half * half);
        // Residual of the quantization identity
        // 1/2 - s + sqrt((D - E)/ (hbar^2/2mu)) / beta = -n.
        let residual =
            (0.5 - s + ((p.well_depth - energy) / p.hbar2_over_2mu).sqrt() / beta + n as f64).abs();
        out.push(BoundLevel {
            n_r: n,
            l: 0,
            energy,
            method: Method::Morse,
            residual,
        });
    }
    Ok(out)
}

/// Morse level count, exposed for index validation.
pub fn morse_level_count(p: &PotentialParams) -> Result<usize, SpectraError> {
    if p.c_h != 0.0 {
        return Err(SpectraError::Regime {
            needed: "Morse (c_h = 0)",
            found: classify_regime(p).label().into(),
        });
    }
    let s = (p.well_depth / p.hbar2_over_2mu).sqrt() / p.b_h;
    Ok(count_below(s - 0.5))
}
