//! The Tietz-Wei potential and its regime structure.
//!
//! The potential
//!
//! ```text
//! V(r) = D [ (1 - e^{-b_h (r - r_e)}) / (1 - c_h e^{-b_h (r - r_e)}) ]^2,
//! b_h = beta (1 - c_h),  |c_h| < 1,
//! ```
//!
//! changes character with the deformation parameter c_h:
//!
//! * `Case1` (e^{-b_h r_e} <= c_h < 1): the denominator vanishes at
//!   r0 = r_e + ln(c_h)/b_h >= 0 and the physical domain is ]r0, inf[.
//!   The potential is a deformed Manning-Rosen well there.
//! * `Case2` (0 < c_h < e^{-b_h r_e}): regular on ]0, inf[, a Manning-Rosen
//!   well restricted to a half space.
//! * `Case3` (-1 < c_h < 0): regular on ]0, inf[, a deformed Rosen-Morse
//!   well restricted to a half space.
//! * `Morse` (c_h = 0): the plain radial Morse potential with beta = b_h.
//!
//! This module also carries the exponential replacement of the centrifugal
//! 1/r^2 term that makes l > 0 tractable in Case1, and the l-dressed
//! Manning-Rosen constants it produces.

use std::fmt;

/// hbar*c in eV·Angstrom, for the molecular unit system.
pub const HBAR_C_EV_ANGSTROM: f64 = 1973.269804;
/// One atomic mass unit in eV/c^2.
pub const AMU_EV: f64 = 931.494_102_42e6;

#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// Invalid or inconsistent parameters.
    Params(String),
    /// Operation called outside the regime it is defined for.
    Regime { needed: &'static str, found: String },
    /// Evaluation at (or numerically on top of) the Case1 singularity.
    Singular { r: f64 },
    /// Deformed tanh/coth evaluated at the zero of its denominator.
    ZeroDenominator { x: f64 },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Params(msg) => write!(f, "invalid parameters: {msg}"),
            ModelError::Regime { needed, found } => {
                write!(f, "operation requires regime {needed}, parameters are {found}")
            }
            ModelError::Singular { r } => {
                write!(f, "potential is singular at r = {r} (Case1 pole)")
            }
            ModelError::ZeroDenominator { x } => {
                write!(f, "deformed hyperbolic denominator vanishes at x = {x}")
            }
        }
    }
}

impl std::error::Error for ModelError {}

/// One problem instance: the four potential parameters plus the kinetic
/// scale.
///
/// `hbar2_over_2mu` is derived by the constructors, so it is always
/// consistent with `mu` and the active unit system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    /// Well depth D (dissociation asymptote; the minimum sits at 0).
    pub well_depth: f64,
    /// Equilibrium bond length.
    pub r_e: f64,
    /// Exponential range parameter, b_h = beta (1 - c_h).
    pub b_h: f64,
    /// Dimensionless deformation, |c_h| < 1.
    pub c_h: f64,
    /// Reduced mass.
    pub mu: f64,
    /// hbar^2 / (2 mu) in (energy) * (length)^2.
    pub hbar2_over_2mu: f64,
}

impl PotentialParams {
    /// Natural units: hbar = 1, so hbar^2/(2 mu) = 1/(2 mu). With mu = 1/2
    /// the kinetic scale is exactly 1.
    pub fn natural(
        well_depth: f64,
        r_e: f64,
        b_h: f64,
        c_h: f64,
        mu: f64,
    ) -> Result<Self, ModelError> {
        let p = PotentialParams {
            well_depth,
            r_e,
            b_h,
            c_h,
            mu,
            hbar2_over_2mu: 1.0 / (2.0 * mu),
        };
        p.validate()?;
        Ok(p)
    }

    /// Molecular units: D in eV, lengths in Angstrom, mu in amu.
    pub fn molecular(
        well_depth_ev: f64,
        r_e_angstrom: f64,
        b_h_inv_angstrom: f64,
        c_h: f64,
        mu_amu: f64,
    ) -> Result<Self, ModelError> {
        let p = PotentialParams {
            well_depth: well_depth_ev,
            r_e: r_e_angstrom,
            b_h: b_h_inv_angstrom,
            c_h,
            mu: mu_amu,
            hbar2_over_2mu: HBAR_C_EV_ANGSTROM * HBAR_C_EV_ANGSTROM / (2.0 * mu_amu * AMU_EV),
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), ModelError> {
        validate_geometry(self.b_h, self.r_e, self.c_h)?;
        if !(self.well_depth > 0.0) {
            return Err(ModelError::Params("well depth D must be positive".into()));
        }
        if !(self.mu > 0.0) {
            return Err(ModelError::Params("reduced mass mu must be positive".into()));
        }
        if !(self.hbar2_over_2mu > 0.0) {
            return Err(ModelError::Params("kinetic scale must be positive".into()));
        }
        Ok(())
    }

    /// Morse constant beta = b_h / (1 - c_h).
    pub fn beta(&self) -> f64 {
        self.b_h / (1.0 - self.c_h)
    }

    /// Case1/Case2 boundary e^{-b_h r_e}: the smallest c_h for which the
    /// singularity r0 enters the physical half line.
    pub fn c_h_min(&self) -> f64 {
        (-self.b_h * self.r_e).exp()
    }
}

pub(crate) fn validate_geometry(b_h: f64, r_e: f64, c_h: f64) -> Result<(), ModelError> {
    if !(b_h > 0.0) {
        return Err(ModelError::Params("b_h must be positive".into()));
    }
    if !(r_e > 0.0) {
        return Err(ModelError::Params("r_e must be positive".into()));
    }
    if !(c_h.abs() < 1.0) || !c_h.is_finite() {
        return Err(ModelError::Params("|c_h| must be < 1".into()));
    }
    Ok(())
}

/// The four-way classification on c_h that decides which solver applies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    /// e^{-b_h r_e} <= c_h < 1: deformed Manning-Rosen with a hard wall at
    /// r0 = r_e + ln(c_h)/b_h >= 0.
    Case1 { r0: f64 },
    /// 0 < c_h < e^{-b_h r_e}: Manning-Rosen in the half space xi > xi0.
    Case2 { xi0: f64 },
    /// -1 < c_h < 0: deformed Rosen-Morse in the half space x > x0.
    /// x0 can be of either sign; the wave function must vanish at r = 0,
    /// i.e. at x = x0, regardless.
    Case3 { x0: f64 },
    /// c_h = 0: the radial Morse potential, beta = b_h.
    Morse,
}

impl Regime {
    pub fn label(&self) -> &'static str {
        match self {
            Regime::Case1 { .. } => "Case1",
            Regime::Case2 { .. } => "Case2",
            Regime::Case3 { .. } => "Case3",
            Regime::Morse => "Morse",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Regime::Case1 { .. } => "deformed Manning-Rosen with wall at r0",
            Regime::Case2 { .. } => "half-space Manning-Rosen",
            Regime::Case3 { .. } => "half-space Rosen-Morse",
            Regime::Morse => "radial Morse",
        }
    }

    /// Left edge of the physical domain in r.
    pub fn domain_start(&self) -> f64 {
        match self {
            Regime::Case1 { r0 } => r0.max(0.0),
            _ => 0.0,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Classify by c_h against the threshold e^{-b_h r_e} and fill the regime's
/// boundary quantity.
pub fn classify_regime(p: &PotentialParams) -> Regime {
    regime_for(p.b_h, p.r_e, p.c_h)
}

/// Classification from geometry alone (the well depth plays no role).
pub fn regime_for(b_h: f64, r_e: f64, c_h: f64) -> Regime {
    if c_h == 0.0 {
        Regime::Morse
    } else if c_h < 0.0 {
        Regime::Case3 {
            x0: -0.5 * (b_h * r_e + c_h.abs().ln()),
        }
    } else if c_h >= (-b_h * r_e).exp() {
        Regime::Case1 {
            r0: r_e + c_h.ln() / b_h,
        }
    } else {
        Regime::Case2 {
            xi0: -0.5 * (b_h * r_e + c_h.ln()),
        }
    }
}

/// Manning-Rosen constants of the deformed representation, 0 < c_h < 1.
///
/// They satisfy V0 - V1 = D and V0 + V1 = D / c_h^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MRConstants {
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
}

/// Rosen-Morse constants of the deformed representation, -1 < c_h < 0.
///
/// They satisfy U0 + U1 = D and U0 - U1 = D / |c_h|^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RMConstants {
    pub u0: f64,
    pub u1: f64,
    pub u2: f64,
}

pub fn mr_constants(p: &PotentialParams) -> Result<MRConstants, ModelError> {
    if !(p.c_h > 0.0 && p.c_h < 1.0) {
        return Err(ModelError::Regime {
            needed: "0 < c_h < 1 (Case1 or Case2)",
            found: format!("c_h = {}", p.c_h),
        });
    }
    let d = p.well_depth;
    let c = p.c_h;
    Ok(MRConstants {
        v0: 0.5 * d * (1.0 + 1.0 / (c * c)),
        v1: 0.5 * d * (1.0 / c + 1.0) * (1.0 / c - 1.0),
        v2: 0.25 * d * c * (1.0 / c - 1.0) * (1.0 / c - 1.0),
    })
}

pub fn rm_constants(p: &PotentialParams) -> Result<RMConstants, ModelError> {
    if !(p.c_h > -1.0 && p.c_h < 0.0) {
        return Err(ModelError::Regime {
            needed: "-1 < c_h < 0 (Case3)",
            found: format!("c_h = {}", p.c_h),
        });
    }
    let d = p.well_depth;
    let q = p.c_h.abs();
    Ok(RMConstants {
        u0: 0.5 * d * (1.0 + 1.0 / (q * q)),
        u1: 0.5 * d * (1.0 - 1.0 / q) * (1.0 + 1.0 / q),
        u2: 0.25 * d * q * (1.0 / q + 1.0) * (1.0 / q + 1.0),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeformedKind {
    Sinh,
    Cosh,
    Tanh,
    Coth,
}

/// Arai's q-deformed hyperbolic functions:
/// sinh_q x = (e^x - q e^{-x})/2, cosh_q x = (e^x + q e^{-x})/2, and their
/// ratios. They obey cosh_q^2 - sinh_q^2 = q.
pub fn deformed_hyperbolic(kind: DeformedKind, q: f64, x: f64) -> Result<f64, ModelError> {
    if !(q > 0.0) {
        return Err(ModelError::Params("deformation q must be positive".into()));
    }
    let ex = x.exp();
    let emx = (-x).exp();
    let sinh_q = 0.5 * (ex - q * emx);
    let cosh_q = 0.5 * (ex + q * emx);
    match kind {
        DeformedKind::Sinh => Ok(sinh_q),
        DeformedKind::Cosh => Ok(cosh_q),
        DeformedKind::Tanh => {
            if cosh_q == 0.0 {
                Err(ModelError::ZeroDenominator { x })
            } else {
                Ok(sinh_q / cosh_q)
            }
        }
        DeformedKind::Coth => {
            if sinh_q == 0.0 {
                Err(ModelError::ZeroDenominator { x })
            } else {
                Ok(cosh_q / sinh_q)
            }
        }
    }
}

/// Guard band around the Case1 pole: |1 - c_h y| below this counts as
/// sitting on the singularity.
const SINGULAR_GUARD: f64 = 1e-12;

/// The Tietz-Wei potential itself.
pub fn potential_eval(p: &PotentialParams, r: f64) -> Result<f64, ModelError> {
    if !(r > 0.0) {
        return Err(ModelError::Params(format!("r must be positive, got {r}")));
    }
    let y = (-p.b_h * (r - p.r_e)).exp();
    let denom = 1.0 - p.c_h * y;
    if denom.abs() < SINGULAR_GUARD {
        return Err(ModelError::Singular { r });
    }
    let ratio = (1.0 - y) / denom;
    Ok(p.well_depth * ratio * ratio)
}

/// The same potential through its deformed-hyperbolic representation:
/// Manning-Rosen form for 0 < c_h < 1, Rosen-Morse form for -1 < c_h < 0.
/// Agrees with `potential_eval` to ~1e-12 relative at every regular point.
pub fn potential_eval_deformed(p: &PotentialParams, r: f64) -> Result<f64, ModelError> {
    if !(r > 0.0) {
        return Err(ModelError::Params(format!("r must be positive, got {r}")));
    }
    let u = 0.5 * p.b_h * (r - p.r_e);
    if p.c_h > 0.0 {
        let mr = mr_constants(p)?;
        // Same guard band as the direct form: 1 - c_h y = 2 e^{-u} sinh_c(u).
        let y = (-p.b_h * (r - p.r_e)).exp();
        if (1.0 - p.c_h * y).abs() < SINGULAR_GUARD {
            return Err(ModelError::Singular { r });
        }
        let s = deformed_hyperbolic(DeformedKind::Sinh, p.c_h, u)?;
        let coth = deformed_hyperbolic(DeformedKind::Cosh, p.c_h, u)? / s;
        Ok(mr.v0 - mr.v1 * coth + mr.v2 / (s * s))
    } else if p.c_h < 0.0 {
        let rm = rm_constants(p)?;
        let q = p.c_h.abs();
        let t = deformed_hyperbolic(DeformedKind::Tanh, q, u)?;
        let ch = deformed_hyperbolic(DeformedKind::Cosh, q, u)?;
        Ok(rm.u0 + rm.u1 * t - rm.u2 / (ch * ch))
    } else {
        Err(ModelError::Regime {
            needed: "Case1, Case2 or Case3 (c_h != 0)",
            found: "Morse (c_h = 0)".into(),
        })
    }
}

/// Coefficients of the exponential replacement of 1/r^2:
///
/// ```text
/// 1/r^2 ~ C0 + B0 / (e^{b_h (r-r_e)} - c_h) + A0 / (e^{b_h (r-r_e)} - c_h)^2
/// ```
///
/// C0 is pinned to b_h^2/12; B0 and A0 are adjustable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentrifugalApprox {
    pub c0: f64,
    pub b0: f64,
    pub a0: f64,
}

impl CentrifugalApprox {
    /// All-zero coefficients: the centrifugal replacement switched off.
    pub const fn zero() -> Self {
        CentrifugalApprox {
            c0: 0.0,
            b0: 0.0,
            a0: 0.0,
        }
    }

    /// The approximating form evaluated with the parameters' own
    /// deformation in the denominator.
    pub fn eval(&self, p: &PotentialParams, r: f64) -> f64 {
        self.eval_with_deformation(p.b_h, p.r_e, p.c_h, r)
    }

    /// The approximating form with an explicit denominator shift `q`
    /// (useful for checking reductions such as the Greene-Aldrich shape at
    /// q = 1).
    pub fn eval_with_deformation(&self, b_h: f64, r_e: f64, q: f64, r: f64) -> f64 {
        let g = (b_h * (r - r_e)).exp() - q;
        self.c0 + self.b0 / g + self.a0 / (g * g)
    }
}

/// Fit B0 and A0 so the approximating form matches 1/r^2 in value and first
/// derivative at r = r_e (two conditions, two unknowns, closed form). The
/// default C0 = b_h^2/12 is kept.
pub fn fit_centrifugal_approx(p: &PotentialParams) -> Result<CentrifugalApprox, ModelError> {
    let regime = classify_regime(p);
    if !matches!(regime, Regime::Case1 { .. }) {
        return Err(ModelError::Regime {
            needed: "Case1",
            found: regime.label().into(),
        });
    }
    let c0 = p.b_h * p.b_h / 12.0;
    let s = 1.0 - p.c_h;
    // Match f(r_e) = 1/r_e^2 and f'(r_e) = -2/r_e^3:
    //   B0/s + A0/s^2 = P,  B0/s^2 + 2 A0/s^3 = Q
    let p_val = 1.0 / (p.r_e * p.r_e) - c0;
    let q_val = 2.0 / (p.b_h * p.r_e * p.r_e * p.r_e);
    let a0 = s * s * s * q_val - s * s * p_val;
    let b0 = 2.0 * s * p_val - s * s * q_val;
    Ok(CentrifugalApprox { c0, b0, a0 })
}

/// The l-dressed Manning-Rosen constants of the approximated effective
/// potential (Case1 only):
///
/// ```text
/// V0^l = V0 + l(l+1) (hbar^2/2mu) [C0 + (A0/c_h - B0)/(2 c_h)]
/// V1^l = V1 + l(l+1) (hbar^2/2mu) (A0/c_h - B0)/(2 c_h)
/// V2^l = V2 + l(l+1) (hbar^2/2mu) A0/(4 c_h)
/// ```
pub fn effective_mr_constants(
    p: &PotentialParams,
    l: usize,
    approx: &CentrifugalApprox,
) -> Result<MRConstants, ModelError> {
    let regime = classify_regime(p);
    if !matches!(regime, Regime::Case1 { .. }) {
        return Err(ModelError::Regime {
            needed: "Case1",
            found: regime.label().into(),
        });
    }
    let base = mr_constants(p)?;
    let ll = (l * (l + 1)) as f64;
    let c = p.c_h;
    let k = ll * p.hbar2_over_2mu;
    Ok(MRConstants {
        v0: base.v0 + k * (approx.c0 + 0.5 / c * (approx.a0 / c - approx.b0)),
        v1: base.v1 + k * 0.5 / c * (approx.a0 / c - approx.b0),
        v2: base.v2 + k * approx.a0 / (4.0 * c),
    })
}
