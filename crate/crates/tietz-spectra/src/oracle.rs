//! Independent finite-difference bound-state solver.
//!
//! Numerov integration of the radial equation
//!
//! ```text
//! -(hbar^2/2mu) chi'' + [V(r) + centrifugal] chi = E chi,
//! chi(r_min) = chi(r_max) = 0,
//! ```
//!
//! with node-count bracketing followed by bisection on the matching-point
//! derivative mismatch. This module shares no numerical machinery with the
//! analytic solvers beyond potential evaluation; it exists to validate
//! them.
//!
//! The three-term Numerov recurrence has the Sturm property as long as its
//! step weights stay positive, so the interior node count of the outward
//! shot is exactly the number of Dirichlet eigenvalues below E. That makes
//! the node-count bisection monotone and immune to missed or spurious
//! roots; the derivative-mismatch bisection then polishes within the
//! isolated bracket.

use crate::model::{
    classify_regime, fit_centrifugal_approx, potential_eval, ModelError, PotentialParams, Regime,
};
use crate::spectra::{BoundLevel, Method};
use std::fmt;

/// Which centrifugal term enters the effective potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentrifugalMode {
    /// The exact hbar^2 l(l+1) / (2 mu r^2).
    Exact,
    /// The fitted exponential replacement (Case1 only).
    Approximated,
    /// No centrifugal term (s waves).
    None,
}

#[derive(Debug, Clone)]
pub struct NumerovConfig {
    pub r_min: f64,
    pub r_max: f64,
    /// Grid size; 20001 is the production default, anything below ~1001 is
    /// only good for exercising the coarse-grid warning path.
    pub n_points: usize,
    /// Fractional position of the preferred matching point; the actual
    /// match lands on the classical turning point nearest to it.
    pub match_fraction: f64,
    pub centrifugal_mode: CentrifugalMode,
    /// Relative convergence target for each eigenvalue.
    pub e_tol_rel: f64,
}

impl NumerovConfig {
    /// Regime-aware defaults: the wall sits at r0 + 1e-6 for Case1 and at
    /// 1e-6 otherwise; the outer wall 30 decay lengths past r_e.
    pub fn for_params(p: &PotentialParams) -> Self {
        let r_min = match classify_regime(p) {
            Regime::Case1 { r0 } => r0 + 1e-6,
            _ => 1e-6,
        };
        NumerovConfig {
            r_min,
            r_max: p.r_e + 30.0 / p.b_h,
            n_points: 20_001,
            match_fraction: 0.5,
            centrifugal_mode: CentrifugalMode::None,
            e_tol_rel: 1e-10,
        }
    }

    fn validate(&self) -> Result<(), OracleError> {
        if !(self.r_min < self.r_max) {
            return Err(OracleError::Config("r_min must be below r_max".into()));
        }
        if self.n_points < 64 {
            return Err(OracleError::Config("n_points is too small".into()));
        }
        if !(self.match_fraction > 0.0 && self.match_fraction < 1.0) {
            return Err(OracleError::Config("match_fraction must be in (0,1)".into()));
        }
        if !(self.e_tol_rel > 0.0) {
            return Err(OracleError::Config("e_tol_rel must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    Config(String),
    Model(ModelError),
    /// Bisection failed to isolate an eigenvalue.
    NoConvergence(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Config(msg) => write!(f, "bad Numerov configuration: {msg}"),
            OracleError::Model(e) => write!(f, "potential evaluation failed: {e}"),
            OracleError::NoConvergence(msg) => write!(f, "Numerov did not converge: {msg}"),
        }
    }
}

impl std::error::Error for OracleError {}

impl From<ModelError> for OracleError {
    fn from(e: ModelError) -> Self {
        OracleError::Model(e)
    }
}

/// Precomputed effective potential on the uniform grid.
struct ShootingGrid {
    h: f64,
    v: Vec<f64>,
    hbar2_over_2mu: f64,
    /// First index where the Numerov step weight is safely positive; the
    /// Dirichlet node is imposed there. Near a 1/(r-r0)^2 wall the first
    /// few raw steps would have |h^2 f / 12| > 1, which breaks the Sturm
    /// property, and the wave function is vanishingly small there anyway.
    start: usize,
}

const RENORM_LIMIT: f64 = 1e120;
const RENORM_SCALE: f64 = 1e-120;

impl ShootingGrid {
    fn build<F: Fn(f64) -> Result<f64, ModelError>>(
        v_eff: F,
        cfg: &NumerovConfig,
        hbar2_over_2mu: f64,
    ) -> Result<Self, OracleError> {
        let n = cfg.n_points;
        let h = (cfg.r_max - cfg.r_min) / (n - 1) as f64;
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let r = cfg.r_min + i as f64 * h;
            v.push(v_eff(r)?);
        }
        let weight_cap = 0.5;
        let mut start = 0;
        while start + 8 < n && h * h / 12.0 * v[start].abs() / hbar2_over_2mu > weight_cap {
            start += 1;
        }
        Ok(ShootingGrid {
            h,
            v,
            hbar2_over_2mu,
            start,
        })
    }

    fn step_weight(&self, i: usize, e: f64) -> f64 {
        self.h * self.h / 12.0 * (self.v[i] - e) / self.hbar2_over_2mu
    }

    /// Outward Numerov shot across the whole grid; returns the interior
    /// node count of the discrete solution.
    fn count_nodes(&self, e: f64) -> usize {
        let n = self.v.len();
        let mut nodes = 0;
        let mut y_prev = 0.0_f64;
        let mut y = self.h;
        let mut t_prev = self.step_weight(self.start, e);
        let mut t = self.step_weight(self.start + 1, e);
        for i in self.start + 1..n - 1 {
            let t_next = self.step_weight(i + 1, e);
            let y_next = (2.0 * (1.0 + 5.0 * t) * y - (1.0 - t_prev) * y_prev) / (1.0 - t_next);
            if y != 0.0 && y_next != 0.0 && (y > 0.0) != (y_next > 0.0) && i + 1 < n - 1 {
                nodes += 1;
            }
            y_prev = y;
            y = y_next;
            t_prev = t;
            t = t_next;
            if y.abs() > RENORM_LIMIT {
                y *= RENORM_SCALE;
                y_prev *= RENORM_SCALE;
            }
        }
        nodes
    }

    /// Log-derivative mismatch between the outward and inward shots at the
    /// matching index. None when a shot lands on a node of the match point.
    fn mismatch(&self, e: f64, match_fraction: f64) -> Option<f64> {
        let n = self.v.len();
        let m = self.match_index(e, match_fraction);

        // Outward to m+1.
        let mut o = [0.0_f64; 3]; // values at m-1, m, m+1
        {
            let mut y_prev = 0.0_f64;
            let mut y = self.h;
            let mut t_prev = self.step_weight(self.start, e);
            let mut t = self.step_weight(self.start + 1, e);
            if self.start + 1 == m - 1 {
                o[0] = y;
            }
            for i in self.start + 1..=m {
                let t_next = self.step_weight(i + 1, e);
                let y_next = (2.0 * (1.0 + 5.0 * t) * y - (1.0 - t_prev) * y_prev) / (1.0 - t_next);
                y_prev = y;
                y = y_next;
                t_prev = t;
                t = t_next;
                if y.abs() > RENORM_LIMIT {
                    y *= RENORM_SCALE;
                    y_prev *= RENORM_SCALE;
                    o[0] *= RENORM_SCALE;
                    o[1] *= RENORM_SCALE;
                }
                if i + 1 == m - 1 {
                    o[0] = y;
                } else if i + 1 == m {
                    o[1] = y;
                } else if i + 1 == m + 1 {
                    o[2] = y;
                }
            }
        }

        // Inward to m-1.
        let mut w = [0.0_f64; 3];
        {
            let mut y_prev = 0.0_f64;
            let mut y = self.h;
            let mut t_prev = self.step_weight(n - 1, e);
            let mut t = self.step_weight(n - 2, e);
            if n - 2 == m + 1 {
                w[2] = y;
            }
            let mut i = n - 2;
            while i > m - 1 {
                let t_next = self.step_weight(i - 1, e);
                let y_next = (2.0 * (1.0 + 5.0 * t) * y - (1.0 - t_prev) * y_prev) / (1.0 - t_next);
                y_prev = y;
                y = y_next;
                t_prev = t;
                t = t_next;
                if y.abs() > RENORM_LIMIT {
                    y *= RENORM_SCALE;
                    y_prev *= RENORM_SCALE;
                    w[1] *= RENORM_SCALE;
                    w[2] *= RENORM_SCALE;
                }
                if i - 1 == m + 1 {
                    w[2] = y;
                } else if i - 1 == m {
                    w[1] = y;
                } else if i - 1 == m - 1 {
                    w[0] = y;
                }
                i -= 1;
            }
        }

        if o[1] == 0.0 || w[1] == 0.0 {
            return None;
        }
        let out_slope = (o[2] - o[0]) / o[1];
        let in_slope = (w[2] - w[0]) / w[1];
        Some((out_slope - in_slope) / (2.0 * self.h))
    }

    /// Grid index of the classical turning point nearest the preferred
    /// match position; falls back to the preferred position itself.
    fn match_index(&self, e: f64, match_fraction: f64) -> usize {
        let n = self.v.len();
        let target = (match_fraction * (n - 1) as f64) as usize;
        let mut best: Option<usize> = None;
        for i in self.start + 1..n - 1 {
            if (self.v[i] - e) * (self.v[i + 1] - e) <= 0.0 {
                let better = match best {
                    Some(j) => {
                        (i as i64 - target as i64).abs() < (j as i64 - target as i64).abs()
                    }
                    None => true,
                };
                if better {
                    best = Some(i);
                }
            }
        }
        best.unwrap_or(target).clamp(self.start + 3, n - 3)
    }

    /// Bound-state search: for each k, bisect on the node count until the
    /// bracket is narrow, then finish on the derivative mismatch if it
    /// changes sign there (fall back to node bisection otherwise).
    fn levels(
        &self,
        bracket: (f64, f64),
        e_tol_rel: f64,
        match_fraction: f64,
        max_levels: usize,
    ) -> Result<Vec<f64>, OracleError> {
        let (e_lo, e_hi) = bracket;
        if !(e_lo < e_hi) {
            return Err(OracleError::Config("empty energy bracket".into()));
        }
        let total = self.count_nodes(e_hi).min(max_levels);
        let mut out = Vec::with_capacity(total);
        for k in 0..total {
            let mut a = if k == 0 { e_lo } else { out[k - 1] };
            let mut b = e_hi;
            if self.count_nodes(a) > k {
                return Err(OracleError::NoConvergence(format!(
                    "node count below bracket start exceeds level index {k}"
                )));
            }
            // Node-count bisection: monotone, cannot lose the eigenvalue.
            let coarse_width = (b - a) * 2.0_f64.powi(-18);
            while b - a > coarse_width {
                let mid = 0.5 * (a + b);
                if self.count_nodes(mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            // Mismatch polish inside the isolated bracket.
            let tol = |x: f64| e_tol_rel * x.abs().max(f64::MIN_POSITIVE);
            let wa = self.mismatch(a, match_fraction);
            let wb = self.mismatch(b, match_fraction);
            if let (Some(mut fa), Some(fb)) = (wa, wb) {
                if fa.signum() != fb.signum() && fa.is_finite() && fb.is_finite() {
                    while b - a > tol(b) {
                        let mid = 0.5 * (a + b);
                        match self.mismatch(mid, match_fraction) {
                            Some(fm) if fm.signum() == fa.signum() => {
                                a = mid;
                                fa = fm;
                            }
                            Some(_) => b = mid,
                            None => break,
                        }
                    }
                }
            }
            // Remaining width (if the polish bailed) closed by node count.
            while b - a > tol(b) {
                let mid = 0.5 * (a + b);
                if self.count_nodes(mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            out.push(0.5 * (a + b));
        }
        Ok(out)
    }
}

/// Bound states of an arbitrary radial potential, for self-tests and custom
/// effective potentials. `bracket` is the open energy window searched.
pub fn numerov_levels_fn<F: Fn(f64) -> f64>(
    potential: F,
    hbar2_over_2mu: f64,
    bracket: (f64, f64),
    cfg: &NumerovConfig,
    max_levels: usize,
) -> Result<Vec<BoundLevel>, OracleError> {
    cfg.validate()?;
    let grid = ShootingGrid::build(|r| Ok(potential(r)), cfg, hbar2_over_2mu)?;
    let energies = grid.levels(bracket, cfg.e_tol_rel, cfg.match_fraction, max_levels)?;
    Ok(energies
        .into_iter()
        .enumerate()
        .map(|(k, e)| BoundLevel {
            n_r: k,
            l: 0,
            energy: e,
            method: Method::Oracle,
            residual: cfg.e_tol_rel,
        })
        .collect())
}

/// Bound states of the Tietz-Wei potential with the configured centrifugal
/// term, searched inside (0, D).
pub fn numerov_levels(
    p: &PotentialParams,
    l: usize,
    cfg: &NumerovConfig,
    max_levels: usize,
) -> Result<Vec<BoundLevel>, OracleError> {
    cfg.validate()?;
    let ll = (l * (l + 1)) as f64;
    let approx = match cfg.centrifugal_mode {
        CentrifugalMode::Approximated => Some(fit_centrifugal_approx(p)?),
        _ => None,
    };
    let grid = ShootingGrid::build(
        |r| {
            let mut v = potential_eval(p, r)?;
            match cfg.centrifugal_mode {
                CentrifugalMode::Exact => v += ll * p.hbar2_over_2mu / (r * r),
                CentrifugalMode::Approximated => {
                    v += ll * p.hbar2_over_2mu * approx.as_ref().unwrap().eval(p, r)
                }
                CentrifugalMode::None => {}
            }
            Ok(v)
        },
        cfg,
        p.hbar2_over_2mu,
    )?;
    let eps = 1e-9;
    let bracket = (eps * p.well_depth, (1.0 - eps) * p.well_depth);
    let energies = grid.levels(bracket, cfg.e_tol_rel, cfg.match_fraction, max_levels)?;
    Ok(energies
        .into_iter()
        .enumerate()
        .map(|(k, e)| BoundLevel {
            n_r: k,
            l,
            energy: e,
            method: Method::Oracle,
            residual: cfg.e_tol_rel,
        })
        .collect())
}

/// Outcome of a grid-halving convergence check.
#[derive(Debug, Clone, Copy)]
pub struct RichardsonReport {
    /// Largest relative level shift between the n-point and (2n-1)-point
    /// grids.
    pub max_shift_rel: f64,
    /// Number of levels compared.
    pub levels_compared: usize,
}

impl RichardsonReport {
    /// The oracle's own coarseness contract: the grid is suspect when
    /// halving the step moves any level by more than 10x the eigenvalue
    /// tolerance.
    pub fn is_coarse(&self, e_tol_rel: f64) -> bool {
        self.max_shift_rel > 10.0 * e_tol_rel
    }
}

/// Re-solves on a doubled grid and reports the largest relative level
/// shift. Numerov is fourth order, so consecutive shifts should drop by
/// ~16x per halving in the asymptotic regime.
pub fn richardson_check(
    p: &PotentialParams,
    l: usize,
    cfg: &NumerovConfig,
) -> Result<RichardsonReport, OracleError> {
    let coarse = numerov_levels(p, l, cfg, usize::MAX)?;
    let mut fine_cfg = cfg.clone();
    fine_cfg.n_points = 2 * cfg.n_points - 1;
    let fine = numerov_levels(p, l, &fine_cfg, usize::MAX)?;
    let mut max_shift = 0.0_f64;
    let compared = coarse.len().min(fine.len());
    for i in 0..compared {
        let shift = ((coarse[i].energy - fine[i].energy) / fine[i].energy).abs();
        max_shift = max_shift.max(shift);
    }
    Ok(RichardsonReport {
        max_shift_rel: max_shift,
        levels_compared: compared,
    })
}
