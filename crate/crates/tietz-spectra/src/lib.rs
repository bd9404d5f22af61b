//! Bound states of diatomic molecules in the Tietz-Wei potential.
//!
//! The deformation parameter c_h splits the problem into four regimes with
//! different analytic structure; this crate implements all of them end to
//! end and cross-checks every analytic result against an independent
//! finite-difference (Numerov) solver:
//!
//! * [`model`] - the potential, its deformed-hyperbolic representations,
//!   regime classification and the centrifugal 1/r^2 replacement;
//! * [`specfun`] - log-gamma and the hypergeometric kernels the closed
//!   forms are built from;
//! * [`spectra`] - bound-state energies: closed form (Case1, Morse) and
//!   transcendental root scans (Case2, Case3);
//! * [`wavefn`] - normalized radial wave functions and overlaps;
//! * [`oracle`] - the Numerov shooting solver used for validation;
//! * [`moldb`] - molecule parameter records;
//! * [`cli`] - the batch command-line front end.
//!
//! Start with the examples; each one exercises a single capability.

// Validation guards are written as `!(x > 0.0)` on purpose: unlike
// `x <= 0.0`, the negated form also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod model;
pub mod moldb;
pub mod oracle;
pub mod quad;
pub mod specfun;
pub mod spectra;
pub mod wavefn;
