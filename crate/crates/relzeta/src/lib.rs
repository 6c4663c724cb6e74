//! Spectral functions of the Laplacian perturbed by a point (delta) interaction.
//!
//! The perturbed operator is a rank-one singular perturbation of the free
//! Laplacian, fixed by a renormalized coupling `g_R`, on one of six
//! geometries: the whole spaces R^1, R^2, R^3 and the half spaces H^1, H^2,
//! H^3 with a Dirichlet wall. The crate computes, in closed form and by
//! independent quadrature:
//!
//! * the trace of the resolvent difference r(lambda) and its rank-one kernel,
//! * the relative spectral measure e(v) obtained from the jump of r across
//!   the continuous spectrum,
//! * the relative zeta function zeta(s) = int v^{-2s} e(v) dv, its analytic
//!   continuation and Laurent data at s = -1/2,
//! * the relative Dedekind eta function, partition function log Z, Casimir
//!   energy and Casimir force,
//! * the point spectrum of the perturbed operator,
//! * brute-force evaluations of every closed-form integral used along the
//!   way, as an internal cross-check suite.
//!
//! Branch convention everywhere: square roots of spectral parameters are
//! taken with positive imaginary part, `Im sqrt(lambda) > 0`.

// reference constants keep their full printed precision, and comparisons of
// the form !(x > 0) deliberately reject NaN
#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bound_states;
pub mod error;
pub mod numerics;
pub mod operator_models;
pub mod oracle_appendix;
pub mod report;
pub mod spectral;
pub mod thermodynamics;
pub mod verification;
pub mod zeta;

pub use error::{Error, Result};
pub use numerics::{QuadratureSpec, ZetaLaurent};
pub use operator_models::{Coupling, Geometry, Model, Space};
