//! Branch-aware complex elementary and special functions, adaptive
//! quadrature on semi-infinite ranges, bracketed root finding and numeric
//! Laurent-coefficient extraction.
//!
//! All operations are pure; nothing here holds global state.

mod bessel;
mod branch;
mod gamma;
mod laurent;
mod quadrature;
mod roots;

pub use bessel::{bessel_j0, bessel_k, bessel_k0, bessel_k1};
pub use branch::{log_neg, sqrt_neg, sqrt_on_cut, sqrt_upper, Rim};
pub use gamma::{gamma_fn, EULER_GAMMA};
pub use laurent::{laurent_extract, ZetaLaurent};
pub use quadrature::{
    integrate_complex_finite, integrate_finite, integrate_semi_infinite,
    integrate_semi_infinite_cells, integrate_semi_infinite_complex, QuadratureSpec,
};
pub use roots::find_root;
