//! Shared numerical kernels: scaled modified Bessel functions, adaptive
//! quadrature, sparse operators with a null-space solver, and an explicit
//! adaptive ODE integrator.
//!
//! Every kernel here has an independent slow oracle in its test module.

pub mod bessel;
pub mod kahan;
pub mod nullspace;
pub mod ode;
pub mod quadrature;
pub mod sparse;

pub use bessel::{bessel_i_scaled, bessel_i_scaled_table};
pub use kahan::{CKahan, Kahan};
pub use nullspace::null_space_solve;
pub use ode::{integrate_adaptive, OdeOptions, OdeResult};
pub use quadrature::adaptive_quadrature;
pub use sparse::CsrMatrix;

/// Default series truncation order for Bessel expansions: I_n(s) decays
/// super-exponentially once n exceeds s, so `s + 10 sqrt(s) + 20` leaves a
/// wide safety margin.
pub fn default_truncation(s: f64) -> usize {
    (s + 10.0 * s.sqrt() + 20.0).ceil() as usize
}
