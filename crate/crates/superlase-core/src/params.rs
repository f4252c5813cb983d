//! Model parameters and their dimensionless reductions.
//!
//! All downstream physics consumes [`DerivedParams`] only: the coupling ratio
//! `c`, the pump strength `p`, and (away from p = 0) the pulse parameters
//! `s`, `d`, `epsilon`. Time is measured in units of 1/gamma_b throughout.

use crate::error::{Error, Result};

/// Physical rates of the three-level laser, sharing one time unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Number of atoms.
    pub n_atoms: u32,
    /// Classical pump Rabi frequency.
    pub omega: f64,
    /// Atom-field coupling on the 2 <-> 1 transition.
    pub g12: f64,
    /// Atom-field coupling on the 1 <-> 0 transition.
    pub g01: f64,
    /// Damping rate of the a-mode.
    pub kappa_a: f64,
    /// Damping rate of the b-mode.
    pub kappa_b: f64,
}

/// Dimensionless pulse parameters, defined only for p > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseParams {
    /// s = (Gamma_a + Gamma_b) / (2 Omega) = (1 + c) / (2 p sqrt(c)).
    pub s: f64,
    /// d = (Gamma_b - Gamma_a) / (2 Omega) = (1 - c) / (2 p sqrt(c)).
    pub d: f64,
    /// epsilon = d / s = (1 - c) / (1 + c).
    pub epsilon: f64,
}

/// Derived parameter set; the single source of truth for every symbol used
/// by the solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub n_atoms: u32,
    /// gamma_a = g12^2 / kappa_a; absent when built from dimensionless inputs.
    pub gamma_a: Option<f64>,
    /// gamma_b = g01^2 / kappa_b; absent when built from dimensionless inputs.
    pub gamma_b: Option<f64>,
    /// Collective rate Gamma_a = N gamma_a; absent without physical rates.
    pub big_gamma_a: Option<f64>,
    /// Collective rate Gamma_b = N gamma_b; absent without physical rates.
    pub big_gamma_b: Option<f64>,
    /// Coupling ratio c = gamma_a / gamma_b.
    pub c: f64,
    /// Pump strength p = Omega / (N sqrt(c) gamma_b).
    pub p: f64,
    /// Pulse parameters; `None` exactly when p = 0.
    pub pulse: Option<PulseParams>,
}

fn pulse_params(c: f64, p: f64) -> Option<PulseParams> {
    if p == 0.0 {
        return None;
    }
    let den = 2.0 * p * c.sqrt();
    let s = (1.0 + c) / den;
    let d = (1.0 - c) / den;
    Some(PulseParams { s, d, epsilon: d / s })
}

/// Reduce physical rates to the dimensionless set.
pub fn derive(params: &PhysicalParams) -> Result<DerivedParams> {
    if params.n_atoms == 0 {
        return Err(Error::InvalidParameter("atom count N must be at least 1".into()));
    }
    for (name, v) in [
        ("g12", params.g12),
        ("g01", params.g01),
        ("kappa_a", params.kappa_a),
        ("kappa_b", params.kappa_b),
    ] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "rate {name} must be strictly positive, got {v}"
            )));
        }
    }
    if !(params.omega >= 0.0) || !params.omega.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "pump amplitude Omega must be non-negative, got {}",
            params.omega
        )));
    }
    let gamma_a = params.g12 * params.g12 / params.kappa_a;
    let gamma_b = params.g01 * params.g01 / params.kappa_b;
    let c = gamma_a / gamma_b;
    let n = params.n_atoms as f64;
    let p = params.omega / (n * c.sqrt() * gamma_b);
    Ok(DerivedParams {
        n_atoms: params.n_atoms,
        gamma_a: Some(gamma_a),
        gamma_b: Some(gamma_b),
        big_gamma_a: Some(gamma_a * n),
        big_gamma_b: Some(gamma_b * n),
        c,
        p,
        pulse: pulse_params(c, p),
    })
}

/// Build a consistent parameter set directly from the dimensionless triple
/// (N, c, p), as the stationary computations are parameterized. Physical
/// rates stay unset.
pub fn stationary_inputs(n_atoms: u32, c: f64, p: f64) -> Result<DerivedParams> {
    if n_atoms == 0 {
        return Err(Error::InvalidParameter("atom count N must be at least 1".into()));
    }
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "coupling ratio c must be strictly positive, got {c}"
        )));
    }
    if !(p >= 0.0) || !p.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "pump strength p must be non-negative, got {p}"
        )));
    }
    Ok(DerivedParams {
        n_atoms,
        gamma_a: None,
        gamma_b: None,
        big_gamma_a: None,
        big_gamma_b: None,
        c,
        p,
        pulse: pulse_params(c, p),
    })
}
