//! Explicit adaptive Dormand–Prince 5(4) integrator.
//!
//! Only endpoint states are needed by the callers, so no dense output is
//! provided. Step control is the usual elementwise mixed absolute/relative
//! error with a fifth-order step-size update.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct OdeOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_steps: usize,
    pub initial_step: Option<f64>,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_steps: 50_000_000,
            initial_step: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OdeResult {
    pub y: Vec<f64>,
    pub steps_accepted: usize,
    pub steps_rejected: usize,
    pub rhs_evaluations: usize,
}

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// y5 - y4 error weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

/// Integrate dy/dt = rhs(t, y) from t0 to t1 (t1 > t0).
pub fn integrate_adaptive<F>(
    rhs: F,
    t0: f64,
    t1: f64,
    y0: &[f64],
    opts: &OdeOptions,
) -> Result<OdeResult>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    if !(t1 > t0) {
        return Err(Error::InvalidParameter(format!(
            "integration horizon must satisfy t1 > t0 (got {t0} -> {t1})"
        )));
    }
    let n = y0.len();
    let mut y = y0.to_vec();
    let mut t = t0;
    let mut k1 = vec![0.0; n];
    let mut k2 = vec![0.0; n];
    let mut k3 = vec![0.0; n];
    let mut k4 = vec![0.0; n];
    let mut k5 = vec![0.0; n];
    let mut k6 = vec![0.0; n];
    let mut k7 = vec![0.0; n];
    let mut ytmp = vec![0.0; n];
    let mut ynew = vec![0.0; n];

    rhs(t, &y, &mut k1);
    let mut evals = 1usize;

    let mut h = opts.initial_step.unwrap_or_else(|| {
        // crude first step from the rhs magnitude
        let ynorm = y.iter().fold(0.0f64, |a, &b| a.max(b.abs())).max(opts.abs_tol);
        let fnorm = k1.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        if fnorm > 0.0 {
            (0.01 * ynorm / fnorm).min(t1 - t0)
        } else {
            (t1 - t0) / 100.0
        }
    });

    let mut accepted = 0usize;
    let mut rejected = 0usize;

    for _ in 0..opts.max_steps {
        if t >= t1 {
            return Ok(OdeResult {
                y,
                steps_accepted: accepted,
                steps_rejected: rejected,
                rhs_evaluations: evals,
            });
        }
        h = h.min(t1 - t);

        for i in 0..n {
            ytmp[i] = y[i] + h * A21 * k1[i];
        }
        rhs(t + h / 5.0, &ytmp, &mut k2);
        for i in 0..n {
            ytmp[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
        }
        rhs(t + 3.0 * h / 10.0, &ytmp, &mut k3);
        for i in 0..n {
            ytmp[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
        }
        rhs(t + 4.0 * h / 5.0, &ytmp, &mut k4);
        for i in 0..n {
            ytmp[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
        }
        rhs(t + 8.0 * h / 9.0, &ytmp, &mut k5);
        for i in 0..n {
            ytmp[i] =
                y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
        }
        rhs(t + h, &ytmp, &mut k6);
        for i in 0..n {
            ynew[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
        }
        rhs(t + h, &ynew, &mut k7);
        evals += 6;

        let mut err = 0.0f64;
        for i in 0..n {
            let e = h
                * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let tol = opts.abs_tol + opts.rel_tol * y[i].abs().max(ynew[i].abs());
            err = err.max((e / tol).abs());
        }

        if err <= 1.0 {
            t += h;
            std::mem::swap(&mut y, &mut ynew);
            std::mem::swap(&mut k1, &mut k7); // FSAL: k7 was evaluated at the accepted state
            accepted += 1;
        } else {
            rejected += 1; // k1 still belongs to the retained y
        }
        let factor = if err > 0.0 {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h *= factor;
        if !h.is_finite() || h <= f64::EPSILON * t.abs().max(1.0) {
            return Err(Error::NoConvergence(format!(
                "step size collapsed to {h:.3e} at t = {t:.6}"
            )));
        }
    }
    Err(Error::NoConvergence(format!(
        "ODE integration exceeded {} steps",
        opts.max_steps
    )))
}
