//! Null-space extraction for small sparse operators via dense SVD.
//!
//! The production steady-state solver uses the block-tridiagonal elimination
//! in `steady_state`; this generic routine backs it up on small systems and
//! serves as an oracle in tests.

use crate::error::{Error, Result};
use crate::numerics::sparse::CsrMatrix;

/// Relative singular-value threshold below which a direction counts as null.
pub const NULL_THRESHOLD: f64 = 1e-10;

/// Largest dimension accepted by the dense path.
pub const MAX_DENSE_DIM: usize = 2_500;

/// Solve A v = 0 with trace(v) = 1, where `trace` is a linear functional
/// given by its coefficient vector.
///
/// Fails with [`Error::NullSpaceDegenerate`] when the null space is not
/// one-dimensional and [`Error::Singular`] when there is no null direction
/// or the trace functional vanishes on it.
pub fn null_space_solve(op: &CsrMatrix, trace: &[f64]) -> Result<Vec<f64>> {
    let n = op.n_rows();
    if n != op.n_cols() {
        return Err(Error::InvalidParameter(format!(
            "null-space solve needs a square operator, got {} x {}",
            op.n_rows(),
            op.n_cols()
        )));
    }
    if trace.len() != n {
        return Err(Error::InvalidParameter(
            "trace functional length must match the operator dimension".into(),
        ));
    }
    if n > MAX_DENSE_DIM {
        return Err(Error::InvalidParameter(format!(
            "dense null-space path limited to dimension {MAX_DENSE_DIM}, got {n}"
        )));
    }

    let dense = op.to_dense();
    let svd = dense.clone().svd(false, true);
    let sv = &svd.singular_values;
    let v_t = svd.v_t.as_ref().expect("requested V^T");

    let sigma_max = sv.iter().cloned().fold(0.0, f64::max);
    if sigma_max == 0.0 {
        return Err(Error::NullSpaceDegenerate("operator is identically zero".into()));
    }
    // locate the two smallest singular values without assuming ordering
    let mut i_min = 0usize;
    for i in 0..sv.len() {
        if sv[i] < sv[i_min] {
            i_min = i;
        }
    }
    let mut second = f64::INFINITY;
    for i in 0..sv.len() {
        if i != i_min {
            second = second.min(sv[i]);
        }
    }
    if sv[i_min] > NULL_THRESHOLD * sigma_max {
        return Err(Error::Singular(format!(
            "no null direction: sigma_min / sigma_max = {:.3e}",
            sv[i_min] / sigma_max
        )));
    }
    if second <= NULL_THRESHOLD * sigma_max {
        return Err(Error::NullSpaceDegenerate(format!(
            "at least two vanishing singular values ({:.3e}, {:.3e} relative)",
            sv[i_min] / sigma_max,
            second / sigma_max
        )));
    }

    let mut v: Vec<f64> = (0..n).map(|j| v_t[(i_min, j)]).collect();
    let t: f64 = v.iter().zip(trace).map(|(a, b)| a * b).sum();
    let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if t.abs() <= 1e-12 * norm * trace.iter().map(|x| x * x).sum::<f64>().sqrt() {
        return Err(Error::Singular(
            "trace functional vanishes on the null direction".into(),
        ));
    }
    for x in v.iter_mut() {
        *x /= t;
    }

    // residual certificate
    let mut resid = vec![0.0; n];
    op.apply(&v, &mut resid);
    let r = resid.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    let scale = op.norm_inf() * v.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    if r > 1e-10 * scale.max(1e-300) {
        return Err(Error::NoConvergence(format!(
            "null-vector residual {r:.3e} above certificate 1e-10 * {scale:.3e}"
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_exchange_two_by_two() {
        let op = CsrMatrix::from_triplets(
            2,
            2,
            vec![(0, 0, -1.0), (0, 1, 1.0), (1, 0, 1.0), (1, 1, -1.0)],
        )
        .unwrap();
        let v = null_space_solve(&op, &[1.0, 1.0]).unwrap();
        assert!((v[0] - 0.5).abs() < 1e-12 && (v[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn two_dimensional_kernel_is_rejected() {
        // block-diagonal pair of exchange generators: kernel dimension 2
        let op = CsrMatrix::from_triplets(
            4,
            4,
            vec![
                (0, 0, -1.0),
                (0, 1, 1.0),
                (1, 0, 1.0),
                (1, 1, -1.0),
                (2, 2, -2.0),
                (2, 3, 2.0),
                (3, 2, 2.0),
                (3, 3, -2.0),
            ],
        )
        .unwrap();
        match null_space_solve(&op, &[1.0, 1.0, 1.0, 1.0]) {
            Err(Error::NullSpaceDegenerate(_)) => {}
            other => panic!("expected NullSpaceDegenerate, got {other:?}"),
        }
    }

    #[test]
    fn nonsingular_operator_is_rejected() {
        let op = CsrMatrix::from_triplets(2, 2, vec![(0, 0, 1.0), (1, 1, 2.0)]).unwrap();
        assert!(matches!(
            null_space_solve(&op, &[1.0, 1.0]),
            Err(Error::Singular(_))
        ));
    }
}
