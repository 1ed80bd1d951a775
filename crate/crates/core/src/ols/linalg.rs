//! Small dense symmetric positive-definite solves for the normal equations.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

/// Designs whose scaled cross-product matrix has a reciprocal condition
/// number below this are rejected as singular.
pub const RCOND_THRESHOLD: f64 = 1e-12;

pub(crate) struct SpdSolve {
    pub solution: Vec<f64>,
    pub inverse: Vec<Vec<f64>>,
}

/// Reciprocal 2-norm condition number of `a` after scaling to unit diagonal.
/// Returns 0 when any diagonal entry is not strictly positive.
pub(crate) fn scaled_rcond(a: &[Vec<f64>]) -> f64 {
    let k = a.len();
    let d: Vec<f64> = (0..k).map(|i| a[i][i]).collect();
    if d.iter().any(|v| v.is_nan() || *v <= 0.0) {
        return 0.0;
    }
    let scaled = DMatrix::from_fn(k, k, |i, j| a[i][j] / (d[i].sqrt() * d[j].sqrt()));
    let eig = SymmetricEigen::new(scaled).eigenvalues;
    let max = eig.max();
    let min = eig.min();
    if max <= 0.0 {
        return 0.0;
    }
    (min / max).max(0.0)
}

/// Solves `a x = rhs` for symmetric positive-definite `a` and also returns
/// `a⁻¹`. `Err(rcond)` when `a` is numerically singular.
pub(crate) fn solve_spd(a: &[Vec<f64>], rhs: &[f64]) -> Result<SpdSolve, f64> {
    let k = a.len();
    let rcond = scaled_rcond(a);
    if rcond < RCOND_THRESHOLD {
        return Err(rcond);
    }
    let m = DMatrix::from_fn(k, k, |i, j| a[i][j]);
    let chol = m.cholesky().ok_or(rcond)?;
    let x = chol.solve(&DVector::from_column_slice(rhs));
    let inv = chol.inverse();
    Ok(SpdSolve {
        solution: x.iter().copied().collect(),
        inverse: (0..k)
            .map(|i| (0..k).map(|j| inv[(i, j)]).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_two_by_two() {
        let a = vec![vec![4.0, 2.0], vec![2.0, 3.0]];
        let s = solve_spd(&a, &[2.0, 1.0]).unwrap();
        // 4x + 2y = 2, 2x + 3y = 1  =>  x = 0.5, y = 0
        assert!((s.solution[0] - 0.5).abs() < 1e-15);
        assert!(s.solution[1].abs() < 1e-15);
        assert!((s.inverse[0][0] - 3.0 / 8.0).abs() < 1e-15);
        assert!((s.inverse[0][1] + 2.0 / 8.0).abs() < 1e-15);
    }

    #[test]
    fn duplicate_columns_are_singular() {
        let a = vec![vec![5.0, 5.0], vec![5.0, 5.0]];
        assert!(solve_spd(&a, &[1.0, 1.0]).is_err());
        assert_eq!(scaled_rcond(&[vec![0.0]]), 0.0);
    }

    #[test]
    fn scaling_does_not_affect_rcond() {
        let a = vec![vec![1.0, 0.5], vec![0.5, 1.0]];
        let b = vec![vec![1e6, 0.5e3], vec![0.5e3, 1.0]];
        assert!((scaled_rcond(&a) - scaled_rcond(&b)).abs() < 1e-12);
        assert!((scaled_rcond(&a) - 0.5 / 1.5).abs() < 1e-12);
    }
}
