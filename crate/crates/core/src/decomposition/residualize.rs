use serde::Serialize;

use crate::error::{Error, Result};
use crate::ols::linalg::solve_spd;
use crate::ols::{cross_products, dot, CenteredData};

/// A predictor with its linear dependence on other predictors removed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualizedPredictor {
    pub target: String,
    pub conditioned_on: Vec<String>,
    pub values: Vec<f64>,
}

impl ResidualizedPredictor {
    /// Display name: `X1|X2,X3`, or just `X1` when nothing was partialled out.
    pub fn label(&self) -> String {
        residual_label(&self.target, &self.conditioned_on)
    }

    pub fn sum_of_squares(&self) -> f64 {
        dot(&self.values, &self.values)
    }
}

pub(crate) fn residual_label<S: AsRef<str>>(target: &str, rest: &[S]) -> String {
    if rest.is_empty() {
        target.to_string()
    } else {
        let rest: Vec<&str> = rest.iter().map(|s| s.as_ref()).collect();
        format!("{target}|{}", rest.join(","))
    }
}

/// Residuals of `target` after least-squares projection onto `basis`
/// (all columns centered, so no intercept term is needed).
pub(crate) fn project_out(target: &[f64], basis: &[&[f64]]) -> std::result::Result<Vec<f64>, f64> {
    if basis.is_empty() {
        return Ok(target.to_vec());
    }
    let xtx = cross_products(basis);
    let xty: Vec<f64> = basis.iter().map(|x| dot(x, target)).collect();
    let coef = solve_spd(&xtx, &xty)?.solution;
    let mut out = target.to_vec();
    for (a, x) in coef.iter().zip(basis) {
        for (o, xi) in out.iter_mut().zip(x.iter()) {
            *o -= a * xi;
        }
    }
    Ok(out)
}

/// Residuals from regressing predictor `target` on the predictors in `against`.
///
/// With `against` empty the centered column comes back unchanged.
pub fn residualize<S: AsRef<str>>(
    c: &CenteredData,
    target: &str,
    against: &[S],
) -> Result<ResidualizedPredictor> {
    let t = c.predictor_index(target)?;
    let mut basis = Vec::with_capacity(against.len());
    for name in against {
        let name = name.as_ref();
        if name == target {
            return Err(Error::TargetInConditioningSet {
                target: target.to_string(),
            });
        }
        basis.push(c.x()[c.predictor_index(name)?].as_slice());
    }
    let conditioned_on: Vec<String> = against.iter().map(|s| s.as_ref().to_string()).collect();
    let values = project_out(&c.x()[t], &basis).map_err(|rcond| Error::SingularDesign {
        subset: conditioned_on.clone(),
        rcond,
    })?;
    Ok(ResidualizedPredictor {
        target: target.to_string(),
        conditioned_on,
        values,
    })
}
