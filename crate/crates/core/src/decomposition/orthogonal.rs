use super::ordering::Ordering;
use super::residualize::{project_out, residual_label, residualize};
use super::sums::{others, validate_model};
use crate::error::{Error, Result};
use crate::ols::{dot, fit_ols, fit_regressors, named_regressors, CenteredData, OlsFit, Regressor};

/// A residualized column keeping less than this fraction of its original
/// sum of squares is treated as collinear with what it was regressed on.
const MIN_RETAINED_FRACTION: f64 = 1e-12;

fn check_retained(name: &str, original: &[f64], residual: &[f64]) -> Result<()> {
    let kept = dot(residual, residual) / dot(original, original);
    if kept < MIN_RETAINED_FRACTION {
        return Err(Error::SingularDesign {
            subset: vec![name.to_string()],
            rcond: kept,
        });
    }
    Ok(())
}

/// Regression on the orthogonal-function sequence implied by `ord`: the
/// first predictor as is, then each later predictor residualized on all
/// predictors before it (`X1`, `X2|X1`, `X3|X1,X2`, ...).
///
/// The design columns are mutually orthogonal, so the fit's SS(regression)
/// equals the full model's, and each residualized term's slope equals that
/// predictor's coefficient in a model of itself and everything before it.
pub fn orthogonal_regression(c: &CenteredData, ord: &Ordering) -> Result<OlsFit> {
    let model = validate_model(c, ord.names())?;
    // surfaces SingularDesign for the original predictors
    fit_ols(c, &model)?;

    let mut labels = Vec::with_capacity(model.len());
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(model.len());
    for (k, name) in model.iter().enumerate() {
        let original = &c.x()[c.predictor_index(name)?];
        if k == 0 {
            labels.push(name.clone());
            columns.push(original.clone());
            continue;
        }
        let basis: Vec<&[f64]> = columns.iter().map(Vec::as_slice).collect();
        let values = project_out(original, &basis).map_err(|rcond| Error::SingularDesign {
            subset: model[..k].to_vec(),
            rcond,
        })?;
        let label = residual_label(name, &model[..k]);
        check_retained(&label, original, &values)?;
        labels.push(label);
        columns.push(values);
    }

    let first = named_regressors(c, &model[..1])?[0];
    let mut regs = vec![Regressor { name: &labels[0], ..first }];
    for (label, values) in labels.iter().zip(&columns).skip(1) {
        regs.push(Regressor::derived(label, values));
    }
    fit_regressors(c, &regs)
}

/// For each predictor, the simple regression of the response on that
/// predictor residualized against the rest of `model`.
///
/// Slopes reproduce the full-model coefficients; each fit's residual df is
/// `n − 2`, as for any simple regression.
pub fn residualized_simple_fits<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<Vec<OlsFit>> {
    let model = validate_model(c, model)?;
    fit_ols(c, &model)?;
    model
        .iter()
        .map(|name| {
            let r = residualize(c, name, &others(&model, name))?;
            let label = r.label();
            check_retained(&label, c.column(name)?, &r.values)?;
            fit_regressors(c, &[Regressor::derived(&label, &r.values)])
        })
        .collect()
}
