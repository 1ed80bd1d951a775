use serde::Serialize;

use super::dataset::{dot, mean_sd, CenteredData};
use super::linalg::solve_spd;
use super::sscp::cross_products;
use crate::error::{Error, Result};

/// An ordinary-least-squares fit with an intercept, computed on centered data.
///
/// `fitted` is on the original response scale; `residuals` sum to zero.
/// `ss_regression` is `b'X'y` and `ss_residual` is `Σ e²`, so
/// `ss_total = ss_regression + ss_residual` holds up to rounding for every fit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OlsFit {
    pub predictor_subset: Vec<String>,
    pub b: Vec<f64>,
    pub intercept: f64,
    pub fitted: Vec<f64>,
    pub residuals: Vec<f64>,
    pub ss_total: f64,
    pub ss_regression: f64,
    pub ss_residual: f64,
    pub df_model: usize,
    pub df_residual: usize,
    pub r2: f64,
    pub f: f64,
    pub se: Vec<f64>,
    pub t: Vec<f64>,
    pub z: Vec<f64>,
}

impl OlsFit {
    pub fn n(&self) -> usize {
        self.residuals.len()
    }

    pub fn ms_regression(&self) -> f64 {
        self.ss_regression / self.df_model as f64
    }

    pub fn ms_residual(&self) -> f64 {
        self.ss_residual / self.df_residual as f64
    }

    pub fn coefficient(&self, name: &str) -> Option<f64> {
        self.index_of(name).map(|i| self.b[i])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.predictor_subset.iter().position(|p| p == name)
    }
}

/// One centered regressor column. `mean` only feeds the intercept and `sd`
/// only feeds the standardized coefficient.
#[derive(Debug, Clone, Copy)]
pub struct Regressor<'a> {
    pub name: &'a str,
    pub values: &'a [f64],
    pub mean: f64,
    pub sd: f64,
}

impl<'a> Regressor<'a> {
    /// A derived column (e.g. a residualized predictor); mean and sd are
    /// taken from the values themselves.
    pub fn derived(name: &'a str, values: &'a [f64]) -> Self {
        let (mean, sd) = mean_sd(values);
        Self {
            name,
            values,
            mean,
            sd,
        }
    }
}

/// Fits the centered response of `c` on arbitrary centered regressors.
pub fn fit_regressors(c: &CenteredData, regressors: &[Regressor<'_>]) -> Result<OlsFit> {
    if regressors.is_empty() {
        return Err(Error::EmptySubset);
    }
    let y = c.y();
    let n = y.len();
    let k = regressors.len();
    if n < k + 2 {
        return Err(Error::InsufficientObservations { n, p: k });
    }
    let names: Vec<String> = regressors.iter().map(|r| r.name.to_string()).collect();
    let cols: Vec<&[f64]> = regressors.iter().map(|r| r.values).collect();

    let xtx = cross_products(&cols);
    let xty: Vec<f64> = cols.iter().map(|x| dot(x, y)).collect();
    let solved = solve_spd(&xtx, &xty).map_err(|rcond| Error::SingularDesign {
        subset: names.clone(),
        rcond,
    })?;
    let b = solved.solution;

    let y_mean = c.means()[0];
    let y_sd = c.sds()[0];
    let mut centered_fit = vec![0.0; n];
    for (bj, x) in b.iter().zip(&cols) {
        for (f, xi) in centered_fit.iter_mut().zip(x.iter()) {
            *f += bj * xi;
        }
    }
    let residuals: Vec<f64> = y.iter().zip(&centered_fit).map(|(a, f)| a - f).collect();
    let fitted: Vec<f64> = centered_fit.iter().map(|f| f + y_mean).collect();

    let ss_total = dot(y, y);
    let ss_regression = dot(&b, &xty);
    let ss_residual = dot(&residuals, &residuals);
    let df_model = k;
    let df_residual = n - k - 1;
    let ms_residual = ss_residual / df_residual as f64;

    let se: Vec<f64> = (0..k)
        .map(|j| (ms_residual * solved.inverse[j][j]).sqrt())
        .collect();
    let t = b.iter().zip(&se).map(|(bj, s)| bj / s).collect();
    let z = b
        .iter()
        .zip(regressors)
        .map(|(bj, r)| bj * r.sd / y_sd)
        .collect();
    let intercept = y_mean - b.iter().zip(regressors).map(|(bj, r)| bj * r.mean).sum::<f64>();

    Ok(OlsFit {
        predictor_subset: names,
        b,
        intercept,
        fitted,
        residuals,
        ss_total,
        ss_regression,
        ss_residual,
        df_model,
        df_residual,
        r2: ss_regression / ss_total,
        f: (ss_regression / df_model as f64) / ms_residual,
        se,
        t,
        z,
    })
}

/// Regressors for a named predictor subset, in the given order.
pub(crate) fn named_regressors<'a, S: AsRef<str>>(
    c: &'a CenteredData,
    subset: &'a [S],
) -> Result<Vec<Regressor<'a>>> {
    subset
        .iter()
        .map(|name| {
            let name = name.as_ref();
            let i = c.predictor_index(name)?;
            Ok(Regressor {
                name,
                values: &c.x()[i],
                mean: c.means()[i + 1],
                sd: c.sds()[i + 1],
            })
        })
        .collect()
}

/// OLS of the response on the named predictors (order preserved in the output).
pub fn fit_ols<S: AsRef<str>>(c: &CenteredData, subset: &[S]) -> Result<OlsFit> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let regs = named_regressors(c, subset)?;
    fit_regressors(c, &regs)
}
