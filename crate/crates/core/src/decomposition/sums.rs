use std::collections::{HashMap, HashSet};

use super::ordering::Ordering;
use super::residualize::residualize;
use crate::error::{Error, Result};
use crate::ols::{dot, fit_ols, mean_sd, CenteredData, OlsFit};

/// Checks that `model` is a non-empty list of distinct known predictors.
pub(crate) fn validate_model<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<Vec<String>> {
    if model.is_empty() {
        return Err(Error::EmptySubset);
    }
    if model.len() > u64::BITS as usize {
        return Err(Error::InvalidSpec(format!(
            "{} predictors exceed the supported maximum of {}",
            model.len(),
            u64::BITS
        )));
    }
    let mut seen = HashSet::new();
    for m in model {
        let m = m.as_ref();
        c.predictor_index(m)?;
        if !seen.insert(m) {
            return Err(Error::DuplicateName(m.to_string()));
        }
    }
    Ok(model.iter().map(|s| s.as_ref().to_string()).collect())
}

/// Memoized regression SS of every subset of a model, keyed by bitmask
/// over the model's positions. The empty subset has SS 0.
pub(crate) struct SubsetSs<'a> {
    c: &'a CenteredData,
    model: Vec<String>,
    cache: HashMap<u64, f64>,
}

impl<'a> SubsetSs<'a> {
    pub fn new(c: &'a CenteredData, model: &[String]) -> Self {
        Self {
            c,
            model: model.to_vec(),
            cache: HashMap::from([(0, 0.0)]),
        }
    }

    pub fn position(&self, name: &str) -> Result<usize> {
        self.model
            .iter()
            .position(|m| m == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.model.len()) - 1
    }

    pub fn ss(&mut self, mask: u64) -> Result<f64> {
        if let Some(v) = self.cache.get(&mask) {
            return Ok(*v);
        }
        let subset: Vec<&str> = self
            .model
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, m)| m.as_str())
            .collect();
        let v = fit_ols(self.c, &subset)?.ss_regression;
        self.cache.insert(mask, v);
        Ok(v)
    }

    /// Type I increments along `ord`.
    pub fn sequential(&mut self, ord: &Ordering) -> Result<Vec<(String, f64)>> {
        let mut mask = 0u64;
        let mut prev = 0.0;
        let mut out = Vec::with_capacity(ord.len());
        for name in ord.names() {
            mask |= 1 << self.position(name)?;
            let cur = self.ss(mask)?;
            out.push((name.clone(), cur - prev));
            prev = cur;
        }
        Ok(out)
    }

    /// SS(full) − SS(full without `name`).
    pub fn partial(&mut self, name: &str) -> Result<f64> {
        let full = self.full_mask();
        let without = full & !(1 << self.position(name)?);
        Ok(self.ss(full)? - self.ss(without)?)
    }
}

/// Sequential (Type I) sums of squares: each predictor's increment in
/// regression SS when appended after the ones before it in `ord`.
pub fn sequential_ss(c: &CenteredData, ord: &Ordering) -> Result<Vec<(String, f64)>> {
    let model = validate_model(c, ord.names())?;
    SubsetSs::new(c, &model).sequential(ord)
}

/// Partial (Type III) SS of `predictor`: SS(model) − SS(model without it).
pub fn partial_ss<S: AsRef<str>>(c: &CenteredData, predictor: &str, model: &[S]) -> Result<f64> {
    let model = validate_model(c, model)?;
    if !model.iter().any(|m| m == predictor) {
        c.predictor_index(predictor)?;
        return Err(Error::InvalidSpec(format!(
            "`{predictor}` is not part of the model"
        )));
    }
    SubsetSs::new(c, &model).partial(predictor)
}

/// Σ of the partial SS over every predictor in `model`.
pub fn actual_model_ss<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<f64> {
    let model = validate_model(c, model)?;
    let mut memo = SubsetSs::new(c, &model);
    model.iter().map(|m| memo.partial(m)).sum()
}

/// Model SS built from the full-fit coefficients and the cross-products of
/// each residualized predictor with the response: Σⱼ bⱼ·Σ(Xⱼ|rest · Y).
pub fn ss_via_residualized_crossproducts<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<f64> {
    let model = validate_model(c, model)?;
    let fit = fit_ols(c, &model)?;
    let mut total = 0.0;
    for (j, name) in model.iter().enumerate() {
        let rest = others(&model, name);
        let r = residualize(c, name, &rest)?;
        total += fit.b[j] * dot(&r.values, c.y());
    }
    Ok(total)
}

/// Actual model SS over total SS.
pub fn corrected_r2<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<f64> {
    Ok(actual_model_ss(c, model)? / c.ss_total())
}

/// Σ zⱼ² with zⱼ = bⱼ·sd(Xⱼ|rest)/sd(Y), using the full-fit slopes.
pub fn corrected_r2_from_residualized_z<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<f64> {
    let model = validate_model(c, model)?;
    let fit = fit_ols(c, &model)?;
    let sd_y = c.sds()[0];
    let mut total = 0.0;
    for (j, name) in model.iter().enumerate() {
        let r = residualize(c, name, &others(&model, name))?;
        let sd = mean_sd(&r.values).1;
        let z = fit.b[j] * sd / sd_y;
        total += z * z;
    }
    Ok(total)
}

/// [actual model SS / p] / MS(residual) of the full fit.
pub fn corrected_f<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<f64> {
    let model = validate_model(c, model)?;
    let fit = fit_ols(c, &model)?;
    let actual = actual_model_ss(c, &model)?;
    Ok((actual / model.len() as f64) / fit.ms_residual())
}

/// Mean of the squared t statistics of the full fit.
pub fn corrected_f_from_t(fit: &OlsFit) -> f64 {
    fit.t.iter().map(|t| t * t).sum::<f64>() / fit.t.len() as f64
}

pub(crate) fn others(model: &[String], name: &str) -> Vec<String> {
    model.iter().filter(|m| *m != name).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ols::{mean_center, Column, Dataset};

    fn data() -> CenteredData {
        let d = Dataset::new(
            vec![
                Column::new("y", vec![3.0, 5.0, 4.0, 9.0, 8.0, 12.0, 10.0, 7.0]),
                Column::new("a", vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 4.5]),
                Column::new("b", vec![2.0, 1.0, 2.5, 3.0, 4.0, 4.5, 6.0, 2.0]),
                Column::new("c", vec![0.0, 1.0, -1.0, 0.5, 2.0, 0.0, -0.5, 1.0]),
            ],
            "y",
            &["a", "b", "c"],
        )
        .unwrap();
        mean_center(&d).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs())
    }

    #[test]
    fn sequential_sums_to_full_regression() {
        let c = data();
        let full = fit_ols(&c, &["a", "b", "c"]).unwrap().ss_regression;
        for ord in super::super::all_orderings(&["a", "b", "c"]).unwrap() {
            let s: f64 = sequential_ss(&c, &ord).unwrap().iter().map(|x| x.1).sum();
            assert!(close(s, full, 1e-12));
        }
    }

    #[test]
    fn partial_of_single_predictor_model_is_its_regression_ss() {
        let c = data();
        let reg = fit_ols(&c, &["b"]).unwrap().ss_regression;
        assert!(close(partial_ss(&c, "b", &["b"]).unwrap(), reg, 1e-14));
    }

    #[test]
    fn partial_matches_t_squared_times_ms_residual() {
        let c = data();
        let model = ["a", "b", "c"];
        let fit = fit_ols(&c, &model).unwrap();
        for (j, name) in model.iter().enumerate() {
            let p = partial_ss(&c, name, &model).unwrap();
            assert!(close(p, fit.t[j].powi(2) * fit.ms_residual(), 1e-9));
        }
        let actual = actual_model_ss(&c, &model).unwrap();
        assert!(close(actual, ss_via_residualized_crossproducts(&c, &model).unwrap(), 1e-9));
        assert!(close(
            corrected_r2(&c, &model).unwrap(),
            corrected_r2_from_residualized_z(&c, &model).unwrap(),
            1e-9
        ));
        assert!(close(corrected_f(&c, &model).unwrap(), corrected_f_from_t(&fit), 1e-9));
    }

    #[test]
    fn model_validation() {
        let c = data();
        assert_eq!(actual_model_ss::<&str>(&c, &[]).unwrap_err(), Error::EmptySubset);
        assert_eq!(
            actual_model_ss(&c, &["a", "a"]).unwrap_err(),
            Error::DuplicateName("a".into())
        );
        assert!(matches!(
            partial_ss(&c, "c", &["a", "b"]),
            Err(Error::InvalidSpec(_))
        ));
    }
}
