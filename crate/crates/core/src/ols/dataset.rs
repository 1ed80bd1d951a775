use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// A named numeric column.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Column {
    pub name: String,
    pub values: Vec<f64>,
}

impl Column {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Self {
        Self {
            name: name.into(),
            values,
        }
    }
}

/// Raw observations: one response and an ordered list of predictors.
///
/// Construction validates every invariant (equal lengths, finite values,
/// distinct names, `n >= p + 2`), so a `Dataset` in hand is always usable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    columns: Vec<Column>,
    response_name: String,
    predictor_names: Vec<String>,
    n: usize,
}

impl Dataset {
    /// Builds a dataset from `columns`, selecting `response` and `predictors`
    /// by name. Columns not named in either are dropped.
    pub fn new(columns: Vec<Column>, response: &str, predictors: &[&str]) -> Result<Self> {
        if predictors.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut seen = HashSet::new();
        for name in std::iter::once(&response).chain(predictors) {
            if !seen.insert(*name) {
                return Err(Error::DuplicateName(name.to_string()));
            }
        }

        let mut picked = Vec::with_capacity(predictors.len() + 1);
        for name in std::iter::once(&response).chain(predictors) {
            let col = columns
                .iter()
                .find(|c| c.name == *name)
                .ok_or_else(|| Error::UnknownName(name.to_string()))?;
            picked.push(col.clone());
        }

        let n = picked[0].values.len();
        for col in &picked {
            if col.values.len() != n {
                return Err(Error::LengthMismatch {
                    column: col.name.clone(),
                    expected: n,
                    found: col.values.len(),
                });
            }
            if let Some(row) = col.values.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFiniteValue {
                    column: col.name.clone(),
                    row,
                });
            }
        }
        if n < predictors.len() + 2 {
            return Err(Error::InsufficientObservations {
                n,
                p: predictors.len(),
            });
        }

        Ok(Self {
            columns: picked,
            response_name: response.to_string(),
            predictor_names: predictors.iter().map(|s| s.to_string()).collect(),
            n,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.predictor_names.len()
    }

    pub fn response_name(&self) -> &str {
        &self.response_name
    }

    pub fn predictor_names(&self) -> &[String] {
        &self.predictor_names
    }

    /// Response first, then predictors in declared order.
    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.values.as_slice())
    }

    pub fn response(&self) -> &[f64] {
        &self.columns[0].values
    }
}

/// Mean-centered response and predictors, with the original means and
/// sample standard deviations (divisor `n - 1`).
///
/// Index 0 of `means`/`sds` is the response; `1..=p` follow predictor order.
#[derive(Debug, Clone, PartialEq)]
pub struct CenteredData {
    response_name: String,
    predictor_names: Vec<String>,
    y: Vec<f64>,
    x: Vec<Vec<f64>>,
    means: Vec<f64>,
    sds: Vec<f64>,
}

impl CenteredData {
    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn p(&self) -> usize {
        self.x.len()
    }

    pub fn response_name(&self) -> &str {
        &self.response_name
    }

    pub fn predictor_names(&self) -> &[String] {
        &self.predictor_names
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    /// Centered predictor columns, in predictor order.
    pub fn x(&self) -> &[Vec<f64>] {
        &self.x
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn sds(&self) -> &[f64] {
        &self.sds
    }

    /// Position of `name` in the `means`/`sds` layout (response = 0).
    fn slot(&self, name: &str) -> Option<usize> {
        if name == self.response_name {
            return Some(0);
        }
        self.predictor_names
            .iter()
            .position(|p| p == name)
            .map(|i| i + 1)
    }

    pub fn predictor_index(&self, name: &str) -> Result<usize> {
        self.predictor_names
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Centered values of any column, response included.
    pub fn column(&self, name: &str) -> Result<&[f64]> {
        match self.slot(name) {
            Some(0) => Ok(&self.y),
            Some(i) => Ok(&self.x[i - 1]),
            None => Err(Error::UnknownName(name.to_string())),
        }
    }

    pub fn mean(&self, name: &str) -> Result<f64> {
        self.slot(name)
            .map(|i| self.means[i])
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn sd(&self, name: &str) -> Result<f64> {
        self.slot(name)
            .map(|i| self.sds[i])
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Σ y², the total sum of squares of the centered response.
    pub fn ss_total(&self) -> f64 {
        dot(&self.y, &self.y)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Sample mean and standard deviation (divisor `n - 1`).
pub(crate) fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mut mean = values.iter().sum::<f64>() / n;
    // second pass removes the rounding left by the naive mean
    mean += values.iter().map(|v| v - mean).sum::<f64>() / n;
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}

fn center_column(name: &str, values: &[f64]) -> Result<(Vec<f64>, f64, f64)> {
    if let Some(row) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteValue {
            column: name.to_string(),
            row,
        });
    }
    let (mean, sd) = mean_sd(values);
    let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if sd.is_nan() || sd <= scale * f64::EPSILON {
        return Err(Error::ConstantColumn(name.to_string()));
    }
    Ok((values.iter().map(|v| v - mean).collect(), mean, sd))
}

/// Centers every column of `d` on its mean. The dataset itself is untouched.
pub fn mean_center(d: &Dataset) -> Result<CenteredData> {
    let mut means = Vec::with_capacity(d.p() + 1);
    let mut sds = Vec::with_capacity(d.p() + 1);
    let mut centered = Vec::with_capacity(d.p() + 1);
    for col in d.columns() {
        let (c, m, s) = center_column(&col.name, &col.values)?;
        centered.push(c);
        means.push(m);
        sds.push(s);
    }
    let y = centered.remove(0);
    Ok(CenteredData {
        response_name: d.response_name().to_string(),
        predictor_names: d.predictor_names().to_vec(),
        y,
        x: centered,
        means,
        sds,
    })
}
