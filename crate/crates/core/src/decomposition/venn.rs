use serde::Serialize;

use super::sums::{validate_model, SubsetSs};
use crate::error::Result;
use crate::ols::{fit_ols, CenteredData};

/// Relative size below which the common region counts as zero.
pub const COMMON_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniqueRegion {
    pub predictor: String,
    pub ss: f64,
}

/// Region accounting of the response's variation for one model.
///
/// `unique` holds each predictor's partial SS. `common_total` is what the
/// classical regression SS credits beyond those, and is exactly the
/// variation the partial decomposition leaves unaccounted for (`missing`).
/// It is signed: a negative value means suppression.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VennRegions {
    pub unique: Vec<UniqueRegion>,
    pub common_total: f64,
    pub residual: f64,
    pub ss_total: f64,
    pub ss_regression: f64,
    pub accounted_total: f64,
    pub missing: f64,
    pub missing_fraction: f64,
}

impl VennRegions {
    pub fn unique_sum(&self) -> f64 {
        self.unique.iter().map(|u| u.ss).sum()
    }

    pub fn unique_of(&self, predictor: &str) -> Option<f64> {
        self.unique
            .iter()
            .find(|u| u.predictor == predictor)
            .map(|u| u.ss)
    }

    /// No common region beyond rounding: `|common| ≤ COMMON_TOLERANCE · SS(total)`.
    pub fn is_orthogonal(&self) -> bool {
        self.common_total.abs() <= COMMON_TOLERANCE * self.ss_total
    }

    pub fn is_suppression(&self) -> bool {
        self.common_total < 0.0 && !self.is_orthogonal()
    }
}

pub fn venn_regions<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<VennRegions> {
    let model = validate_model(c, model)?;
    let fit = fit_ols(c, &model)?;
    let mut memo = SubsetSs::new(c, &model);
    let unique = model
        .iter()
        .map(|m| {
            Ok(UniqueRegion {
                predictor: m.clone(),
                ss: memo.partial(m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(regions_from(unique, fit.ss_regression, fit.ss_residual, fit.ss_total))
}

pub(crate) fn regions_from(
    unique: Vec<UniqueRegion>,
    ss_regression: f64,
    residual: f64,
    ss_total: f64,
) -> VennRegions {
    let unique_sum: f64 = unique.iter().map(|u| u.ss).sum();
    let accounted_total = unique_sum + residual;
    let missing = ss_total - accounted_total;
    VennRegions {
        unique,
        common_total: ss_regression - unique_sum,
        residual,
        ss_total,
        ss_regression,
        accounted_total,
        missing,
        missing_fraction: missing / ss_total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ols::{mean_center, Column, Dataset};

    #[test]
    fn orthogonal_predictors_leave_nothing_missing() {
        let d = Dataset::new(
            vec![
                Column::new("y", vec![1.0, 4.0, 2.0, 7.0, 3.0, 5.0]),
                Column::new("a", vec![-1.0, 1.0, -1.0, 1.0, 0.0, 0.0]),
                Column::new("b", vec![-1.0, -1.0, 1.0, 1.0, 0.0, 0.0]),
            ],
            "y",
            &["a", "b"],
        )
        .unwrap();
        let c = mean_center(&d).unwrap();
        let v = venn_regions(&c, &["a", "b"]).unwrap();
        assert!(v.common_total.abs() < 1e-12 * v.ss_total);
        assert!(v.missing.abs() < 1e-12 * v.ss_total);
        assert!((v.accounted_total - v.ss_total).abs() < 1e-12 * v.ss_total);
        assert!(v.is_orthogonal());
        assert!(!v.is_suppression());
    }

    #[test]
    fn suppression_is_reported_signed() {
        // b is a's measurement error: nearly uncorrelated with y, yet it
        // sharpens a once both are in the model
        let d = Dataset::new(
            vec![
                Column::new("y", vec![1.3, 1.8, 3.1, 3.6, 5.2, 6.0, 6.9, 8.1]),
                Column::new("a", vec![2.0, 1.0, 5.0, 4.0, 3.0, 7.0, 6.0, 8.0]),
                Column::new("b", vec![1.0, -1.0, 2.0, 0.0, -2.0, 1.0, -1.0, 0.0]),
            ],
            "y",
            &["a", "b"],
        )
        .unwrap();
        let c = mean_center(&d).unwrap();
        let v = venn_regions(&c, &["a", "b"]).unwrap();
        assert!(v.is_suppression(), "common = {}", v.common_total);
        let sum = v.unique_sum() + v.common_total + v.residual;
        assert!((sum - v.ss_total).abs() < 1e-10 * v.ss_total);
    }
}
