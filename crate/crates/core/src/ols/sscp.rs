use serde::Serialize;

use super::dataset::{dot, CenteredData};
use crate::error::Result;

/// Sums of squares and cross-products over centered columns.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SscpMatrix {
    pub labels: Vec<String>,
    pub m: Vec<Vec<f64>>,
}

impl SscpMatrix {
    /// Builds the matrix from arbitrary (already centered) columns.
    pub fn from_columns(labels: Vec<String>, columns: &[&[f64]]) -> Self {
        let m = cross_products(columns);
        Self { labels, m }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, row: &str, col: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l == row)?;
        let j = self.labels.iter().position(|l| l == col)?;
        Some(self.m[i][j])
    }
}

/// Upper triangle computed once and mirrored, so `m[i][j] == m[j][i]` bit for bit.
pub(crate) fn cross_products(columns: &[&[f64]]) -> Vec<Vec<f64>> {
    let k = columns.len();
    let mut m = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in i..k {
            let v = dot(columns[i], columns[j]);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

/// SSCP of the named centered columns; the response may be included.
pub fn sscp(c: &CenteredData, labels: &[&str]) -> Result<SscpMatrix> {
    let columns = labels
        .iter()
        .map(|l| c.column(l))
        .collect::<Result<Vec<_>>>()?;
    Ok(SscpMatrix::from_columns(
        labels.iter().map(|s| s.to_string()).collect(),
        &columns,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::ols::dataset::{mean_center, Column, Dataset};

    fn data() -> CenteredData {
        let d = Dataset::new(
            vec![
                Column::new("y", vec![2.0, 4.0, 3.0, 9.0, 7.0]),
                Column::new("a", vec![1.0, 2.0, 3.0, 4.0, 5.0]),
                Column::new("b", vec![0.5, -1.0, 2.0, 1.0, 3.5]),
            ],
            "y",
            &["a", "b"],
        )
        .unwrap();
        mean_center(&d).unwrap()
    }

    #[test]
    fn symmetric_with_nonnegative_diagonal() {
        let s = sscp(&data(), &["y", "a", "b"]).unwrap();
        for i in 0..3 {
            assert!(s.m[i][i] >= 0.0);
            for j in 0..3 {
                assert_eq!(s.m[i][j].to_bits(), s.m[j][i].to_bits());
            }
        }
        assert_eq!(s.get("a", "a"), Some(10.0));
    }

    #[test]
    fn single_column_is_scaled_variance() {
        let c = data();
        let s = sscp(&c, &["b"]).unwrap();
        let sd = c.sd("b").unwrap();
        let expected = (c.n() as f64 - 1.0) * sd * sd;
        assert!((s.m[0][0] - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn unknown_label() {
        assert_eq!(
            sscp(&data(), &["a", "zz"]).unwrap_err(),
            Error::UnknownName("zz".into())
        );
    }
}
