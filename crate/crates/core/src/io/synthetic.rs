//! Seeded synthetic regression data with a prescribed predictor correlation.
//!
//! Draws use ChaCha8 seeded from a `u64` and `rand_distr::StandardNormal`,
//! so a given spec yields the same dataset on every platform.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::ols::{Column, Dataset};

const PSD_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub n: usize,
    pub p: usize,
    /// p×p, symmetric, unit diagonal, positive semidefinite.
    pub correlation: Vec<Vec<f64>>,
    pub signal_coefficients: Vec<f64>,
    pub noise_sd: f64,
    pub seed: u64,
}

impl SyntheticSpec {
    /// Uncorrelated predictors, unit coefficients, unit noise.
    pub fn independent(n: usize, p: usize, seed: u64) -> Self {
        Self::equicorrelated(n, p, 0.0, seed)
    }

    /// Every pair of predictors shares correlation `r`.
    pub fn equicorrelated(n: usize, p: usize, r: f64, seed: u64) -> Self {
        let correlation = (0..p)
            .map(|i| (0..p).map(|j| if i == j { 1.0 } else { r }).collect())
            .collect();
        Self {
            n,
            p,
            correlation,
            signal_coefficients: vec![1.0; p],
            noise_sd: 1.0,
            seed,
        }
    }

    /// First-order autoregressive structure: `corr(i, j) = rho^|i-j|`.
    pub fn autoregressive(n: usize, p: usize, rho: f64, seed: u64) -> Self {
        let correlation = (0..p)
            .map(|i| {
                (0..p)
                    .map(|j| rho.powi((i as i32 - j as i32).abs()))
                    .collect()
            })
            .collect();
        Self {
            correlation,
            ..Self::independent(n, p, seed)
        }
    }

    pub fn with_coefficients(mut self, coefficients: Vec<f64>) -> Self {
        self.signal_coefficients = coefficients;
        self
    }

    pub fn with_noise_sd(mut self, noise_sd: f64) -> Self {
        self.noise_sd = noise_sd;
        self
    }

    fn validate(&self) -> Result<()> {
        let p = self.p;
        if p == 0 {
            return Err(Error::InvalidSpec("p must be at least 1".into()));
        }
        if self.n < p + 2 {
            return Err(Error::InsufficientObservations { n: self.n, p });
        }
        if self.correlation.len() != p || self.correlation.iter().any(|r| r.len() != p) {
            return Err(Error::InvalidSpec(format!("correlation must be {p}x{p}")));
        }
        if self.signal_coefficients.len() != p {
            return Err(Error::InvalidSpec(format!(
                "expected {p} signal coefficients, got {}",
                self.signal_coefficients.len()
            )));
        }
        if self.noise_sd <= 0.0 || !self.noise_sd.is_finite() {
            return Err(Error::InvalidSpec("noise_sd must be positive".into()));
        }
        for i in 0..p {
            if (self.correlation[i][i] - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidSpec("correlation diagonal must be 1".into()));
            }
            for j in 0..p {
                let v = self.correlation[i][j];
                if !v.is_finite() || (v - self.correlation[j][i]).abs() > 1e-12 {
                    return Err(Error::InvalidSpec("correlation must be symmetric".into()));
                }
            }
        }
        Ok(())
    }

    fn names(&self) -> (String, Vec<String>) {
        ("Y".to_string(), (1..=self.p).map(|i| format!("X{i}")).collect())
    }
}

/// Square-root factor `F` with `F Fᵀ = correlation`, via the eigendecomposition
/// (which, unlike Cholesky, also accepts singular correlation matrices).
fn correlation_factor(correlation: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let p = correlation.len();
    let m = DMatrix::from_fn(p, p, |i, j| correlation[i][j]);
    let eig = SymmetricEigen::new(m);
    let min = eig.eigenvalues.min();
    if min < -PSD_TOLERANCE {
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: min,
        });
    }
    let sqrt = eig.eigenvalues.map(|l| l.max(0.0).sqrt());
    Ok(&eig.eigenvectors * DMatrix::from_diagonal(&sqrt))
}

fn standard_normal_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| StandardNormal.sample(&mut *rng)).collect())
        .collect()
}

fn assemble(spec: &SyntheticSpec, predictors: Vec<Vec<f64>>, rng: &mut ChaCha8Rng) -> Result<Dataset> {
    let y: Vec<f64> = (0..spec.n)
        .map(|i| {
            let signal: f64 = spec
                .signal_coefficients
                .iter()
                .zip(&predictors)
                .map(|(b, x)| b * x[i])
                .sum();
            let e: f64 = StandardNormal.sample(&mut *rng);
            signal + spec.noise_sd * e
        })
        .collect();
    let (response, names) = spec.names();
    let mut columns = vec![Column::new(response.clone(), y)];
    columns.extend(names.iter().zip(predictors).map(|(n, v)| Column::new(n.clone(), v)));
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Dataset::new(columns, &response, &refs)
}

/// Predictors `X1..Xp` drawn as `F z` with `z` standard normal, then
/// `Y = Σ βⱼ Xⱼ + noise_sd · ε`.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<Dataset> {
    spec.validate()?;
    let factor = correlation_factor(&spec.correlation)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let z = standard_normal_matrix(spec.n, spec.p, &mut rng);
    let predictors: Vec<Vec<f64>> = (0..spec.p)
        .map(|j| {
            z.iter()
                .map(|row| (0..spec.p).map(|k| factor[(j, k)] * row[k]).sum())
                .collect()
        })
        .collect();
    assemble(spec, predictors, &mut rng)
}

/// Like [`generate_synthetic`] but the predictors are centered and made
/// exactly orthogonal (modified Gram–Schmidt, applied twice), each with unit
/// sample variance. The spec's correlation must be the identity.
pub fn generate_orthogonal(spec: &SyntheticSpec) -> Result<Dataset> {
    spec.validate()?;
    for i in 0..spec.p {
        for j in 0..spec.p {
            if i != j && spec.correlation[i][j] != 0.0 {
                return Err(Error::InvalidSpec(
                    "orthogonal generation requires an identity correlation".into(),
                ));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let z = standard_normal_matrix(spec.n, spec.p, &mut rng);
    let mut cols: Vec<Vec<f64>> = (0..spec.p)
        .map(|j| z.iter().map(|row| row[j]).collect())
        .collect();
    let n = spec.n as f64;
    for col in cols.iter_mut() {
        let mean = col.iter().sum::<f64>() / n;
        col.iter_mut().for_each(|v| *v -= mean);
    }
    for _ in 0..2 {
        for j in 0..spec.p {
            let (done, rest) = cols.split_at_mut(j);
            let col = &mut rest[0];
            for q in done.iter() {
                let proj = dot(col, q) / dot(q, q);
                col.iter_mut().zip(q).for_each(|(v, qv)| *v -= proj * qv);
            }
            // re-center: the projections can leave a rounding-level mean
            let mean = col.iter().sum::<f64>() / n;
            col.iter_mut().for_each(|v| *v -= mean);
            let sd = (dot(col, col) / (n - 1.0)).sqrt();
            col.iter_mut().for_each(|v| *v /= sd);
        }
    }
    assemble(spec, cols, &mut rng)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corr(a: &[f64], b: &[f64]) -> f64 {
        let n = a.len() as f64;
        let (ma, mb) = (a.iter().sum::<f64>() / n, b.iter().sum::<f64>() / n);
        let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
        for (x, y) in a.iter().zip(b) {
            sab += (x - ma) * (y - mb);
            saa += (x - ma) * (x - ma);
            sbb += (y - mb) * (y - mb);
        }
        sab / (saa * sbb).sqrt()
    }

    #[test]
    fn same_seed_same_dataset() {
        let s = SyntheticSpec::equicorrelated(40, 3, 0.5, 99);
        let a = generate_synthetic(&s).unwrap();
        let b = generate_synthetic(&s).unwrap();
        for (ca, cb) in a.columns().iter().zip(b.columns()) {
            let bits_a: Vec<u64> = ca.values.iter().map(|v| v.to_bits()).collect();
            let bits_b: Vec<u64> = cb.values.iter().map(|v| v.to_bits()).collect();
            assert_eq!(bits_a, bits_b);
        }
    }

    #[test]
    fn independent_predictors_are_nearly_uncorrelated() {
        let d = generate_synthetic(&SyntheticSpec::independent(10_000, 2, 1)).unwrap();
        let r = corr(d.column("X1").unwrap(), d.column("X2").unwrap());
        assert!(r.abs() < 0.05, "r = {r}");
    }

    #[test]
    fn requested_correlation_is_approached() {
        let d = generate_synthetic(&SyntheticSpec::equicorrelated(20_000, 2, 0.7, 3)).unwrap();
        let r = corr(d.column("X1").unwrap(), d.column("X2").unwrap());
        assert!((r - 0.7).abs() < 0.03, "r = {r}");
    }

    #[test]
    fn perfect_correlation_still_generates() {
        let d = generate_synthetic(&SyntheticSpec::equicorrelated(50, 2, 1.0, 5)).unwrap();
        let r = corr(d.column("X1").unwrap(), d.column("X2").unwrap());
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_indefinite_correlation() {
        let mut s = SyntheticSpec::equicorrelated(50, 3, 0.0, 5);
        s.correlation = vec![
            vec![1.0, 0.9, -0.9],
            vec![0.9, 1.0, 0.9],
            vec![-0.9, 0.9, 1.0],
        ];
        assert!(matches!(
            generate_synthetic(&s),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn orthogonal_design_is_orthogonal() {
        let d = generate_orthogonal(&SyntheticSpec::independent(30, 4, 11)).unwrap();
        let cols: Vec<&[f64]> = (1..=4).map(|i| d.column(&format!("X{i}")).unwrap()).collect();
        for i in 0..4 {
            assert!(cols[i].iter().sum::<f64>().abs() < 1e-12);
            for j in 0..i {
                assert!(dot(cols[i], cols[j]).abs() < 1e-12);
            }
        }
    }
}
