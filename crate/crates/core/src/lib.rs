//! Ordinary least squares on mean-centered data, with the full variance
//! decomposition for correlated predictors: sequential (Type I) and partial
//! (Type III) sums of squares, residualized predictors, orthogonal-function
//! regressions, corrected R² and f, and Venn-region accounting.
//!
//! ```
//! use varpart::{io::dwaine_fixture, ols::{fit_ols, mean_center}, decomposition::corrected_r2};
//!
//! let c = mean_center(&dwaine_fixture()).unwrap();
//! let fit = fit_ols(&c, &["TARGTPOP", "DISPOINC"]).unwrap();
//! assert!((fit.r2 - 0.917).abs() < 0.001);
//! let r2 = corrected_r2(&c, &["TARGTPOP", "DISPOINC"]).unwrap();
//! assert!((r2 - 0.243).abs() < 0.001);
//! ```

pub mod decomposition;
pub mod error;
pub mod io;
pub mod ols;
pub mod report;

pub use error::{Error, Result};
