//! Mean-centering, cross-products, OLS fitting and classical ANOVA tables.

mod anova;
mod dataset;
mod fit;
pub(crate) mod linalg;
mod sscp;

pub use anova::{anova_table, AnovaKind, AnovaRow, AnovaTable};
pub use dataset::{mean_center, CenteredData, Column, Dataset};
pub use fit::{fit_ols, fit_regressors, OlsFit, Regressor};
pub use linalg::RCOND_THRESHOLD;
pub use sscp::{sscp, SscpMatrix};

pub(crate) use dataset::{dot, mean_sd};
pub(crate) use fit::named_regressors;
pub(crate) use sscp::cross_products;
