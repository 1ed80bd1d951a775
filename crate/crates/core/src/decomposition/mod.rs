//! Partitioning the response's variation among correlated predictors.
//!
//! The classical regression SS (`b'X'y`) equals the sum of sequential
//! (Type I) increments for any entry order, but not the sum of partial
//! (Type III) contributions once predictors are correlated. This module
//! computes both, the residualized predictors each coefficient actually
//! rests on, the orthogonal-function regressions that reproduce the
//! sequential view, and the corrected R² and f built from partial SS.

mod ordering;
mod orthogonal;
mod report;
mod residualize;
mod sums;
mod venn;

pub use ordering::{all_orderings, Ordering, MAX_EXHAUSTIVE_PREDICTORS};
pub use orthogonal::{orthogonal_regression, residualized_simple_fits};
pub use report::{
    compare_report, orthogonal_fits, DecompositionReport, OrderingRequest, PredictorDecomposition,
    SequentialTable,
};
pub use residualize::{residualize, ResidualizedPredictor};
pub use sums::{
    actual_model_ss, corrected_f, corrected_f_from_t, corrected_r2,
    corrected_r2_from_residualized_z, partial_ss, sequential_ss, ss_via_residualized_crossproducts,
};
pub use venn::{venn_regions, UniqueRegion, VennRegions, COMMON_TOLERANCE};
