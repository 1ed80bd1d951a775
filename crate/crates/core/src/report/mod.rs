//! Rendering and the command-line front end.

pub mod cli;
pub mod format;
pub mod svg;
pub mod tabular;
pub mod text;
pub mod views;

pub use format::{fmt2, round_half_away};
pub use svg::venn_svg;
pub use views::{
    decompose_document, fit_document, orderings_document, venn_document, DecomposeDocument,
    FitDocument, FitView, OrderingsDocument, VennDocument, SCHEMA_VERSION,
};
