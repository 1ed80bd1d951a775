//! Serializable report documents. The text, JSON and CSV renderers all
//! read from these, so every format shows the same numbers.

use serde::Serialize;

use crate::decomposition::{
    compare_report, orthogonal_fits, DecompositionReport, Ordering, OrderingRequest,
    PredictorDecomposition, VennRegions,
};
use crate::error::{Error, Result};
use crate::ols::{anova_table, fit_ols, AnovaKind, AnovaTable, CenteredData, OlsFit};

use super::format::fmt2;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientRow {
    pub term: String,
    pub b: f64,
    pub se: f64,
    pub z: f64,
    pub t: f64,
}

/// The parts of an [`OlsFit`] a report shows (no per-observation vectors).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitView {
    pub terms: Vec<String>,
    pub anova: AnovaTable,
    pub intercept: f64,
    pub coefficients: Vec<CoefficientRow>,
}

impl From<&OlsFit> for FitView {
    fn from(fit: &OlsFit) -> Self {
        let coefficients = (0..fit.b.len())
            .map(|j| CoefficientRow {
                term: fit.predictor_subset[j].clone(),
                b: fit.b[j],
                se: fit.se[j],
                z: fit.z[j],
                t: fit.t[j],
            })
            .collect();
        Self {
            terms: fit.predictor_subset.clone(),
            anova: anova_table(fit),
            intercept: fit.intercept,
            coefficients,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Header {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub response: String,
    pub n: usize,
    pub model: Vec<String>,
}

impl Header {
    fn new<S: AsRef<str>>(command: &'static str, c: &CenteredData, model: &[S]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command,
            response: c.response_name().to_string(),
            n: c.n(),
            model: model.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitDocument {
    #[serde(flatten)]
    pub header: Header,
    pub fit: FitView,
}

pub fn fit_document<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<FitDocument> {
    let fit = fit_ols(c, model)?;
    Ok(FitDocument {
        header: Header::new("fit", c, &fit.predictor_subset),
        fit: FitView::from(&fit),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrectedView {
    pub actual_model_ss: f64,
    pub r2: f64,
    pub r2_from_z: f64,
    pub f: f64,
    pub f_from_t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VennView {
    #[serde(flatten)]
    pub regions: VennRegions,
    pub suppression: bool,
}

impl From<&VennRegions> for VennView {
    fn from(v: &VennRegions) -> Self {
        Self {
            regions: v.clone(),
            suppression: v.is_suppression(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecomposeDocument {
    #[serde(flatten)]
    pub header: Header,
    pub traditional: FitView,
    pub corrected: CorrectedView,
    pub predictors: Vec<PredictorDecomposition>,
    pub residualized_fits: Vec<FitView>,
    pub venn: VennView,
    pub notes: Vec<String>,
}

fn notes(r: &DecompositionReport) -> Vec<String> {
    let v = &r.venn;
    let t = &r.traditional;
    let mut out = Vec::new();
    if v.is_orthogonal() {
        out.push(
            "Predictors are orthogonal: traditional and corrected statistics coincide.".to_string(),
        );
        return out;
    }
    out.push(format!(
        "SS(regression) {} exceeds the actual model SS {} by {}, variation shared by predictors and credited to none.",
        fmt2(t.ss_regression),
        fmt2(r.actual_model_ss),
        fmt2(v.common_total),
    ));
    out.push(format!(
        "Partial SS plus SS(residual) account for {} of SS(total) {}; {} (fraction {}) is missing.",
        fmt2(v.accounted_total),
        fmt2(v.ss_total),
        fmt2(v.missing),
        fmt2(v.missing_fraction),
    ));
    out.push(format!(
        "Traditional R² {} and F {} vs corrected R² {} and f {}.",
        fmt2(t.r2),
        fmt2(t.f),
        fmt2(r.corrected_r2),
        fmt2(r.corrected_f),
    ));
    if v.is_suppression() {
        out.push(format!(
            "Common region is negative ({}): suppression.",
            fmt2(v.common_total)
        ));
    }
    out
}

pub fn decompose_document<S: AsRef<str>>(
    c: &CenteredData,
    model: &[S],
    request: &OrderingRequest,
) -> Result<DecomposeDocument> {
    let r = compare_report(c, model, request)?;
    Ok(DecomposeDocument {
        header: Header::new("decompose", c, &r.model),
        traditional: FitView::from(&r.traditional),
        corrected: CorrectedView {
            actual_model_ss: r.actual_model_ss,
            r2: r.corrected_r2,
            r2_from_z: r.corrected_r2_from_z,
            f: r.corrected_f,
            f_from_t: r.corrected_f_from_t,
        },
        predictors: r.per_predictor.clone(),
        residualized_fits: r.residualized_fits.iter().map(FitView::from).collect(),
        venn: VennView::from(&r.venn),
        notes: notes(&r),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingView {
    pub ordering: Vec<String>,
    pub type1: AnovaTable,
    pub orthogonal_fit: FitView,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingsDocument {
    #[serde(flatten)]
    pub header: Header,
    pub orderings: Vec<OrderingView>,
}

pub fn orderings_document<S: AsRef<str>>(
    c: &CenteredData,
    model: &[S],
    request: &OrderingRequest,
) -> Result<OrderingsDocument> {
    let report = compare_report(c, model, request)?;
    let fits = orthogonal_fits(c, model, request)?;
    let orderings = report
        .orderings
        .iter()
        .zip(&fits)
        .map(|(table, (ord, fit))| {
            debug_assert_eq!(&table.ordering, ord);
            OrderingView {
                ordering: ord.names().to_vec(),
                type1: AnovaTable::per_predictor(AnovaKind::Sequential, &table.terms, &report.traditional),
                orthogonal_fit: FitView::from(fit),
            }
        })
        .collect();
    Ok(OrderingsDocument {
        header: Header::new("orderings", c, &report.model),
        orderings,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VennDocument {
    #[serde(flatten)]
    pub header: Header,
    pub venn: VennView,
    /// Regression SS of the response on each predictor alone.
    pub simple_ss: Vec<SimpleSs>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimpleSs {
    pub predictor: String,
    pub ss: f64,
}

pub fn venn_document<S: AsRef<str>>(c: &CenteredData, model: &[S]) -> Result<VennDocument> {
    let r = compare_report(c, model, &OrderingRequest::Explicit(vec![model_ordering(model)?]))?;
    Ok(VennDocument {
        header: Header::new("venn", c, &r.model),
        venn: VennView::from(&r.venn),
        simple_ss: r
            .per_predictor
            .iter()
            .map(|p| SimpleSs {
                predictor: p.name.clone(),
                ss: p.simple_ss,
            })
            .collect(),
    })
}

/// The model's own declared order as a single ordering.
pub(crate) fn model_ordering<S: AsRef<str>>(model: &[S]) -> Result<Ordering> {
    if model.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ordering::new(model)
}
