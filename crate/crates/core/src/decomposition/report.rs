use std::collections::BTreeMap;

use serde::Serialize;

use super::ordering::{all_orderings, Ordering};
use super::orthogonal::{orthogonal_regression, residualized_simple_fits};
use super::sums::{corrected_f_from_t, corrected_r2_from_residualized_z, validate_model, SubsetSs};
use super::venn::{regions_from, UniqueRegion, VennRegions};
use crate::error::{Error, Result};
use crate::ols::{fit_ols, CenteredData, OlsFit};

/// Which sequential decompositions a report should contain.
#[derive(Debug, Clone, PartialEq)]
pub enum OrderingRequest {
    /// Every permutation of the model (refused above 8 predictors).
    Exhaustive,
    /// Only these orderings; each must be a permutation of the model.
    Explicit(Vec<Ordering>),
}

/// Type I SS of one ordering.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequentialTable {
    pub ordering: Ordering,
    pub terms: Vec<(String, f64)>,
}

impl SequentialTable {
    pub fn total(&self) -> f64 {
        self.terms.iter().map(|t| t.1).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredictorDecomposition {
    pub name: String,
    /// Regression SS of the response on this predictor alone.
    pub simple_ss: f64,
    pub type3_ss: f64,
    /// Type I SS keyed by ordering label (`A,B,C`).
    pub type1_ss: BTreeMap<String, f64>,
}

/// Classical multiple-regression summary next to the partial-SS view.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub model: Vec<String>,
    pub traditional: OlsFit,
    pub per_predictor: Vec<PredictorDecomposition>,
    pub orderings: Vec<SequentialTable>,
    pub actual_model_ss: f64,
    /// actual model SS / SS(total)
    pub corrected_r2: f64,
    /// Σ z² over residualized predictors; equals `corrected_r2`
    pub corrected_r2_from_z: f64,
    /// [actual model SS / p] / MS(residual)
    pub corrected_f: f64,
    /// Σ t² / p from the traditional fit; equals `corrected_f`
    pub corrected_f_from_t: f64,
    pub venn: VennRegions,
    pub residualized_fits: Vec<OlsFit>,
}

impl DecompositionReport {
    pub fn predictor(&self, name: &str) -> Option<&PredictorDecomposition> {
        self.per_predictor.iter().find(|p| p.name == name)
    }

    pub fn ordering(&self, label: &str) -> Option<&SequentialTable> {
        self.orderings.iter().find(|o| o.ordering.label() == label)
    }
}

/// Orthogonal-function fits for each requested ordering, in the same
/// sorted order as [`compare_report`] uses.
pub fn orthogonal_fits<S: AsRef<str>>(
    c: &CenteredData,
    model: &[S],
    request: &OrderingRequest,
) -> Result<Vec<(Ordering, OlsFit)>> {
    let model = validate_model(c, model)?;
    resolve_orderings(&model, request)?
        .into_iter()
        .map(|o| {
            let fit = orthogonal_regression(c, &o)?;
            Ok((o, fit))
        })
        .collect()
}

pub(crate) fn resolve_orderings(model: &[String], request: &OrderingRequest) -> Result<Vec<Ordering>> {
    match request {
        OrderingRequest::Exhaustive => all_orderings(model),
        OrderingRequest::Explicit(list) => {
            if list.is_empty() {
                return Err(Error::InvalidOrdering("no orderings given".into()));
            }
            for o in list {
                if !o.is_permutation_of(model) {
                    return Err(Error::InvalidOrdering(format!(
                        "`{}` is not a permutation of the model [{}]",
                        o.label(),
                        model.join(",")
                    )));
                }
            }
            let mut sorted = list.clone();
            sorted.sort();
            sorted.dedup();
            Ok(sorted)
        }
    }
}

/// Builds the full traditional-versus-corrected comparison for `model`.
pub fn compare_report<S: AsRef<str>>(
    c: &CenteredData,
    model: &[S],
    request: &OrderingRequest,
) -> Result<DecompositionReport> {
    let model = validate_model(c, model)?;
    let orderings = resolve_orderings(&model, request)?;
    let traditional = fit_ols(c, &model)?;

    let mut memo = SubsetSs::new(c, &model);
    let tables = orderings
        .into_iter()
        .map(|o| {
            let terms = memo.sequential(&o)?;
            Ok(SequentialTable { ordering: o, terms })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut per_predictor = Vec::with_capacity(model.len());
    for (i, name) in model.iter().enumerate() {
        let type1_ss = tables
            .iter()
            .map(|t| {
                let ss = t.terms.iter().find(|(n, _)| n == name).map(|x| x.1);
                (t.ordering.label(), ss.expect("ordering covers the model"))
            })
            .collect();
        per_predictor.push(PredictorDecomposition {
            name: name.clone(),
            simple_ss: memo.ss(1 << i)?,
            type3_ss: memo.partial(name)?,
            type1_ss,
        });
    }

    let actual_model_ss: f64 = per_predictor.iter().map(|p| p.type3_ss).sum();
    let venn = regions_from(
        per_predictor
            .iter()
            .map(|p| UniqueRegion {
                predictor: p.name.clone(),
                ss: p.type3_ss,
            })
            .collect(),
        traditional.ss_regression,
        traditional.ss_residual,
        traditional.ss_total,
    );

    Ok(DecompositionReport {
        corrected_r2: actual_model_ss / traditional.ss_total,
        corrected_r2_from_z: corrected_r2_from_residualized_z(c, &model)?,
        corrected_f: (actual_model_ss / model.len() as f64) / traditional.ms_residual(),
        corrected_f_from_t: corrected_f_from_t(&traditional),
        residualized_fits: residualized_simple_fits(c, &model)?,
        model,
        traditional,
        per_predictor,
        orderings: tables,
        actual_model_ss,
        venn,
    })
}
