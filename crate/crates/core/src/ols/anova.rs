use serde::Serialize;

use super::fit::OlsFit;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnovaRow {
    pub source: String,
    pub ss: f64,
    pub df: usize,
    pub ms: Option<f64>,
    pub f: Option<f64>,
}

impl AnovaRow {
    fn new(source: impl Into<String>, ss: f64, df: usize, f: Option<f64>) -> Self {
        Self {
            source: source.into(),
            ss,
            df,
            ms: (df > 0).then(|| ss / df as f64),
            f,
        }
    }
}

/// How the component rows relate to the total row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnovaKind {
    /// Regression / Residual / Total.
    Classical,
    /// Sequential (Type I) rows: components add up to the total.
    Sequential,
    /// Partial (Type III) rows: no additivity claim.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnovaTable {
    pub kind: AnovaKind,
    pub rows: Vec<AnovaRow>,
    pub r2: f64,
}

impl AnovaTable {
    /// Whether the component rows are guaranteed to sum to the total row.
    pub fn is_additive(&self) -> bool {
        self.kind != AnovaKind::Partial
    }

    pub fn row(&self, source: &str) -> Option<&AnovaRow> {
        self.rows.iter().find(|r| r.source == source)
    }

    pub fn total(&self) -> &AnovaRow {
        self.rows.last().expect("table always ends with Total")
    }

    /// One row per predictor (each with df 1), then Residual and Total.
    pub(crate) fn per_predictor(kind: AnovaKind, terms: &[(String, f64)], fit: &OlsFit) -> Self {
        let ms_res = fit.ms_residual();
        let mut rows: Vec<AnovaRow> = terms
            .iter()
            .map(|(name, ss)| AnovaRow::new(name.clone(), *ss, 1, Some(ss / ms_res)))
            .collect();
        rows.push(AnovaRow::new("Residual", fit.ss_residual, fit.df_residual, None));
        rows.push(AnovaRow::new("Total", fit.ss_total, fit.n() - 1, None));
        Self {
            kind,
            rows,
            r2: fit.r2,
        }
    }
}

/// Classical Regression/Residual/Total table of a fit.
pub fn anova_table(fit: &OlsFit) -> AnovaTable {
    AnovaTable {
        kind: AnovaKind::Classical,
        rows: vec![
            AnovaRow::new("Regression", fit.ss_regression, fit.df_model, Some(fit.f)),
            AnovaRow::new("Residual", fit.ss_residual, fit.df_residual, None),
            AnovaRow::new("Total", fit.ss_total, fit.n() - 1, None),
        ],
        r2: fit.r2,
    }
}
