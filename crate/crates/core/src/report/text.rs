//! Plain-text reports laid out like the classical regression tables.

use std::fmt::Write;

use super::format::{fmt2, fmt_opt, TextTable};
use super::views::{DecomposeDocument, FitDocument, FitView, Header, OrderingsDocument, VennDocument};
use crate::ols::AnovaTable;

fn title(out: &mut String, what: &str, h: &Header) {
    let _ = writeln!(out, "{what}: {} ~ {}   (n = {})", h.response, h.model.join(" + "), h.n);
    out.push('\n');
}

fn anova(out: &mut String, table: &AnovaTable) {
    let mut t = TextTable::new(["Source", "SS", "df", "MS", "F", "R²"]);
    for (i, row) in table.rows.iter().enumerate() {
        let r2 = if i == 0 { fmt2(table.r2) } else { String::new() };
        t.row([
            row.source.clone(),
            fmt2(row.ss),
            row.df.to_string(),
            fmt_opt(row.ms),
            fmt_opt(row.f),
            r2,
        ]);
    }
    out.push_str(&t.render());
}

fn coefficients(out: &mut String, fit: &FitView) {
    let mut t = TextTable::new(["Term", "b", "se", "z", "t"]);
    t.row(["(Intercept)".to_string(), fmt2(fit.intercept)]);
    for c in &fit.coefficients {
        t.row([c.term.clone(), fmt2(c.b), fmt2(c.se), fmt2(c.z), fmt2(c.t)]);
    }
    out.push_str(&t.render());
}

pub fn fit(doc: &FitDocument) -> String {
    let mut out = String::new();
    title(&mut out, "Least-squares fit", &doc.header);
    anova(&mut out, &doc.fit.anova);
    out.push('\n');
    coefficients(&mut out, &doc.fit);
    out
}

pub fn decompose(doc: &DecomposeDocument) -> String {
    let mut out = String::new();
    title(&mut out, "Variance decomposition", &doc.header);

    let trad = &doc.traditional.anova;
    let reg = &trad.rows[0];
    let mut t = TextTable::new(["", "Traditional", "Corrected"]);
    t.row(["SS(model)".to_string(), fmt2(reg.ss), fmt2(doc.corrected.actual_model_ss)]);
    t.row(["R²".to_string(), fmt2(trad.r2), fmt2(doc.corrected.r2)]);
    t.row(["F / f".to_string(), fmt_opt(reg.f), fmt2(doc.corrected.f)]);
    t.row(["Σz² (residualized)".to_string(), String::new(), fmt2(doc.corrected.r2_from_z)]);
    t.row(["Σt²/p".to_string(), String::new(), fmt2(doc.corrected.f_from_t)]);
    out.push_str(&t.render());
    out.push('\n');

    out.push_str("Traditional multiple regression\n");
    anova(&mut out, trad);
    out.push('\n');
    coefficients(&mut out, &doc.traditional);
    out.push('\n');

    let declared = doc.header.model.join(",");
    out.push_str("Sums of squares by predictor\n");
    let mut t = TextTable::new([
        "Predictor".to_string(),
        "Simple".to_string(),
        format!("Type I ({declared})"),
        "Type III".to_string(),
    ]);
    for p in &doc.predictors {
        let type1 = p.type1_ss.get(&declared).copied();
        t.row([p.name.clone(), fmt2(p.simple_ss), fmt_opt(type1), fmt2(p.type3_ss)]);
    }
    out.push_str(&t.render());
    out.push('\n');

    out.push_str("Simple regressions on residualized predictors\n");
    let mut t = TextTable::new(["Term", "SS(reg)", "SS(res)", "f", "R²", "b", "z", "t"]);
    for f in &doc.residualized_fits {
        let a = &f.anova;
        let c = &f.coefficients[0];
        t.row([
            c.term.clone(),
            fmt2(a.rows[0].ss),
            fmt2(a.rows[1].ss),
            fmt_opt(a.rows[0].f),
            fmt2(a.r2),
            fmt2(c.b),
            fmt2(c.z),
            fmt2(c.t),
        ]);
    }
    out.push_str(&t.render());
    out.push('\n');

    venn_table(&mut out, &doc.venn.regions);
    out.push('\n');
    for note in &doc.notes {
        let _ = writeln!(out, "* {note}");
    }
    out
}

fn venn_table(out: &mut String, v: &crate::decomposition::VennRegions) {
    out.push_str("Region accounting\n");
    let mut t = TextTable::new(["Region", "SS"]);
    for u in &v.unique {
        t.row([format!("Unique {}", u.predictor), fmt2(u.ss)]);
    }
    t.row(["Common".to_string(), fmt2(v.common_total)]);
    t.row(["Residual".to_string(), fmt2(v.residual)]);
    t.row(["Accounted total".to_string(), fmt2(v.accounted_total)]);
    t.row(["Missing".to_string(), fmt2(v.missing)]);
    t.row(["Missing fraction".to_string(), fmt2(v.missing_fraction)]);
    t.row(["SS(total)".to_string(), fmt2(v.ss_total)]);
    out.push_str(&t.render());
}

pub fn orderings(doc: &OrderingsDocument) -> String {
    let mut out = String::new();
    title(&mut out, "Sequential decompositions", &doc.header);
    let count = doc.orderings.len();
    for (i, o) in doc.orderings.iter().enumerate() {
        let _ = writeln!(out, "Ordering {} of {count}: {}", i + 1, o.ordering.join(", "));
        out.push('\n');
        out.push_str("Type I sums of squares\n");
        let mut t = TextTable::new(["Source", "SS", "df", "MS", "F"]);
        for row in &o.type1.rows {
            t.row([
                row.source.clone(),
                fmt2(row.ss),
                row.df.to_string(),
                fmt_opt(row.ms),
                fmt_opt(row.f),
            ]);
        }
        out.push_str(&t.render());
        out.push('\n');
        out.push_str("Orthogonal-function regression\n");
        anova(&mut out, &o.orthogonal_fit.anova);
        out.push('\n');
        coefficients(&mut out, &o.orthogonal_fit);
        if i + 1 < count {
            out.push('\n');
        }
    }
    out
}

pub fn venn(doc: &VennDocument) -> String {
    let mut out = String::new();
    title(&mut out, "Venn regions", &doc.header);
    venn_table(&mut out, &doc.venn.regions);
    if doc.venn.suppression {
        out.push_str("\n* Common region is negative: suppression.\n");
    }
    out
}
