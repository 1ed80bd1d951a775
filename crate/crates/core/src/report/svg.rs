//! Area-proportional Venn figure of the region accounting.
//!
//! For two predictors the figure has one circle per predictor with area
//! proportional to its simple-regression SS (unique + common), overlapping
//! in a lens whose area is the common region. Under suppression (negative
//! common) the circles are drawn apart with areas proportional to the unique
//! SS. A stacked bar below splits SS(total) into unique, common and residual
//! segments of proportional width. Other model sizes get the bar only.

use std::f64::consts::PI;
use std::fmt::Write;

use super::format::fmt2;
use super::views::VennDocument;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 40.0;
const DIAGRAM_HEIGHT: f64 = 300.0;
const BAR_Y: f64 = 380.0;
const BAR_HEIGHT: f64 = 36.0;
const COLORS: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#9c755f",
];

/// Area of the intersection of two circles with radii `r1`, `r2` whose
/// centres are `d` apart.
pub fn lens_area(r1: f64, r2: f64, d: f64) -> f64 {
    if d >= r1 + r2 {
        return 0.0;
    }
    if d <= (r1 - r2).abs() {
        let r = r1.min(r2);
        return PI * r * r;
    }
    let a1 = ((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1)).clamp(-1.0, 1.0).acos();
    let a2 = ((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2)).clamp(-1.0, 1.0).acos();
    let k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
    r1 * r1 * a1 + r2 * r2 * a2 - 0.5 * k.max(0.0).sqrt()
}

/// Centre distance at which two circles overlap in exactly `area`.
pub fn distance_for_overlap(r1: f64, r2: f64, area: f64) -> f64 {
    let (mut lo, mut hi) = ((r1 - r2).abs(), r1 + r2);
    if area <= 0.0 {
        return hi;
    }
    // overlap shrinks monotonically as the centres separate
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if lens_area(r1, r2, mid) > area {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Common SS drawn as overlap; zero when negligible or negative.
fn shown_common(doc: &VennDocument) -> f64 {
    let v = &doc.venn.regions;
    if v.common_total > 0.0 && !v.is_orthogonal() {
        v.common_total
    } else {
        0.0
    }
}

struct Circle {
    id: String,
    cx: f64,
    cy: f64,
    r: f64,
    ss: f64,
}

fn two_circles(doc: &VennDocument) -> Vec<Circle> {
    let v = &doc.venn.regions;
    let total = v.ss_total;
    let suppressed = v.is_suppression();
    let common = shown_common(doc);
    let areas: Vec<f64> = v
        .unique
        .iter()
        .map(|u| if suppressed { u.ss } else { u.ss + common })
        .collect();
    // geometry in units where SS(total) has area 1
    let r: Vec<f64> = areas.iter().map(|a| (a.max(0.0) / total / PI).sqrt()).collect();
    let gap = 0.08 * (r[0] + r[1]);
    let d = if common > 0.0 {
        distance_for_overlap(r[0], r[1], common / total)
    } else {
        r[0] + r[1] + gap
    };
    let extent = r[0] + d + r[1];
    let tallest = 2.0 * r[0].max(r[1]);
    let scale = ((WIDTH - 2.0 * MARGIN) / extent).min((DIAGRAM_HEIGHT - MARGIN) / tallest);
    let x1 = WIDTH / 2.0 - scale * (d + r[1] - r[0]) / 2.0;
    let cy = MARGIN + (DIAGRAM_HEIGHT - MARGIN) / 2.0 + 10.0;
    v.unique
        .iter()
        .enumerate()
        .map(|(i, u)| Circle {
            id: u.predictor.clone(),
            cx: if i == 0 { x1 } else { x1 + scale * d },
            cy,
            r: scale * r[i],
            ss: areas[i],
        })
        .collect()
}

pub fn venn_svg(doc: &VennDocument) -> String {
    let v = &doc.venn.regions;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(
        s,
        "  <title>Variation of {} explained by {}</title>",
        escape(&doc.header.response),
        escape(&doc.header.model.join(", "))
    );
    let _ = writeln!(
        s,
        r#"  <rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );

    if v.unique.len() == 2 {
        let circles = two_circles(doc);
        for (i, c) in circles.iter().enumerate() {
            let _ = writeln!(
                s,
                r##"  <circle id="circle-{}" cx="{:.4}" cy="{:.4}" r="{:.4}" data-ss="{}" fill="{}" fill-opacity="0.45" stroke="#333" stroke-width="1"/>"##,
                escape(&c.id),
                c.cx,
                c.cy,
                c.r,
                c.ss,
                COLORS[i]
            );
        }
        let (a, b) = (&circles[0], &circles[1]);
        let label_y = a.cy.min(b.cy) - a.r.max(b.r) - 8.0;
        for (i, (c, u)) in circles.iter().zip(&v.unique).enumerate() {
            let _ = writeln!(
                s,
                r#"  <text x="{:.4}" y="{:.4}" text-anchor="middle">{} (unique {})</text>"#,
                c.cx,
                (label_y - 16.0 * (1 - i) as f64).max(16.0 + 16.0 * i as f64),
                escape(&u.predictor),
                fmt2(u.ss)
            );
        }
        if shown_common(doc) > 0.0 {
            let _ = writeln!(
                s,
                r#"  <text x="{:.4}" y="{:.4}" text-anchor="middle">common {}</text>"#,
                0.5 * (a.cx + a.r + b.cx - b.r),
                a.cy,
                fmt2(v.common_total)
            );
        }
    } else {
        let _ = writeln!(
            s,
            r#"  <text x="{MARGIN}" y="{MARGIN}">{} predictors: regions shown as a bar only</text>"#,
            v.unique.len()
        );
        for (i, u) in v.unique.iter().enumerate() {
            let _ = writeln!(
                s,
                r#"  <text x="{MARGIN}" y="{}">unique {}: {}</text>"#,
                MARGIN + 20.0 * (i as f64 + 1.0),
                escape(&u.predictor),
                fmt2(u.ss)
            );
        }
    }

    if v.is_suppression() {
        let _ = writeln!(
            s,
            r##"  <text x="{MARGIN}" y="{:.1}" fill="#b00">suppression: common region {}</text>"##,
            BAR_Y - 24.0,
            fmt2(v.common_total)
        );
    }

    // stacked bar over SS(total)
    let mut segments: Vec<(String, String, f64)> = v
        .unique
        .iter()
        .enumerate()
        .map(|(i, u)| (format!("unique-{}", u.predictor), COLORS[i % COLORS.len()].to_string(), u.ss))
        .collect();
    if shown_common(doc) > 0.0 {
        segments.push(("common".into(), "#bab0ac".into(), v.common_total));
    }
    segments.push(("residual".into(), "#eeeeee".into(), v.residual));
    let span = WIDTH - 2.0 * MARGIN;
    let bar_total: f64 = segments.iter().map(|x| x.2.max(0.0)).sum();
    let mut x = MARGIN;
    for (id, color, ss) in &segments {
        let w = span * ss.max(0.0) / bar_total;
        let _ = writeln!(
            s,
            r##"  <rect id="bar-{}" x="{:.4}" y="{BAR_Y}" width="{:.4}" height="{BAR_HEIGHT}" data-ss="{}" fill="{}" stroke="#333" stroke-width="0.5"/>"##,
            escape(id),
            x,
            w,
            ss,
            color
        );
        x += w;
    }
    let _ = writeln!(
        s,
        r#"  <text x="{MARGIN}" y="{:.1}">SS(total) {}: unique {}, common {}, residual {}; missing fraction {}</text>"#,
        BAR_Y + BAR_HEIGHT + 20.0,
        fmt2(v.ss_total),
        fmt2(v.unique_sum()),
        fmt2(v.common_total),
        fmt2(v.residual),
        fmt2(v.missing_fraction)
    );
    s.push_str("</svg>\n");
    s
}
