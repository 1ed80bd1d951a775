#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// Printed values of the Dwaine Studios tables, as published.
pub mod printed {
    /// (SS regression, SS residual, SS total, F, R²) for simple X1, simple X2, MLR.
    pub const TABLE1_ANOVA: [(f64, f64, f64, f64, f64); 3] = [
        (23_371.81, 2_824.40, 26_196.21, 157.22, 0.892),
        (18_299.78, 7_896.43, 26_196.21, 44.03, 0.699),
        (24_015.28, 2_180.93, 26_196.21, 99.10, 0.917),
    ];
    /// (b, z, t) of the two simple fits.
    pub const TABLE1_SIMPLE: [(f64, f64, f64); 2] = [(1.836, 0.945, 12.54), (31.173, 0.836, 6.64)];
    /// (b, z, t) of X1 and X2 in the multiple regression.
    pub const TABLE1_MLR: [(f64, f64, f64); 2] = [(1.455, 0.748, 6.87), (9.366, 0.251, 2.31)];

    /// Y'Y, X1'Y, X1'X1, X2'Y, X2'X1, X2'X2.
    pub const TABLE2_SSCP: [f64; 6] = [26_196.21, 12_730.59, 6_934.33, 587.04, 282.33, 18.83];
    /// Σ X1|X2 · Y and Σ X2|X1 · Y.
    pub const TABLE2_RESIDUALIZED: [f64; 2] = [3_929.37, 68.71];

    /// (SS reg, SS res, f, R², b, z, t) for X1|X2 then X2|X1.
    pub const TABLE3: [(f64, f64, f64, f64, f64, f64, f64); 2] = [
        (5_715.51, 20_480.71, 5.30, 0.218, 1.455, 0.467, 2.30),
        (643.48, 25_552.73, 0.48, 0.025, 9.366, 0.157, 0.69),
    ];

    /// (SS reg, SS res, f, R²) shared by both orthogonal-function fits.
    pub const TABLE4_ANOVA: (f64, f64, f64, f64) = (24_015.28, 2_180.93, 99.10, 0.917);
    /// (b, z, t) for X1 then X2|X1.
    pub const TABLE4_X1_FIRST: [(f64, f64, f64); 2] = [(1.836, 0.945, 13.89), (9.366, 0.157, 2.31)];
    /// (b, z, t) for X2 then X1|X2.
    pub const TABLE4_X2_FIRST: [(f64, f64, f64); 2] = [(31.173, 0.836, 12.29), (1.455, 0.467, 6.87)];

    pub const CORRECTED_R2: f64 = 0.243;
    pub const CORRECTED_F: f64 = 26.24;

    /// Values printed in the text that the data do not reproduce, with what
    /// the data give instead.
    pub const TYPE1_X2_AFTER_X1_PRINTED: [f64; 2] = [643.99, 643.81];
    pub const TYPE1_X2_AFTER_X1_DERIVED: f64 = 643.4758;
    pub const ACCOUNTED_TOTAL_PRINTED: f64 = 8_839.92;
    pub const CORRECTED_F_PRINTED_MS_RATIO: f64 = 26.64;
    pub const ACCOUNTED_TOTAL_DERIVED: f64 = 8_539.92;
    pub const MISSING_FRACTION_PRINTED: f64 = 0.662;
    pub const MISSING_FRACTION_DERIVED: f64 = 0.674;
}

pub fn within(actual: f64, expected: f64, tol: f64) -> bool {
    (actual - expected).abs() <= tol
}

/// `|a − b| ≤ tol · max(|a|, |b|, scale)`.
pub fn rel_close(a: f64, b: f64, tol: f64, scale: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(scale)
}

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    manifest_dir().join("tests").join("golden")
}

pub fn schema_path(command: &str) -> PathBuf {
    manifest_dir().join("schema").join(format!("{command}.schema.json"))
}

pub fn varpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_varpart"))
        .args(args)
        .env_remove("VARPART_SEED")
        .output()
        .expect("spawn varpart")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}

/// The golden cases: file stem and CLI arguments.
pub const GOLDEN_CASES: [(&str, &[&str]); 8] = [
    ("fit.txt", &["fit", "--dwaine"]),
    ("fit.json", &["fit", "--dwaine", "--format", "json"]),
    ("decompose.txt", &["decompose", "--dwaine"]),
    ("decompose.json", &["decompose", "--dwaine", "--format", "json"]),
    ("orderings.txt", &["orderings", "--dwaine"]),
    ("orderings.json", &["orderings", "--dwaine", "--format", "json"]),
    ("venn.txt", &["venn", "--dwaine"]),
    ("venn.json", &["venn", "--dwaine", "--format", "json"]),
];

/// Compares CLI output with a golden file, rewriting it when `UPDATE_GOLDEN` is set.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let out = varpart(args);
    if !out.status.success() {
        return Err(format!("{args:?} exited {:?}: {}", out.status.code(), stderr(&out)));
    }
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != out.stdout {
        return Err(format!("{name} differs from {args:?} output"));
    }
    Ok(())
}

/// Attribute value from a single SVG element line.
pub fn attr(line: &str, name: &str) -> Option<f64> {
    let key = format!(" {name}=\"");
    let start = line.find(&key)? + key.len();
    let end = start + line[start..].find('"')?;
    line[start..end].parse().ok()
}

pub fn element_with_id<'a>(svg: &'a str, id: &str) -> Option<&'a str> {
    let key = format!("id=\"{id}\"");
    svg.lines().find(|l| l.contains(&key))
}

/// Area of the intersection of two circles.
pub fn lens(r1: f64, r2: f64, d: f64) -> f64 {
    varpart::report::svg::lens_area(r1, r2, d)
}

/// Checks that the two-circle figure and the bar are area-proportional.
pub fn svg_proportional(svg: &str, names: [&str; 2], tol: f64) -> Result<(), String> {
    let circle = |n: &str| {
        element_with_id(svg, &format!("circle-{n}")).ok_or_else(|| format!("no circle for {n}"))
    };
    let (a, b) = (circle(names[0])?, circle(names[1])?);
    let get = |l: &str, k: &str| attr(l, k).ok_or_else(|| format!("missing {k} in {l}"));
    let (ra, rb) = (get(a, "r")?, get(b, "r")?);
    let (ssa, ssb) = (get(a, "data-ss")?, get(b, "data-ss")?);
    let d = (get(a, "cx")? - get(b, "cx")?).hypot(get(a, "cy")? - get(b, "cy")?);
    let area = |r: f64| std::f64::consts::PI * r * r;
    let per_ss = area(ra) / ssa;
    let rel = |x: f64, y: f64| (x - y).abs() / y.abs().max(f64::MIN_POSITIVE);
    if rel(area(rb) / ssb, per_ss) > tol {
        return Err(format!("circle areas not proportional: {} vs {}", area(rb) / ssb, per_ss));
    }
    let common_bar = element_with_id(svg, "bar-common");
    let lens_area = lens(ra, rb, d);
    match common_bar {
        Some(bar) => {
            let common = get(bar, "data-ss")?;
            if rel(lens_area / per_ss, common) > tol {
                return Err(format!("lens {} vs common {common}", lens_area / per_ss));
            }
        }
        None if lens_area > tol * area(ra.min(rb)) => {
            return Err(format!("circles overlap by {lens_area} without a common region"));
        }
        None => {}
    }
    let bars: Vec<(f64, f64)> = svg
        .lines()
        .filter(|l| l.contains("id=\"bar-"))
        .map(|l| Ok((get(l, "width")?, get(l, "data-ss")?)))
        .collect::<Result<_, String>>()?;
    let (w0, s0) = bars[0];
    for (w, s) in &bars {
        if s.abs() > 0.0 && rel(w / s, w0 / s0) > tol {
            return Err(format!("bar width {w} not proportional to {s}"));
        }
    }
    Ok(())
}

/// Every `d.dd` token of a text report.
pub fn decimals_in(text: &str) -> Vec<String> {
    text.split(|c: char| c.is_whitespace() || matches!(c, '(' | ')' | ',' | ';' | ':'))
        .map(|t| t.trim_end_matches('.'))
        .filter(|t| {
            let t = t.strip_prefix('-').unwrap_or(t);
            t.split_once('.').is_some_and(|(int, frac)| {
                !int.is_empty()
                    && int.bytes().all(|b| b.is_ascii_digit())
                    && frac.len() == 2
                    && frac.bytes().all(|b| b.is_ascii_digit())
            })
        })
        .map(str::to_string)
        .collect()
}

pub fn json_numbers(v: &serde_json::Value, out: &mut Vec<f64>) {
    match v {
        serde_json::Value::Number(n) => out.extend(n.as_f64()),
        serde_json::Value::Array(a) => a.iter().for_each(|x| json_numbers(x, out)),
        serde_json::Value::Object(m) => m.values().for_each(|x| json_numbers(x, out)),
        _ => {}
    }
}

pub fn write_file(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).expect("write temp file");
    p
}

/// One row of the exit-code matrix.
pub struct ExitCase {
    pub label: &'static str,
    pub args: Vec<String>,
    pub code: i32,
    /// Text the diagnostic must contain.
    pub mentions: Option<&'static str>,
}

/// Builds the exit-code matrix, writing its input files into `dir`.
pub fn exit_cases(dir: &Path) -> Vec<ExitCase> {
    use varpart::io::{generate_synthetic, write_csv, SyntheticSpec};

    let constant = write_file(dir, "constant.csv", "y,a,flat\n1,2,5\n2,1,5\n4,3,5\n3,5,5\n6,4,5\n");
    let collinear = write_file(dir, "collinear.csv", "y,a,b\n1,1,2\n2,2,4\n4,3,6\n3,4,8\n6,5,10\n");
    let text_cell = write_file(dir, "text.csv", "y,a\n1,2\n2,x\n3,4\n");
    let nine = dir.join("nine.csv");
    let d = generate_synthetic(&SyntheticSpec::equicorrelated(40, 9, 0.3, 9)).expect("p=9 data");
    write_csv(&d, std::fs::File::create(&nine).expect("create"), b',').expect("write");

    let s = |p: &PathBuf| p.to_string_lossy().into_owned();
    let args = |v: &[&str]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>();
    let with = |path: &PathBuf, rest: &[&str]| {
        let mut v = args(&[rest[0], "--input", &s(path)]);
        v.extend(args(&rest[1..]));
        v
    };
    let order9 = "X9,X8,X7,X6,X5,X4,X3,X2,X1";
    vec![
        ExitCase { label: "fit ok", args: args(&["fit", "--dwaine"]), code: 0, mentions: None },
        ExitCase { label: "help", args: args(&["--help"]), code: 0, mentions: None },
        ExitCase { label: "venn svg ok", args: args(&["venn", "--dwaine", "--format", "svg"]), code: 0, mentions: None },
        ExitCase {
            label: "constant predictor",
            args: with(&constant, &["fit", "--response", "y"]),
            code: 3,
            mentions: Some("flat"),
        },
        ExitCase {
            label: "collinear predictors",
            args: with(&collinear, &["decompose", "--response", "y"]),
            code: 3,
            mentions: Some("singular"),
        },
        ExitCase {
            label: "p=9 exhaustive orderings",
            args: with(&nine, &["orderings", "--response", "Y"]),
            code: 4,
            mentions: Some("9"),
        },
        ExitCase {
            label: "p=9 explicit ordering",
            args: with(&nine, &["orderings", "--response", "Y", "--order", order9]),
            code: 0,
            mentions: None,
        },
        ExitCase {
            label: "missing file",
            args: args(&["fit", "--input", "/nonexistent/varpart.csv", "--response", "y"]),
            code: 2,
            mentions: Some("nonexistent"),
        },
        ExitCase {
            label: "non-numeric cell",
            args: with(&text_cell, &["fit", "--response", "y"]),
            code: 2,
            mentions: Some("x"),
        },
        ExitCase {
            label: "unknown model name",
            args: args(&["fit", "--dwaine", "--model", "NOPE"]),
            code: 2,
            mentions: Some("NOPE"),
        },
        ExitCase {
            label: "svg for fit",
            args: args(&["fit", "--dwaine", "--format", "svg"]),
            code: 2,
            mentions: Some("svg"),
        },
        ExitCase {
            label: "ordering not a permutation",
            args: args(&["orderings", "--dwaine", "--order", "TARGTPOP"]),
            code: 2,
            mentions: None,
        },
        ExitCase { label: "unknown flag", args: args(&["fit", "--dwaine", "--bogus"]), code: 2, mentions: None },
        ExitCase { label: "no data source", args: args(&["fit"]), code: 2, mentions: None },
    ]
}

/// Runs one case; `Err` describes the mismatch.
pub fn check_exit_case(case: &ExitCase) -> Result<(), String> {
    let argv: Vec<&str> = case.args.iter().map(String::as_str).collect();
    let out = varpart(&argv);
    let code = out.status.code();
    if code != Some(case.code) {
        return Err(format!("{}: exit {code:?}, expected {} ({})", case.label, case.code, stderr(&out).trim()));
    }
    let err = stderr(&out);
    if case.code != 0 && err.trim().is_empty() {
        return Err(format!("{}: no diagnostic", case.label));
    }
    if let Some(word) = case.mentions {
        if !err.contains(word) {
            return Err(format!("{}: diagnostic {:?} does not mention {word:?}", case.label, err.trim()));
        }
    }
    Ok(())
}
