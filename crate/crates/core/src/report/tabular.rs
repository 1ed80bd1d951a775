//! CSV renderings at full precision.

use serde::Serialize;
use serde_json::Value;

use super::views::VennDocument;

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&join(k), child, out);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), child, out);
            }
        }
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn write_rows(header: [&str; 2], rows: impl IntoIterator<Item = (String, String)>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for (a, b) in rows {
        w.write_record([a, b]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// One `path,value` row per scalar of the document's JSON form.
pub fn flattened<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    write_rows(["path", "value"], rows)
}

/// One row per region: each predictor's unique SS, then common, residual,
/// missing and total.
pub fn venn_regions(doc: &VennDocument) -> String {
    let v = &doc.venn.regions;
    let mut rows: Vec<(String, String)> = v
        .unique
        .iter()
        .map(|u| (format!("unique:{}", u.predictor), u.ss.to_string()))
        .collect();
    rows.push(("common".into(), v.common_total.to_string()));
    rows.push(("residual".into(), v.residual.to_string()));
    rows.push(("missing".into(), v.missing.to_string()));
    rows.push(("total".into(), v.ss_total.to_string()));
    write_rows(["region", "ss"], rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flattens_nested_values() {
        let v = serde_json::json!({"a": {"b": [1.5, null]}, "c": "x"});
        let mut rows = Vec::new();
        flatten("", &v, &mut rows);
        assert_eq!(
            rows,
            [
                ("a.b[0]".to_string(), "1.5".to_string()),
                ("a.b[1]".to_string(), String::new()),
                ("c".to_string(), "x".to_string()),
            ]
        );
    }
}
