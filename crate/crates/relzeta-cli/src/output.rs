use crate::config::Meta;
use serde_json::value::RawValue;
use std::collections::BTreeMap;

/// A row maps column names to values already rendered with 15 significant
/// digits; keeping them textual guarantees byte-identical payloads across
/// runs and identical numerics in the CSV and JSON encodings.
pub type Row = BTreeMap<&'static str, String>;

pub fn num(x: f64) -> String {
    format!("{x:.14e}")
}

pub fn int(x: usize) -> String {
    format!("{x}")
}

pub fn render_json(meta: &Meta, rows: &[Row]) -> String {
    let meta_value = serde_json::to_value(meta).expect("meta serializes");
    let rows_value: Vec<BTreeMap<&str, Box<RawValue>>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|(k, v)| {
                    // finite numbers stay raw JSON numbers; everything else
                    // (booleans aside) is quoted
                    let numeric = v.parse::<f64>().map(|x| x.is_finite()).unwrap_or(false)
                        && v.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-');
                    let raw = if numeric || v == "true" || v == "false" {
                        RawValue::from_string(v.clone()).expect("valid token")
                    } else {
                        RawValue::from_string(serde_json::to_string(v).unwrap()).unwrap()
                    };
                    (*k, raw)
                })
                .collect()
        })
        .collect();
    let doc = serde_json::json!({ "meta": meta_value, "rows": rows_value });
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

pub fn render_csv(meta: &Meta, rows: &[Row]) -> String {
    let mut out = String::new();
    // metadata block as comment lines so the table stays machine-readable
    let meta_json = serde_json::to_string(meta).expect("meta serializes");
    out.push_str(&format!("# meta {meta_json}\n"));
    let mut columns: Vec<&'static str> = Vec::new();
    for row in rows {
        for k in row.keys() {
            if !columns.contains(k) {
                columns.push(k);
            }
        }
    }
    columns.sort_unstable();
    out.push_str(&columns.join(","));
    out.push('\n');
    for row in rows {
        let line: Vec<&str> = columns
            .iter()
            .map(|c| row.get(c).map(|s| s.as_str()).unwrap_or(""))
            .collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Parse the metadata block back out of either encoding.
pub fn reparse_meta(text: &str) -> Option<Meta> {
    if let Some(rest) = text.strip_prefix("# meta ") {
        let line = rest.lines().next()?;
        return serde_json::from_str(line).ok();
    }
    let doc: serde_json::Value = serde_json::from_str(text).ok()?;
    serde_json::from_value(doc.get("meta")?.clone()).ok()
}
