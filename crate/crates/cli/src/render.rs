//! Text, CSV and JSON renderings. Rationals are `p/q` strings in JSON unless
//! they are integers, in which case they are plain numbers.

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use seifert_core::foundation::format_rational;
use seifert_core::moduli::{ComponentKind, CriticalComponent, FloerTable};
use seifert_core::notation::bundle_list;
use seifert_core::Rational;

pub fn rational(r: &Rational) -> Value {
    match r.is_integer().then(|| r.numer().to_i64()).flatten() {
        Some(n) => json!(n),
        None => json!(format_rational(r)),
    }
}

pub fn big(n: &num_bigint::BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn component(c: &CriticalComponent) -> Value {
    json!({
        "kind": match c.kind {
            ComponentKind::Reducible => "reducible",
            ComponentKind::Irreducible => "irreducible",
        },
        "data": bundle_list(&c.data),
        "sign": c.sign.map(|s| s.as_str()),
        "dim": c.complex_dim,
        "grading": c.grading.as_ref().map(rational),
        "degree": format_rational(&c.data.degree()),
        "cs": format_rational(&c.cs),
    })
}

pub fn ranks(table: &FloerTable) -> Value {
    let map: serde_json::Map<String, Value> =
        table.ranks.iter().map(|(g, r)| (g.to_string(), json!(r))).collect();
    Value::Object(map)
}

/// Left-aligned columns separated by two spaces.
pub fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(cell, &w)| format!("{cell:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn rank_rows(table: &FloerTable) -> Vec<Vec<String>> {
    table.ranks.iter().map(|(g, r)| vec![g.to_string(), r.to_string()]).collect()
}

pub fn component_rows<'a>(components: impl Iterator<Item = &'a CriticalComponent>) -> Vec<Vec<String>> {
    components
        .map(|c| {
            vec![
                match c.kind {
                    ComponentKind::Reducible => "reducible".to_string(),
                    ComponentKind::Irreducible => "irreducible".to_string(),
                },
                c.sign.map_or("none".to_string(), |s| s.as_str().to_string()),
                c.data.to_string(),
                format_rational(&c.data.degree()),
                c.complex_dim.to_string(),
                c.grading.as_ref().map_or("none".to_string(), format_rational),
                format_rational(&c.cs),
            ]
        })
        .collect()
}

pub const COMPONENT_HEADER: [&str; 7] = ["kind", "sign", "data", "degree", "dim", "grading", "cs"];

/// One compact JSON document per line.
pub fn line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}
