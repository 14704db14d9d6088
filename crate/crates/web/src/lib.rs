//! Browser bindings. Every export takes plain strings or integers and returns
//! a JSON document; failures come back as `{"error": name, "message": text}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use seifert_core::foundation::format_rational;
use seifert_core::hj::{expand, lattice_hull_oracle};
use seifert_core::moduli::floer_table;
use seifert_core::notation::{format_manifold, parse_bundle, parse_manifold};
use seifert_core::{Error, Result};

fn respond(result: Result<Value>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.name(), "message": e.to_string() }).to_string(),
    }
}

/// Rank by grading for `Sigma(...)` or `M(...)` input.
pub fn hf_table_json(manifold: &str) -> String {
    respond((|| {
        let y = parse_manifold(manifold)?;
        let table = floer_table(&y)?;
        let ranks: Vec<Value> =
            table.ranks.iter().map(|(g, r)| json!({ "grading": g.to_string(), "rank": r })).collect();
        Ok(json!({
            "manifold": format_manifold(&y),
            "ranks": ranks,
            "total": table.total_rank(),
        }))
    })())
}

/// Expansion of `p/q` together with the lattice points it is read from.
pub fn hj_chain_json(p: i64, q: i64) -> String {
    respond((|| {
        let chain = expand(p, q)?;
        let hull = lattice_hull_oracle(p, q)?;
        let points = lattice_points(p, q)?;
        Ok(json!({
            "p": p,
            "q": q,
            "coefficients": chain.coefficients(),
            "denominators": chain.denominators(),
            "hull": hull.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
            "points": points,
        }))
    })())
}

/// Points of the lattice `i + qj ≡ 0 (mod p)` in the plotting window;
/// capped so the page stays responsive.
fn lattice_points(p: i64, q: i64) -> Result<Vec<[i64; 2]>> {
    if p > 200 {
        return Err(Error::InvalidData(format!("p = {p} is too large to plot (at most 200)")));
    }
    let mut out = Vec::new();
    for x in -p..=0 {
        for y in 0..=p {
            if (x + q * y).rem_euclid(p) == 0 {
                out.push([x, y]);
            }
        }
    }
    Ok(out)
}

/// `dim_Y(e₁) + dim_{Y⁻¹}(e₂)`.
pub fn flow_dimension_json(manifold: &str, e1: &str, e2: &str) -> String {
    respond((|| {
        let y = parse_manifold(manifold)?;
        let a = parse_bundle(e1, y.base())?;
        let b = parse_bundle(e2, y.base())?;
        let dim = seifert_core::flow_dimension(&y, &a, &b)?;
        Ok(json!({
            "manifold": format_manifold(&y),
            "from": a.to_string(),
            "to": b.to_string(),
            "dim": format_rational(&dim),
        }))
    })())
}

#[wasm_bindgen]
pub fn hf_table(manifold: &str) -> String {
    hf_table_json(manifold)
}

#[wasm_bindgen]
pub fn hj_chain(p: i32, q: i32) -> String {
    hj_chain_json(i64::from(p), i64::from(q))
}

#[wasm_bindgen]
pub fn flow_dimension(manifold: &str, e1: &str, e2: &str) -> String {
    flow_dimension_json(manifold, e1, e2)
}
