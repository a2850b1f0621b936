//! Browser bindings: generate a family member, complete a structure, and
//! classify its intervals and symmetry.

use std::fmt::Write;

use lattice_loom::completion::{dm_completion, is_cycle_free};
use lattice_loom::generators::{generate, Family};
use lattice_loom::symmetry::is_locally_s_arc_transitive;
use lattice_loom::{automorphism_group, classify_interval, is_dm_complete, AutMode, BipartiteGraph, Poset};
use lattice_loom_cli::dot::{export_dot, DotOptions};
use lattice_loom_cli::io::{parse, to_text, Structure, StructureFile};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest input the page will complete; keeps the tab responsive.
const MAX_ELEMENTS: usize = 400;

fn read(text: &str) -> Result<Poset, String> {
    let s = parse(text).and_then(|f| f.to_structure()).map_err(|e| e.to_string())?;
    let p = s.to_poset().map_err(|e| e.to_string())?;
    if p.len() > MAX_ELEMENTS {
        return Err(format!("{} elements; the demo accepts at most {MAX_ELEMENTS}", p.len()));
    }
    Ok(p)
}

/// Hasse diagram as SVG, rows by height; `open` elements are drawn hollow.
pub fn hasse_svg(p: &Poset, open: &[usize]) -> String {
    let heights = p.heights();
    let rows = heights.iter().max().map_or(0, |h| h + 1);
    let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); rows];
    for (x, &h) in heights.iter().enumerate() {
        by_row[h].push(x);
    }
    let width = by_row.iter().map(Vec::len).max().unwrap_or(0).max(1) as f64 * 56.0 + 40.0;
    let height = rows.max(1) as f64 * 80.0 + 20.0;
    let mut pos = vec![(0.0, 0.0); p.len()];
    for (h, row) in by_row.iter().enumerate() {
        let step = (width - 40.0) / row.len() as f64;
        for (i, &x) in row.iter().enumerate() {
            pos[x] = (20.0 + step * (i as f64 + 0.5), height - 40.0 - h as f64 * 80.0);
        }
    }
    let mut svg = String::new();
    write!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-size="11">"#).unwrap();
    for (a, b) in p.covers() {
        let ((x1, y1), (x2, y2)) = (pos[a], pos[b]);
        write!(svg, r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="black"/>"#).unwrap();
    }
    for (x, &(cx, cy)) in pos.iter().enumerate() {
        let fill = if open.contains(&x) { "white" } else { "black" };
        write!(svg, r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="6" fill="{fill}" stroke="black"/>"#).unwrap();
        let label = p.label(x).replace('&', "&amp;").replace('<', "&lt;");
        write!(svg, r#"<text x="{:.1}" y="{:.1}">{label}</text>"#, cx + 8.0, cy - 6.0).unwrap();
    }
    svg.push_str("</svg>");
    svg
}

pub fn generate_json(family: &str, params: &str) -> Result<String, String> {
    let params: Vec<u64> = params
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("parameter {t:?} is not a number")))
        .collect::<Result<_, _>>()?;
    let f = Family::parse(family, &params).map_err(|e| e.to_string())?;
    let s: Structure = generate(&f).map_err(|e| e.to_string())?.into();
    Ok(to_text(&StructureFile::from_structure(&s)))
}

pub fn complete_json(text: &str) -> Result<String, String> {
    let p = read(text)?;
    let c = dm_completion(&p).map_err(|e| e.to_string())?;
    let q = &c.completion;
    let labels = |xs: &[usize]| xs.iter().map(|&x| q.label(x)).collect::<Vec<_>>();
    let dot = export_dot(&Structure::Poset(q.clone()), &DotOptions { added: c.added.clone() });
    Ok(json!({
        "elements": q.len(),
        "original": p.len(),
        "added": labels(&c.added),
        "levels": q.level_sizes(),
        "up_ram": labels(&c.up_ram),
        "down_ram": labels(&c.down_ram),
        "cycle_free": is_cycle_free(&p).ok(),
        "svg": hasse_svg(q, &c.added),
        "dot": dot,
    })
    .to_string())
}

pub fn classify_json(text: &str) -> Result<String, String> {
    let p = read(text)?;
    let shape = classify_interval(&p).map_err(|e| e.to_string())?;
    let group = automorphism_group(&p, AutMode::OrderPreserving);
    let local = |s| {
        BipartiteGraph::from_poset(&p)
            .ok()
            .and_then(|g| is_locally_s_arc_transitive(g.graph(), s).ok())
            .map(|r| r.verdict)
    };
    Ok(json!({
        "interval": format!("{:?}", shape.kind),
        "uniform": shape.counterexample.is_none(),
        "dm_complete": is_dm_complete(&p),
        "group_order": group.order().to_string(),
        "orbits": group.orbits().len(),
        "locally_1_arc_transitive": local(1),
        "locally_2_arc_transitive": local(2),
        "svg": hasse_svg(&p, &[]),
    })
    .to_string())
}

/// Structure file (one JSON line) for a named family.
#[wasm_bindgen]
pub fn generate_family(family: &str, params: &str) -> Result<String, JsError> {
    generate_json(family, params).map_err(|e| JsError::new(&e))
}

/// Completion summary with SVG and DOT drawings.
#[wasm_bindgen]
pub fn complete(structure: &str) -> Result<String, JsError> {
    complete_json(structure).map_err(|e| JsError::new(&e))
}

/// Interval shape and symmetry of a two-level structure.
#[wasm_bindgen]
pub fn classify(structure: &str) -> Result<String, JsError> {
    classify_json(structure).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn family_names() -> String {
    Family::NAMES.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn crown_round_trip_through_the_page_operations() {
        let file = generate_json("crown", "3").unwrap();
        let done: Value = serde_json::from_str(&complete_json(&file).unwrap()).unwrap();
        assert_eq!(done["elements"], 6);
        assert_eq!(done["added"].as_array().unwrap().len(), 0);
        let info: Value = serde_json::from_str(&classify_json(&file).unwrap()).unwrap();
        assert_eq!(info["interval"], "Chain(2)");
        // Hexagon symmetries that keep each level in place.
        assert_eq!(info["group_order"], "6");
    }

    #[test]
    fn bowtie_draws_two_open_circles() {
        let file = r#"{"kind":"poset","n":6,"edges":[[0,3],[0,4],[1,3],[1,4],[1,5],[2,4],[2,5]]}"#;
        let done: Value = serde_json::from_str(&complete_json(file).unwrap()).unwrap();
        let svg = done["svg"].as_str().unwrap();
        assert_eq!(svg.matches("<circle").count(), 8);
        assert_eq!(svg.matches(r#"fill="white""#).count(), 2);
    }

    #[test]
    fn bad_input_is_reported() {
        assert!(generate_json("crown", "x").is_err());
        assert!(complete_json("{").is_err());
        assert!(generate_json("nothing", "").is_err());
    }
}
