//! Browser bindings. Each export returns a JSON string; errors become JS exceptions.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use meshstar::formulas::{bounds_table, combined_bound, format_rational};
use meshstar::labeling::validate;
use meshstar::ordering::construct_with_system;
use meshstar::product::build_product_graph;
use meshstar::search::exact_rn_with_starts;
use meshstar::{Budget, CellIndexing, ProductParams, RadioSystem};

/// Largest product the exact search is offered for.
pub const EXACT_MAX_VERTICES: usize = 27;
/// Largest product the labeling view draws.
pub const LABEL_MAX_VERTICES: usize = 2_000;

#[derive(Serialize)]
struct LabelView {
    name: String,
    m: usize,
    n: usize,
    indexing: &'static str,
    diameter: u32,
    /// `[row, col, star]` per vertex id.
    coords: Vec<[usize; 3]>,
    labels: Vec<u64>,
    order: Vec<usize>,
    span: u64,
    valid: bool,
    consecutive_span: u64,
    consecutive_valid: bool,
    bound: String,
}

#[derive(Serialize)]
struct BoundView {
    label: String,
    value: String,
    integral: bool,
}

#[derive(Serialize)]
struct RnView {
    name: String,
    vertices: usize,
    value: u64,
    exact: bool,
    nodes: u64,
    labels: Option<Vec<u64>>,
    bound: String,
}

fn parse(m: usize, n: usize, indexing: &str) -> meshstar::Result<(ProductParams, CellIndexing)> {
    Ok((ProductParams::new(m, n)?, indexing.parse()?))
}

fn too_large(vertices: usize, limit: usize) -> meshstar::Error {
    meshstar::Error::TooLarge { vertices, limit }
}

pub fn label_json(m: usize, n: usize, indexing: &str) -> meshstar::Result<String> {
    let (p, ix) = parse(m, n, indexing)?;
    if p.vertex_count() > LABEL_MAX_VERTICES {
        return Err(too_large(p.vertex_count(), LABEL_MAX_VERTICES));
    }
    let pg = build_product_graph(p, ix)?;
    let sys = RadioSystem::new(&pg.graph)?;
    let built = construct_with_system(&sys, p, ix)?;
    let view = LabelView {
        name: p.to_string(),
        m,
        n,
        indexing: ix.name(),
        diameter: sys.diameter(),
        coords: pg.coords().map(|(_, c)| [c.row, c.col, c.star]).collect(),
        labels: built.greedy.labels().to_vec(),
        order: built.plan.sequence().to_vec(),
        span: built.greedy.span(),
        valid: validate(&sys, &built.greedy)?.is_valid(),
        consecutive_span: built.consecutive.span(),
        consecutive_valid: built.consecutive_valid,
        bound: format_rational(&combined_bound(p)?),
    };
    Ok(serde_json::to_string(&view).expect("plain data serializes"))
}

pub fn bounds_json(m: usize, n: usize) -> meshstar::Result<String> {
    let rows: Vec<BoundView> = bounds_table(ProductParams::new(m, n)?)?
        .iter()
        .map(|r| BoundView {
            label: r.label(),
            value: format_rational(&r.value),
            integral: r.integral(),
        })
        .collect();
    Ok(serde_json::to_string(&rows).expect("plain data serializes"))
}

/// Exact search with a node limit; the time limit needs a clock the browser lacks.
pub fn exact_json(m: usize, n: usize, max_nodes: u64) -> meshstar::Result<String> {
    let p = ProductParams::new(m, n)?;
    if p.vertex_count() > EXACT_MAX_VERTICES {
        return Err(too_large(p.vertex_count(), EXACT_MAX_VERTICES));
    }
    let pg = build_product_graph(p, CellIndexing::RowMajor)?;
    let sys = RadioSystem::new(&pg.graph)?;
    let r = exact_rn_with_starts(&sys, Budget::nodes(max_nodes), &p.symmetry_representatives())?;
    let view = RnView {
        name: p.to_string(),
        vertices: sys.len(),
        value: r.value,
        exact: r.is_exact(),
        nodes: r.nodes,
        labels: r.witness.map(|w| w.labels().to_vec()),
        bound: format_rational(&combined_bound(p)?),
    };
    Ok(serde_json::to_string(&view).expect("plain data serializes"))
}

fn js(r: meshstar::Result<String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

/// Pairing construction on `P(m,m) □ K1,n` with coordinates for drawing.
#[wasm_bindgen(js_name = labelProduct)]
pub fn label_product(m: usize, n: usize, indexing: &str) -> Result<String, JsError> {
    js(label_json(m, n, indexing))
}

/// Every closed-form bound that applies at `(m, n)`.
#[wasm_bindgen(js_name = boundsTable)]
pub fn bounds(m: usize, n: usize) -> Result<String, JsError> {
    js(bounds_json(m, n))
}

/// Radio number of a small product, or an upper bound if the node limit is hit.
#[wasm_bindgen(js_name = exactRadioNumber)]
pub fn exact_radio_number(m: usize, n: usize, max_nodes: u64) -> Result<String, JsError> {
    js(exact_json(m, n, max_nodes))
}
