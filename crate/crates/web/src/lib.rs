//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Points cross the boundary as the JSON point format of the core crate,
//! with coordinates in demo pixels (origin bottom-left, 640 × 480).

use multipack::geometry::{perturb, Dim};
use multipack::instances::{derive_seed, pentagon_five, random_point_set};
use multipack::io::{parse_index_set, parse_points_json, points_to_json};
use multipack::multipacking::{multipacking_number, DEFAULT_BRUTE_LIMIT};
use multipack::plane::{
    build_nng, conflict_graph, greedy_2_multipacking, max_1_multipacking, max_2_multipacking_exact, max_degree_audit,
    ExactOptions,
};
use multipack::svg::{render, RenderOptions};
use multipack::{Coordinate, Error, PointSet, Result};
use wasm_bindgen::prelude::*;

pub const WIDTH: f64 = 640.0;
pub const HEIGHT: f64 = 480.0;
/// Exact search in the page is stopped well before it could freeze the tab.
const PAGE_BUDGET: u64 = 2_000_000;
const RANDOM_SPAN: i64 = 400;

fn js(e: Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn points(json: &str) -> Result<PointSet> {
    let p = parse_points_json(json)?;
    if p.dim() != Dim::Plane {
        return Err(Error::Incompatible("the demo works in the plane".into()));
    }
    Ok(p)
}

pub fn solve_json(points_json: &str, method: &str) -> Result<String> {
    let p = points(points_json)?;
    let report = match method {
        "nng" => max_1_multipacking(&p)?,
        "exact" => max_2_multipacking_exact(&p, &ExactOptions { node_budget: Some(PAGE_BUDGET), canonical: true })?,
        "greedy" => greedy_2_multipacking(&p)?,
        "brute" => multipacking_number(&p, DEFAULT_BRUTE_LIMIT)?,
        other => return Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
    };
    Ok(report.to_json())
}

pub fn render_json(points_json: &str, witness_json: &str, edges: &str, circles: bool) -> Result<String> {
    let p = points(points_json)?;
    let witness = if witness_json.trim().is_empty() { Vec::new() } else { parse_index_set(witness_json)? };
    let graph = match edges {
        "nng" if p.len() >= 2 => Some(build_nng(&p, &multipack::geometry::build_neighbor_prefix(&p, 1)?)?),
        "gp" if p.len() >= 3 => Some(conflict_graph(&p)?),
        _ => None,
    };
    let opts = RenderOptions {
        width: WIDTH,
        height: HEIGHT,
        margin: 0.0,
        second_neighbor_circles: circles,
        window: Some([0.0, 0.0, WIDTH, HEIGHT]),
    };
    Ok(render(&p, Some(&witness), graph.as_ref(), &opts))
}

pub fn random_json(n: usize, seed: u64) -> Result<String> {
    let grid = RANDOM_SPAN.max((n * n) as i64) as u64;
    let p = random_point_set(n, Dim::Plane, derive_seed(seed, 0), grid)?;
    let k = Coordinate::new(RANDOM_SPAN, grid as i64)?;
    let shift =
        [Coordinate::integer((WIDTH as i64 - RANDOM_SPAN) / 2), Coordinate::integer((HEIGHT as i64 - RANDOM_SPAN) / 2)];
    Ok(points_to_json(&p.transformed(&k, &shift)?))
}

pub fn pentagon_json() -> Result<String> {
    let shift = [Coordinate::integer(WIDTH as i64 / 2), Coordinate::integer(HEIGHT as i64 / 2)];
    Ok(points_to_json(&pentagon_five().transformed(&Coordinate::integer(2), &shift)?))
}

pub fn perturb_json(points_json: &str, seed: u64) -> Result<String> {
    let p = points(points_json)?;
    Ok(points_to_json(&perturb(&p, &Coordinate::new(1, 2)?, seed)?))
}

pub fn audit_json(points_json: &str) -> Result<String> {
    let audit = max_degree_audit(&points(points_json)?)?;
    Ok(serde_json::to_string(&audit).expect("plain struct"))
}

/// Solves for `method` in `nng` (r = 1), `exact` or `greedy` (r = 2), or
/// `brute` (full radius) and returns the report JSON.
#[wasm_bindgen]
pub fn solve(points_json: &str, method: &str) -> Result<String, JsValue> {
    solve_json(points_json, method).map_err(js)
}

/// SVG of the points; `witness_json` is an index array or a report, `edges`
/// is `none`, `nng` or `gp`.
#[wasm_bindgen]
pub fn render_svg(points_json: &str, witness_json: &str, edges: &str, circles: bool) -> Result<String, JsValue> {
    render_json(points_json, witness_json, edges, circles).map_err(js)
}

#[wasm_bindgen]
pub fn random_points(n: usize, seed: u32) -> Result<String, JsValue> {
    random_json(n, seed.into()).map_err(js)
}

#[wasm_bindgen]
pub fn pentagon() -> Result<String, JsValue> {
    pentagon_json().map_err(js)
}

/// Moves every point by less than half a pixel until all neighbor
/// distances are distinct.
#[wasm_bindgen]
pub fn perturb_points(points_json: &str, seed: u32) -> Result<String, JsValue> {
    perturb_json(points_json, seed.into()).map_err(js)
}

#[wasm_bindgen]
pub fn degree_audit(points_json: &str) -> Result<String, JsValue> {
    audit_json(points_json).map_err(js)
}
