//! Browser bindings. Each export returns a JSON string holding an SVG
//! drawing and a few numbers for the page to show.

use matchstick::analysis::{bound_thm1_lower, bound_thm1_upper};
use matchstick::generators::{gen_disk_lattice, triangle_free_construction, triangle_free_target};
use matchstick::pathfinder::{path_vertices, sample_edges, Context, ExtendOutcome, StepEvent};
use matchstick::reduction::reduce;
use matchstick::render::{render_svg, Arrow, RenderStyle};
use matchstick::{Point, Tolerance};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest graphs the page will build.
pub const MAX_TRIANGLE_FREE_N: usize = 2000;
pub const MAX_LATTICE_N: usize = 3000;

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Triangle-free construction on `n` vertices, augmentation edges dashed.
pub fn triangle_free_json(n: usize) -> Result<String, String> {
    if n > MAX_TRIANGLE_FREE_N {
        return Err(format!("n must be at most {MAX_TRIANGLE_FREE_N}"));
    }
    let c = triangle_free_construction(n).map_err(fail)?;
    let style = RenderStyle {
        scale: 40.0,
        dashed_edges: c.added_edges.iter().copied().collect(),
        marked_vertices: c.added_vertices.iter().copied().collect(),
        ..RenderStyle::default()
    };
    let svg = render_svg(&c.graph, None, &style).map_err(fail)?;
    Ok(json!({
        "svg": svg,
        "n": c.graph.n(),
        "e": c.graph.e(),
        "target": triangle_free_target(n),
        "lower": bound_thm1_lower(n),
        "upper": bound_thm1_upper(n),
        "base_k": c.base_k,
        "added_vertices": c.added_vertices.len(),
    })
    .to_string())
}

/// Flattened lattice in the disk of radius `r`, with its generating vectors.
pub fn disk_lattice_json(r: f64, n: usize) -> Result<String, String> {
    if n > MAX_LATTICE_N {
        return Err(format!("n must be at most {MAX_LATTICE_N}"));
    }
    let (g, prm) = gen_disk_lattice(r, n).map_err(fail)?;
    let style = RenderStyle {
        scale: 400.0 / (2.0 * r),
        vertex_radius: 1.5,
        disk: true,
        arrows: vec![
            Arrow {
                origin: Point::ORIGIN,
                vector: prm.a,
                label: "a".into(),
            },
            Arrow {
                origin: Point::ORIGIN,
                vector: prm.b,
                label: "b".into(),
            },
        ],
        ..RenderStyle::default()
    };
    let svg = render_svg(&g, None, &style).map_err(fail)?;
    Ok(json!({
        "svg": svg,
        "n": g.n(),
        "e": g.e(),
        "ratio": g.e() as f64 / g.n() as f64,
        "coefficient": 2.0 - 5.0 / r,
        "params": prm,
    })
    .to_string())
}

/// Reduces a disk lattice and runs Extend-Path from a seeded regular edge.
/// The final path is dashed and its vertices marked.
pub fn extend_path_json(r: f64, n: usize, seed: u64) -> Result<String, String> {
    if n > MAX_LATTICE_N {
        return Err(format!("n must be at most {MAX_LATTICE_N}"));
    }
    let tol = Tolerance::default();
    let (g, _) = gen_disk_lattice(r, n).map_err(fail)?;
    let red = reduce(&g, r, &tol).map_err(fail)?.after_fat_rhombi;
    let ctx = Context::new(&red, r, &tol).map_err(fail)?;
    let regular = ctx.regular().iter().filter(|&&b| b).count();
    let alpha = *sample_edges(ctx.regular(), 1, seed)
        .first()
        .ok_or("graph has no edges")?;
    let trace = ctx.run(alpha, red.n() * (red.n() + 1)).map_err(fail)?;
    let (path, irregular) = match &trace.outcome {
        ExtendOutcome::FoundIrregular { edge, path } => (path.clone(), Some(*edge)),
        ExtendOutcome::Exhausted { path, .. } => (path.clone(), None),
    };
    let mut dashed: std::collections::BTreeSet<usize> =
        path.windows(2).filter_map(|w| red.edge_id(w[0], w[1])).collect();
    dashed.extend(irregular);
    let style = RenderStyle {
        scale: 400.0 / (2.0 * r),
        vertex_radius: 1.5,
        disk: true,
        dashed_edges: dashed,
        marked_vertices: path_vertices(&path),
        ..RenderStyle::default()
    };
    let svg = render_svg(&red, None, &style).map_err(fail)?;
    let hats = trace
        .events
        .iter()
        .filter(|e| matches!(e, StepEvent::HatReplaced { .. }))
        .count();
    Ok(json!({
        "svg": svg,
        "n": red.n(),
        "e": red.e(),
        "regular_edges": regular,
        "alpha": alpha,
        "found_irregular": trace.found_irregular(),
        "irregular_edge": irregular,
        "steps": trace.steps,
        "hats": hats,
        "final_length": trace.final_length,
        "step_bound": trace.step_bound,
    })
    .to_string())
}

#[wasm_bindgen(js_name = triangleFree)]
pub fn triangle_free(n: usize) -> Result<String, JsError> {
    triangle_free_json(n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = diskLattice)]
pub fn disk_lattice(r: f64, n: usize) -> Result<String, JsError> {
    disk_lattice_json(r, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = extendPath)]
pub fn extend_path(r: f64, n: usize, seed: u32) -> Result<String, JsError> {
    extend_path_json(r, n, u64::from(seed)).map_err(|e| JsError::new(&e))
}
