//! Deterministic SVG drawings of matchstick graphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::faces::{FaceClass, FaceDecomposition, FaceKind};
use crate::geometry::Point;
use crate::graph::MatchstickGraph;

/// An annotated vector drawn as an arrow from `origin`.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrow {
    pub origin: Point,
    pub vector: Point,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Pixels per unit length.
    pub scale: f64,
    pub vertex_radius: f64,
    pub margin: f64,
    /// Edge ids drawn dashed.
    pub dashed_edges: BTreeSet<usize>,
    /// Vertex ids drawn hollow and labelled.
    pub marked_vertices: BTreeSet<usize>,
    /// Fill bounded faces by class (needs faces passed to [`render_svg`]).
    pub face_fill: bool,
    /// Draw the graph's disk outline, if it has one.
    pub disk: bool,
    pub arrows: Vec<Arrow>,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            scale: 60.0,
            vertex_radius: 3.0,
            margin: 20.0,
            dashed_edges: BTreeSet::new(),
            marked_vertices: BTreeSet::new(),
            face_fill: false,
            disk: false,
            arrows: Vec::new(),
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".into()
    } else {
        s
    }
}

fn face_color(kind: FaceKind) -> Option<&'static str> {
    match kind {
        FaceKind::Triangle => Some("#f4a6a6"),
        FaceKind::Rhombus => Some("#cfe3f7"),
        FaceKind::FatRhombus => Some("#f7d9a8"),
        FaceKind::Other => Some("#e8e8e8"),
        FaceKind::Outer => None,
    }
}

/// SVG 1.1 document for `g`. Identical input gives byte-identical output.
/// `faces` carries the graph they were enumerated on, which may be `g` with
/// isolated vertices dropped.
pub fn render_svg(
    g: &MatchstickGraph,
    faces: Option<(&MatchstickGraph, &FaceDecomposition, &[FaceClass])>,
    style: &RenderStyle,
) -> Result<String> {
    if !(style.scale.is_finite() && style.scale > 0.0) {
        return Err(Error::InvalidParameter("scale must be positive".into()));
    }
    let disk = if style.disk { g.disk().copied() } else { None };
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |p: Point| {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    };
    g.vertices().iter().for_each(|&p| grow(p));
    if let Some(d) = disk {
        grow(d.center - Point::new(d.radius, d.radius));
        grow(d.center + Point::new(d.radius, d.radius));
    }
    for a in &style.arrows {
        grow(a.origin);
        grow(a.origin + a.vector);
    }
    if g.n() == 0 && disk.is_none() && style.arrows.is_empty() {
        lo = Point::ORIGIN;
        hi = Point::ORIGIN;
    }
    let s = style.scale;
    let m = style.margin;
    let width = (hi.x - lo.x) * s + 2.0 * m;
    let height = (hi.y - lo.y) * s + 2.0 * m;
    let tx = |p: Point| (num((p.x - lo.x) * s + m), num((hi.y - p.y) * s + m));

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    );
    if !style.arrows.is_empty() {
        let _ = writeln!(
            out,
            r##"<defs><marker id="head" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="#b03030"/></marker></defs>"##
        );
    }
    if let Some(d) = disk {
        let (cx, cy) = tx(d.center);
        let _ = writeln!(
            out,
            r##"<circle cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="#888888" stroke-width="1"/>"##,
            num(d.radius * s)
        );
    }
    if let (true, Some((fg, fd, classes))) = (style.face_fill, faces) {
        let _ = writeln!(out, r#"<g stroke="none">"#);
        for f in 0..fd.face_count() {
            if let Some(color) = face_color(classes[f].kind) {
                let pts: Vec<String> = fd
                    .walk_vertices(fg, f)
                    .into_iter()
                    .map(|v| {
                        let (x, y) = tx(fg.point(v));
                        format!("{x},{y}")
                    })
                    .collect();
                let _ = writeln!(out, r#"<polygon points="{}" fill="{color}"/>"#, pts.join(" "));
            }
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(
        out,
        r##"<g stroke="#000000" stroke-width="1.5" stroke-linecap="round">"##
    );
    for (id, &(i, j)) in g.edges().iter().enumerate() {
        let (x1, y1) = tx(g.point(i));
        let (x2, y2) = tx(g.point(j));
        let dash = if style.dashed_edges.contains(&id) {
            r#" stroke-dasharray="6,4""#
        } else {
            ""
        };
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{dash}/>"#);
    }
    let _ = writeln!(out, "</g>");
    for a in &style.arrows {
        let (x1, y1) = tx(a.origin);
        let (x2, y2) = tx(a.origin + a.vector);
        let _ = writeln!(
            out,
            r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#b03030" stroke-width="2" marker-end="url(#head)"/>"##
        );
        let (lx, ly) = tx(a.origin + a.vector * 1.1);
        let _ = writeln!(
            out,
            r##"<text x="{lx}" y="{ly}" font-family="serif" font-size="14" fill="#b03030">{}</text>"##,
            escape(&a.label)
        );
    }
    let r = num(style.vertex_radius);
    let _ = writeln!(out, r##"<g fill="#000000">"##);
    for (v, &p) in g.vertices().iter().enumerate() {
        let (cx, cy) = tx(p);
        if style.marked_vertices.contains(&v) {
            let _ = writeln!(
                out,
                r##"<circle cx="{cx}" cy="{cy}" r="{r}" fill="#ffffff" stroke="#000000" stroke-width="1.5"/>"##
            );
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="10">{v}</text>"#,
                num((p.x - lo.x) * s + m + style.vertex_radius + 2.0),
                num((hi.y - p.y) * s + m - style.vertex_radius - 2.0)
            );
        } else {
            let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="{r}"/>"#);
        }
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
