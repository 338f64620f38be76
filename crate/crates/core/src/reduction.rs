//! Reduction to a core without triangular faces and without fat rhombi.
//!
//! Each phase repeatedly removes the smallest edge of the first offending
//! face until none is left. Vertices are never touched.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::faces::{classify_faces, enumerate_faces, FaceKind};
use crate::geometry::{Point, Tolerance};
use crate::graph::{remove_edges, Edge, MatchstickGraph};

/// What one phase removed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseTrace {
    /// Offending faces in the graph the phase started from.
    pub initial_faces: usize,
    /// Removed edges as vertex pairs, in removal order.
    pub removed: Vec<Edge>,
}

fn offending(kind: FaceKind, fat: bool) -> bool {
    if fat {
        kind == FaceKind::FatRhombus
    } else {
        kind == FaceKind::Triangle
    }
}

fn strip(g: &MatchstickGraph, r: Option<f64>, fat: bool, tol: &Tolerance) -> Result<(MatchstickGraph, PhaseTrace)> {
    let mut h = g.clone();
    let mut removed = Vec::new();
    let mut initial = None;
    loop {
        // Dropping isolated vertices keeps edge ids unchanged.
        let (core, _) = h.without_isolated();
        let fd = enumerate_faces(&core, tol)?;
        let cls = classify_faces(&core, &fd, r, tol);
        let mut bad: Vec<(usize, Vec<usize>)> = (0..fd.face_count())
            .filter(|&f| offending(cls[f].kind, fat))
            .map(|f| (f, fd.face_edges(f)))
            .collect();
        initial.get_or_insert(bad.len());
        if bad.is_empty() {
            break;
        }
        bad.sort_by_key(|(_, edges)| edges[0]);
        // Removing an edge merges its two faces into one that is never
        // offending in this phase, so untouched faces can be processed in the
        // same sweep with the same outcome as one removal per round.
        let mut cut: BTreeSet<usize> = BTreeSet::new();
        let mut merged: BTreeSet<usize> = BTreeSet::new();
        for (f, edges) in bad {
            if merged.contains(&f) {
                continue;
            }
            let e = edges[0];
            let (a, b) = fd.edge_faces(e);
            merged.insert(a);
            merged.insert(b);
            cut.insert(e);
            removed.push(h.edges()[e]);
        }
        h = remove_edges(&h, &cut)?;
    }
    Ok((
        h,
        PhaseTrace {
            initial_faces: initial.unwrap_or(0),
            removed,
        },
    ))
}

/// Removes edges until no triangular face remains.
pub fn strip_triangles(g: &MatchstickGraph, tol: &Tolerance) -> Result<(MatchstickGraph, PhaseTrace)> {
    strip(g, None, false, tol)
}

/// Removes edges until no rhombus with small angle at least `π/(50r²)` remains.
pub fn strip_fat_rhombi(g: &MatchstickGraph, r: Option<f64>, tol: &Tolerance) -> Result<(MatchstickGraph, PhaseTrace)> {
    let r = r.ok_or(Error::MissingRadius)?;
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::NonpositiveRadius(r));
    }
    strip(g, Some(r), true, tol)
}

/// Area-derived caps, evaluated only when the input lies in the disk of
/// radius `r` (around its own disk center, or the origin).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CapChecks {
    pub in_disk: bool,
    /// triangles `< 8r²`
    pub triangles_below_cap: Option<bool>,
    /// fat rhombi `<= 100r⁴`
    pub fat_below_cap: Option<bool>,
    /// `e(G) <= e(G'') + 100r⁴ + 8r²`
    pub edge_bound: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTrace {
    pub r: f64,
    pub input_graph: MatchstickGraph,
    pub after_triangles: MatchstickGraph,
    pub after_fat_rhombi: MatchstickGraph,
    pub triangles: PhaseTrace,
    pub fat_rhombi: PhaseTrace,
    pub caps: CapChecks,
}

/// Serializable digest of a [`ReductionTrace`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionSummary {
    pub r: f64,
    pub e_input: usize,
    pub e_after_triangles: usize,
    pub e_after_fat_rhombi: usize,
    pub triangle_face_count: usize,
    pub fat_rhombus_count: usize,
    pub removed_for_triangles: Vec<Edge>,
    pub removed_for_fat: Vec<Edge>,
    pub caps: CapChecks,
}

impl ReductionTrace {
    pub fn summary(&self) -> ReductionSummary {
        ReductionSummary {
            r: self.r,
            e_input: self.input_graph.e(),
            e_after_triangles: self.after_triangles.e(),
            e_after_fat_rhombi: self.after_fat_rhombi.e(),
            triangle_face_count: self.triangles.initial_faces,
            fat_rhombus_count: self.fat_rhombi.initial_faces,
            removed_for_triangles: self.triangles.removed.clone(),
            removed_for_fat: self.fat_rhombi.removed.clone(),
            caps: self.caps,
        }
    }
}

fn fits_disk(g: &MatchstickGraph, r: f64, tol: &Tolerance) -> bool {
    let c = g.disk().map_or(Point::ORIGIN, |d| d.center);
    g.vertices().iter().all(|p| p.dist(c) <= r + tol.geom_tol())
}

/// Both phases, with the cap checks. Fails with `InvariantViolated` if the
/// edge bound does not hold.
pub fn reduce(g: &MatchstickGraph, r: f64, tol: &Tolerance) -> Result<ReductionTrace> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::NonpositiveRadius(r));
    }
    let (g1, triangles) = strip_triangles(g, tol)?;
    let (g2, fat_rhombi) = strip_fat_rhombi(&g1, Some(r), tol)?;
    let r2 = r * r;
    let in_disk = fits_disk(g, r, tol);
    let edge_bound = g.e() as f64 <= g2.e() as f64 + 100.0 * r2 * r2 + 8.0 * r2;
    let caps = CapChecks {
        in_disk,
        triangles_below_cap: in_disk.then_some((triangles.initial_faces as f64) < 8.0 * r2),
        fat_below_cap: in_disk.then_some(fat_rhombi.initial_faces as f64 <= 100.0 * r2 * r2),
        edge_bound,
    };
    if !edge_bound {
        return Err(Error::InvariantViolated(format!(
            "e(G) = {} exceeds e(G'') + 100r^4 + 8r^2 = {} + {}",
            g.e(),
            g2.e(),
            100.0 * r2 * r2 + 8.0 * r2
        )));
    }
    Ok(ReductionTrace {
        r,
        input_graph: g.clone(),
        after_triangles: g1,
        after_fat_rhombi: g2,
        triangles,
        fat_rhombi,
        caps,
    })
}
