//! Face structure of a drawing: rotation system, face walks and face classes.
//!
//! Darts (directed edges) are numbered `2 * edge` for `i -> j` and
//! `2 * edge + 1` for `j -> i`, where `(i, j)` is the stored edge with `i < j`.
//! Bounded faces are walked counterclockwise, the outer face clockwise.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{direction_angle, rhombus_small_angle, Tolerance};
use crate::graph::MatchstickGraph;

pub type Dart = usize;

pub fn dart_edge(d: Dart) -> usize {
    d / 2
}

pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

pub fn dart_origin(g: &MatchstickGraph, d: Dart) -> usize {
    let (i, j) = g.edges()[d / 2];
    if d.is_multiple_of(2) {
        i
    } else {
        j
    }
}

pub fn dart_target(g: &MatchstickGraph, d: Dart) -> usize {
    dart_origin(g, twin(d))
}

/// Outgoing darts at every vertex, sorted counterclockwise by direction.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationSystem {
    pub order: Vec<Vec<Dart>>,
    position: Vec<usize>,
}

impl RotationSystem {
    /// Dart following `d` counterclockwise around its origin.
    pub fn ccw_next(&self, g: &MatchstickGraph, d: Dart) -> Dart {
        let v = dart_origin(g, d);
        let ring = &self.order[v];
        ring[(self.position[d] + 1) % ring.len()]
    }

    /// Dart following `d` clockwise around its origin.
    pub fn cw_next(&self, g: &MatchstickGraph, d: Dart) -> Dart {
        let v = dart_origin(g, d);
        let ring = &self.order[v];
        ring[(self.position[d] + ring.len() - 1) % ring.len()]
    }
}

pub fn rotation_system(g: &MatchstickGraph, tol: &Tolerance) -> Result<RotationSystem> {
    let mut order: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); g.n()];
    for d in 0..2 * g.e() {
        let (u, v) = (dart_origin(g, d), dart_target(g, d));
        let a = direction_angle(g.point(u), g.point(v), tol)?;
        order[u].push((a, d));
    }
    let mut position = vec![0; 2 * g.e()];
    let mut out = Vec::with_capacity(g.n());
    for (v, ring) in order.iter_mut().enumerate() {
        ring.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let k = ring.len();
        if k >= 2 {
            for idx in 0..k {
                let a = ring[idx].0;
                let b = ring[(idx + 1) % k].0;
                let gap = if idx + 1 == k { b + TAU - a } else { b - a };
                if gap <= tol.geom_tol() {
                    return Err(Error::AmbiguousAngles { vertex: v });
                }
            }
        }
        for (idx, &(_, d)) in ring.iter().enumerate() {
            position[d] = idx;
        }
        out.push(ring.iter().map(|&(_, d)| d).collect());
    }
    Ok(RotationSystem { order: out, position })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaceDecomposition {
    /// Dart cycle of every face.
    pub faces: Vec<Vec<Dart>>,
    pub face_of_dart: Vec<usize>,
    pub signed_area: Vec<f64>,
    pub outer: usize,
    /// boundary length -> number of faces
    pub f: BTreeMap<usize, usize>,
}

impl FaceDecomposition {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn boundary_length(&self, face: usize) -> usize {
        self.faces[face].len()
    }

    /// Vertex sequence of the walk (origins of its darts).
    pub fn walk_vertices(&self, g: &MatchstickGraph, face: usize) -> Vec<usize> {
        self.faces[face].iter().map(|&d| dart_origin(g, d)).collect()
    }

    /// Edge ids along the walk, repeated where a bridge is traversed twice.
    pub fn walk_edges(&self, face: usize) -> Vec<usize> {
        self.faces[face].iter().map(|&d| dart_edge(d)).collect()
    }

    /// Distinct edge ids on the boundary of `face`, sorted.
    pub fn face_edges(&self, face: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.walk_edges(face).into_iter().collect();
        set.into_iter().collect()
    }

    /// The (one or two) faces incident to an edge.
    pub fn edge_faces(&self, edge: usize) -> (usize, usize) {
        (self.face_of_dart[2 * edge], self.face_of_dart[2 * edge + 1])
    }
}

/// Walks every face; requires a connected graph.
pub fn enumerate_faces(g: &MatchstickGraph, tol: &Tolerance) -> Result<FaceDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.e() == 0 {
        // A lone vertex (or the empty graph) has only the unbounded face.
        return Ok(FaceDecomposition {
            faces: vec![vec![]],
            face_of_dart: vec![],
            signed_area: vec![0.0],
            outer: 0,
            f: BTreeMap::from([(0, 1)]),
        });
    }
    let rot = rotation_system(g, tol)?;
    let darts = 2 * g.e();
    let mut face_of_dart = vec![usize::MAX; darts];
    let mut faces = Vec::new();
    let mut signed_area = Vec::new();
    for start in 0..darts {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut area2 = 0.0;
        let mut d = start;
        loop {
            if face_of_dart[d] != usize::MAX {
                return Err(Error::FaceStructure(format!("dart {d} reached twice")));
            }
            face_of_dart[d] = id;
            walk.push(d);
            let p = g.point(dart_origin(g, d));
            let q = g.point(dart_target(g, d));
            area2 += p.cross(q);
            // Continue with the dart after twin(d) in clockwise order at the target.
            d = rot.cw_next(g, twin(d));
            if d == start {
                break;
            }
        }
        faces.push(walk);
        signed_area.push(area2 / 2.0);
    }

    let outer = (0..faces.len())
        .min_by(|&a, &b| signed_area[a].total_cmp(&signed_area[b]))
        .expect("at least one face");
    if let Some(bad) = (0..faces.len()).find(|&f| f != outer && signed_area[f] <= 0.0) {
        return Err(Error::FaceStructure(format!(
            "face {bad} has non-positive area {} besides the outer face",
            signed_area[bad]
        )));
    }
    let mut f = BTreeMap::new();
    for w in &faces {
        *f.entry(w.len()).or_insert(0) += 1;
    }
    Ok(FaceDecomposition {
        faces,
        face_of_dart,
        signed_area,
        outer,
        f,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceKind {
    Triangle,
    Rhombus,
    FatRhombus,
    Other,
    Outer,
}

impl FaceKind {
    pub fn is_rhombic(self) -> bool {
        matches!(self, FaceKind::Rhombus | FaceKind::FatRhombus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FaceClass {
    pub kind: FaceKind,
    pub small_angle: Option<f64>,
}

/// Smallest rhombus angle that still counts as fat inside a disk of radius `r`.
pub fn fat_threshold(r: f64) -> f64 {
    PI / (50.0 * r * r)
}

pub fn classify_faces(g: &MatchstickGraph, fd: &FaceDecomposition, r: Option<f64>, tol: &Tolerance) -> Vec<FaceClass> {
    (0..fd.face_count())
        .map(|face| {
            if face == fd.outer {
                return FaceClass {
                    kind: FaceKind::Outer,
                    small_angle: None,
                };
            }
            let verts = fd.walk_vertices(g, face);
            let distinct_v: BTreeSet<usize> = verts.iter().copied().collect();
            let distinct_e: BTreeSet<usize> = fd.walk_edges(face).into_iter().collect();
            let len = verts.len();
            if len == 3 && distinct_v.len() == 3 && distinct_e.len() == 3 {
                return FaceClass {
                    kind: FaceKind::Triangle,
                    small_angle: None,
                };
            }
            if len == 4 && distinct_v.len() == 4 && distinct_e.len() == 4 {
                let p: Vec<_> = verts.iter().map(|&v| g.point(v)).collect();
                if let Ok(theta) = rhombus_small_angle(p[0], p[1], p[2], p[3], tol) {
                    let fat = r.is_some_and(|r| theta >= fat_threshold(r));
                    return FaceClass {
                        kind: if fat { FaceKind::FatRhombus } else { FaceKind::Rhombus },
                        small_angle: Some(theta),
                    };
                }
            }
            FaceClass {
                kind: FaceKind::Other,
                small_angle: None,
            }
        })
        .collect()
}
