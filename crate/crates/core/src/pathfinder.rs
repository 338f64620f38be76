//! Neighborhood graph over edges, distances to irregular edges, monotone
//! paths, hats, convexity numbers and the Extend-Path procedure.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::irregular_edge_count;
use crate::error::{Error, Result};
use crate::faces::{classify_faces, enumerate_faces, FaceClass, FaceDecomposition, FaceKind};
use crate::geometry::{Point, Tolerance};
use crate::graph::MatchstickGraph;

/// Graph on the edges of a drawing; two edges are adjacent iff they lie on
/// the boundary of a common face. Stored through the edge/face incidences,
/// since a long outer face would otherwise contribute a huge clique.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodGraph {
    face_edges: Vec<Vec<usize>>,
    edge_faces: Vec<[usize; 2]>,
}

impl NeighborhoodGraph {
    pub fn from_faces(fd: &FaceDecomposition, edge_count: usize) -> Self {
        let face_edges = (0..fd.face_count()).map(|f| fd.face_edges(f)).collect();
        let edge_faces = (0..edge_count)
            .map(|e| {
                let (a, b) = fd.edge_faces(e);
                [a.min(b), a.max(b)]
            })
            .collect();
        NeighborhoodGraph { face_edges, edge_faces }
    }

    pub fn node_count(&self) -> usize {
        self.edge_faces.len()
    }

    /// Faces incident to edge `e` (one entry if both sides are the same face).
    pub fn faces_of(&self, e: usize) -> &[usize] {
        let [a, b] = &self.edge_faces[e];
        if a == b {
            &self.edge_faces[e][..1]
        } else {
            &self.edge_faces[e][..]
        }
    }

    /// The smallest face shared by `a` and `b`, if they are adjacent.
    pub fn adjacency(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        let fb = self.faces_of(b);
        self.faces_of(a).iter().copied().filter(|f| fb.contains(f)).min()
    }

    /// Neighbors of `e` with the face realizing each adjacency, sorted by edge.
    pub fn neighbors(&self, e: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &f in self.faces_of(e) {
            for &x in &self.face_edges[f] {
                if x != e {
                    out.push((x, f));
                }
            }
        }
        out.sort_unstable();
        out.dedup_by_key(|p| p.0);
        out
    }

    /// Number of adjacent pairs.
    pub fn adjacency_count(&self) -> usize {
        (0..self.node_count()).map(|e| self.neighbors(e).len()).sum::<usize>() / 2
    }

    /// BFS distances from `sources`; each face is expanded at most once.
    pub fn distances_from(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count()];
        let mut face_done = vec![false; self.face_edges.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(e) = queue.pop_front() {
            let d = dist[e].expect("queued edges have a distance");
            for &f in self.faces_of(e) {
                if std::mem::replace(&mut face_done[f], true) {
                    continue;
                }
                for &x in &self.face_edges[f] {
                    if dist[x].is_none() {
                        dist[x] = Some(d + 1);
                        queue.push_back(x);
                    }
                }
            }
        }
        dist
    }
}

/// Neighborhood graph of a connected drawing.
pub fn build_neighborhood(g: &MatchstickGraph, tol: &Tolerance) -> Result<NeighborhoodGraph> {
    let fd = enumerate_faces(g, tol)?;
    Ok(NeighborhoodGraph::from_faces(&fd, g.e()))
}

fn check_node(n: &NeighborhoodGraph, e: usize) -> Result<()> {
    if e >= n.node_count() {
        return Err(Error::UnknownEdge(e));
    }
    Ok(())
}

pub fn edge_distance(n: &NeighborhoodGraph, a: usize, b: usize) -> Result<usize> {
    check_node(n, a)?;
    check_node(n, b)?;
    n.distances_from(&[a])[b].ok_or(Error::Unreachable(a, b))
}

/// Closest irregular edge to `e` (smallest id among the closest), with its
/// distance. `regular[x]` labels edge `x`.
pub fn nearest_irregular(n: &NeighborhoodGraph, regular: &[bool], e: usize) -> Result<(usize, usize)> {
    check_node(n, e)?;
    let dist = n.distances_from(&[e]);
    (0..n.node_count())
        .filter(|&x| !regular[x])
        .filter_map(|x| dist[x].map(|d| (d, x)))
        .min()
        .map(|(d, x)| (x, d))
        .ok_or(Error::Unreachable(e, e))
}

/// For every edge, the distance to the nearest irregular edge.
pub fn irregular_distances(n: &NeighborhoodGraph, regular: &[bool]) -> Vec<Option<usize>> {
    let sources: Vec<usize> = (0..n.node_count()).filter(|&x| !regular[x]).collect();
    n.distances_from(&sources)
}

/// Consecutive vertices are adjacent and x-coordinates strictly increase.
pub fn is_monotone(g: &MatchstickGraph, path: &[usize], tol: &Tolerance) -> bool {
    !path.is_empty()
        && path.iter().all(|&v| v < g.n())
        && path
            .windows(2)
            .all(|w| g.edge_id(w[0], w[1]).is_some() && g.point(w[1]).x > g.point(w[0]).x + tol.geom_tol())
}

/// Slope angles (in `(−π/2, π/2)`) of the edges of a monotone path.
fn slope_angles(g: &MatchstickGraph, path: &[usize]) -> Vec<f64> {
    path.windows(2)
        .map(|w| {
            let d = g.point(w[1]) - g.point(w[0]);
            d.y.atan2(d.x)
        })
        .collect()
}

/// Number of pairs `i < j` where edge `i` has smaller slope than edge `j`,
/// from slope angles; parallel edges (within `1e-9`) do not count.
pub fn convexity_of_slopes(slopes: &[f64]) -> usize {
    const SLOPE_TOL: f64 = 1e-9;
    let mut c = 0;
    for i in 0..slopes.len() {
        for j in i + 1..slopes.len() {
            if slopes[i] < slopes[j] - SLOPE_TOL {
                c += 1;
            }
        }
    }
    c
}

/// Convexity number of a monotone path: pairs of edges where the left one
/// has smaller slope than the right one. It is 0 on paths convex from below.
pub fn convexity_number(g: &MatchstickGraph, path: &[usize], tol: &Tolerance) -> Result<usize> {
    if !is_monotone(g, path, tol) {
        return Err(Error::NotMonotone);
    }
    Ok(convexity_of_slopes(&slope_angles(g, path)))
}

/// Vertices of a rhombic face by x: left, bottom, right, top.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Hull {
    left: usize,
    bottom: usize,
    right: usize,
    top: usize,
}

fn rhombus_hull(g: &MatchstickGraph, fd: &FaceDecomposition, face: usize, tol: &Tolerance) -> Result<Hull> {
    let mut vs = fd.walk_vertices(g, face);
    vs.sort_by(|&a, &b| g.point(a).x.total_cmp(&g.point(b).x));
    if vs
        .windows(2)
        .any(|w| g.point(w[1]).x - g.point(w[0]).x <= tol.geom_tol())
    {
        return Err(Error::AmbiguousHull { face });
    }
    let (left, right) = (vs[0], vs[3]);
    let chord = g.point(right) - g.point(left);
    let below = |v: usize| chord.cross(g.point(v) - g.point(left)) < 0.0;
    let (bottom, top) = if below(vs[1]) { (vs[1], vs[2]) } else { (vs[2], vs[1]) };
    if !below(bottom) || below(top) {
        return Err(Error::AmbiguousHull { face });
    }
    Ok(Hull {
        left,
        bottom,
        right,
        top,
    })
}

/// Face above each path edge: the face of the dart running left to right.
fn upper_faces(g: &MatchstickGraph, fd: &FaceDecomposition, path: &[usize]) -> Vec<usize> {
    path.windows(2)
        .map(|w| {
            let e = g.edge_id(w[0], w[1]).expect("path edges exist");
            let dart = if g.edges()[e].0 == w[0] { 2 * e } else { 2 * e + 1 };
            fd.face_of_dart[dart]
        })
        .collect()
}

fn locate_hat(
    g: &MatchstickGraph,
    fd: &FaceDecomposition,
    classes: &[FaceClass],
    path: &[usize],
    tol: &Tolerance,
) -> Result<Option<(usize, usize, Hull)>> {
    let above = upper_faces(g, fd, path);
    for j in 0..above.len().saturating_sub(1) {
        let f = above[j];
        if f == above[j + 1] && classes[f].kind.is_rhombic() {
            let h = rhombus_hull(g, fd, f, tol)?;
            if (path[j], path[j + 1], path[j + 2]) != (h.left, h.bottom, h.right) {
                return Err(Error::InvariantViolated(format!(
                    "face {f} above two path edges is not a hat"
                )));
            }
            return Ok(Some((j, f, h)));
        }
    }
    Ok(None)
}

/// The leftmost rhombic face whose lower-left and lower-right edges are
/// consecutive edges of the monotone `path`.
pub fn find_hat(
    g: &MatchstickGraph,
    fd: &FaceDecomposition,
    classes: &[FaceClass],
    path: &[usize],
    tol: &Tolerance,
) -> Result<Option<usize>> {
    if !is_monotone(g, path, tol) {
        return Err(Error::NotMonotone);
    }
    Ok(locate_hat(g, fd, classes, path, tol)?.map(|(_, f, _)| f))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum StepEvent {
    HatReplaced {
        face: usize,
        c_before: usize,
        c_after: usize,
    },
    ExtendedLeft {
        edge: usize,
        c_before: usize,
        c_after: usize,
        length: usize,
    },
    ExtendedRight {
        edge: usize,
        c_before: usize,
        c_after: usize,
        length: usize,
    },
    StoppedIrregular {
        edge: usize,
        length: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ExtendOutcome {
    FoundIrregular { edge: usize, path: Vec<usize> },
    Exhausted { reason: String, path: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtendPathTrace {
    pub alpha: usize,
    /// Angle the drawing was rotated by to make `alpha` horizontal.
    pub rotation: f64,
    pub events: Vec<StepEvent>,
    /// Hat replacements per phase, starting at phase 2.
    pub hats_per_phase: Vec<usize>,
    pub steps: usize,
    pub final_length: usize,
    /// `l(l+1)/2 + l` for the final length `l`.
    pub step_bound: usize,
    pub outcome: ExtendOutcome,
}

impl ExtendPathTrace {
    pub fn found_irregular(&self) -> bool {
        matches!(self.outcome, ExtendOutcome::FoundIrregular { .. })
    }

    pub fn within_step_bound(&self) -> bool {
        self.steps <= self.step_bound
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }
}

/// Runs Extend-Path from edge `alpha` on a reduced drawing (no triangular
/// faces, no rhombus with small angle `>= π/(50r²)`).
///
/// Path vertices in the result use the numbering of `g`. With `max_steps`
/// unset the cap is `n(n+1)`; hitting it yields an `Exhausted` outcome.
pub fn extend_path(
    g: &MatchstickGraph,
    alpha: usize,
    r: f64,
    max_steps: Option<usize>,
    tol: &Tolerance,
) -> Result<ExtendPathTrace> {
    if alpha >= g.e() {
        return Err(Error::UnknownEdge(alpha));
    }
    let ctx = Context::new(g, r, tol)?;
    ctx.run(alpha, max_steps.unwrap_or(g.n() * (g.n() + 1)))
}

/// Everything Extend-Path needs about a reduced drawing, computed once.
pub struct Context {
    /// Original vertex id of every core vertex.
    keep: Vec<usize>,
    core: MatchstickGraph,
    fd: FaceDecomposition,
    classes: Vec<FaceClass>,
    regular: Vec<bool>,
    tol: Tolerance,
}

impl Context {
    /// Isolated vertices are dropped (edge ids are unchanged by that); the
    /// rest must be connected and reduced.
    pub fn new(g: &MatchstickGraph, r: f64, tol: &Tolerance) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::NonpositiveRadius(r));
        }
        let mut used = vec![false; g.n()];
        for &(i, j) in g.edges() {
            used[i] = true;
            used[j] = true;
        }
        let keep: Vec<usize> = (0..g.n()).filter(|&v| used[v]).collect();
        let core = g.induced(&keep);
        let fd = enumerate_faces(&core, tol)?;
        let classes = classify_faces(&core, &fd, Some(r), tol);
        if let Some((face, c)) = classes
            .iter()
            .enumerate()
            .find(|(_, c)| matches!(c.kind, FaceKind::Triangle | FaceKind::FatRhombus))
        {
            let kind = if c.kind == FaceKind::Triangle {
                "triangle"
            } else {
                "fat rhombus"
            };
            return Err(Error::NotReduced {
                face,
                kind: kind.into(),
            });
        }
        let regular = irregular_edge_count(&core, &fd, &classes).regular;
        Ok(Context {
            keep,
            core,
            fd,
            classes,
            regular,
            tol: *tol,
        })
    }

    /// Regular-edge labels (edge ids as in the input graph).
    pub fn regular(&self) -> &[bool] {
        &self.regular
    }

    pub fn run(&self, alpha: usize, max_steps: usize) -> Result<ExtendPathTrace> {
        if alpha >= self.core.e() {
            return Err(Error::UnknownEdge(alpha));
        }
        let tol = &self.tol;
        let (i, j) = self.core.edges()[alpha];
        let d = self.core.point(j) - self.core.point(i);
        let rotation = -d.y.atan2(d.x);
        let rotated: Vec<Point> = self.core.vertices().iter().map(|p| p.rotate(rotation)).collect();
        let rg = MatchstickGraph::new(rotated, self.core.edges().to_vec(), None)?;
        let (fd, classes) = (&self.fd, &self.classes);

        let mut path = if rg.point(i).x < rg.point(j).x {
            vec![i, j]
        } else {
            vec![j, i]
        };
        let mut events = Vec::new();
        let mut hats_per_phase = vec![0usize];
        let mut c = 0usize;
        let to_original = |p: &[usize]| p.iter().map(|&v| self.keep[v]).collect::<Vec<_>>();
        let edge_of = |a: usize, b: usize| rg.edge_id(a, b).expect("path edges exist");

        let outcome = loop {
            if events.len() >= max_steps {
                break ExtendOutcome::Exhausted {
                    reason: format!("step limit {max_steps} reached"),
                    path: to_original(&path),
                };
            }
            // Step (i, 1): replace hats while there are any.
            if let Some((pos, face, h)) = locate_hat(&rg, fd, classes, &path, tol)? {
                path[pos + 1] = h.top;
                let after = convexity_of_slopes(&slope_angles(&rg, &path));
                if after + 1 != c || !is_monotone(&rg, &path, tol) {
                    return Err(Error::InvariantViolated(format!(
                        "hat on face {face} changed the convexity number from {c} to {after}"
                    )));
                }
                events.push(StepEvent::HatReplaced {
                    face,
                    c_before: c,
                    c_after: after,
                });
                *hats_per_phase.last_mut().expect("phase exists") += 1;
                c = after;
                continue;
            }
            // Step (i, 2): scan the faces above the path.
            let above = upper_faces(&rg, fd, &path);
            if let Some(pos) = above.iter().position(|&f| !classes[f].kind.is_rhombic()) {
                let edge = edge_of(path[pos], path[pos + 1]);
                events.push(StepEvent::StoppedIrregular {
                    edge,
                    length: path.len() - 1,
                });
                break ExtendOutcome::FoundIrregular {
                    edge,
                    path: to_original(&path),
                };
            }
            let hulls: Vec<Hull> = above
                .iter()
                .map(|&f| rhombus_hull(&rg, fd, f, tol))
                .collect::<Result<_>>()?;
            let mut rightsided = Vec::with_capacity(hulls.len());
            for (k, h) in hulls.iter().enumerate() {
                let (a, b) = (path[k], path[k + 1]);
                rightsided.push(if (a, b) == (h.left, h.bottom) {
                    false
                } else if (a, b) == (h.bottom, h.right) {
                    true
                } else {
                    return Err(Error::InvariantViolated(format!(
                        "path edge {k} is not a lower edge of the face above it"
                    )));
                });
            }
            if let Some(k) = rightsided.windows(2).position(|w| !w[0] && w[1]) {
                return Err(Error::SidednessViolation(k + 1));
            }
            let length = path.len();
            let event = if rightsided[0] {
                let h = hulls[0];
                path.insert(0, h.left);
                (true, edge_of(h.left, h.bottom))
            } else {
                let h = hulls[hulls.len() - 1];
                path.push(h.right);
                (false, edge_of(h.bottom, h.right))
            };
            let after = convexity_of_slopes(&slope_angles(&rg, &path));
            if after > c + (length - 1) || !is_monotone(&rg, &path, tol) {
                return Err(Error::InvariantViolated(format!(
                    "extension to length {length} raised the convexity number from {c} to {after}"
                )));
            }
            events.push(if event.0 {
                StepEvent::ExtendedLeft {
                    edge: event.1,
                    c_before: c,
                    c_after: after,
                    length,
                }
            } else {
                StepEvent::ExtendedRight {
                    edge: event.1,
                    c_before: c,
                    c_after: after,
                    length,
                }
            });
            c = after;
            hats_per_phase.push(0);
        };

        let final_length = match &outcome {
            ExtendOutcome::FoundIrregular { path, .. } | ExtendOutcome::Exhausted { path, .. } => path.len() - 1,
        };
        Ok(ExtendPathTrace {
            alpha,
            rotation,
            steps: events.len(),
            events,
            hats_per_phase,
            final_length,
            step_bound: final_length * (final_length + 1) / 2 + final_length,
            outcome,
        })
    }
}

/// `count` edges drawn uniformly (with replacement) from the regular edges,
/// or from all edges when there are no regular ones.
pub fn sample_edges(regular: &[bool], count: usize, seed: u64) -> Vec<usize> {
    let pool: Vec<usize> = {
        let reg: Vec<usize> = (0..regular.len()).filter(|&e| regular[e]).collect();
        if reg.is_empty() {
            (0..regular.len()).collect()
        } else {
            reg
        }
    };
    if pool.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| pool[rng.gen_range(0..pool.len())]).collect()
}

/// Distinct vertices visited by the edges of a path.
pub fn path_vertices(path: &[usize]) -> BTreeSet<usize> {
    path.iter().copied().collect()
}
