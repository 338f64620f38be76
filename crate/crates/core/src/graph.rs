//! The embedded graph type, its constraint checks, and the JSON graph file.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{segment_relation, unit_distance, Point, Tolerance};

/// Disk that a graph is required to fit in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskSpec {
    pub center: Point,
    pub radius: f64,
}

impl DiskSpec {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::NonpositiveRadius(radius));
        }
        Ok(DiskSpec { center, radius })
    }

    pub fn centered(radius: f64) -> Result<Self> {
        DiskSpec::new(Point::ORIGIN, radius)
    }
}

pub type Edge = (usize, usize);

/// A straight-line drawing: vertex coordinates plus an edge list.
///
/// Edges are stored with `i < j` (self-loops excepted) and sorted
/// lexicographically; an edge id is its position in that list. Geometric
/// constraints are not enforced on construction, use [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct MatchstickGraph {
    vertices: Vec<Point>,
    edges: Vec<Edge>,
    disk: Option<DiskSpec>,
}

impl MatchstickGraph {
    pub fn new(vertices: Vec<Point>, edges: Vec<Edge>, disk: Option<DiskSpec>) -> Result<Self> {
        let n = vertices.len();
        if let Some(i) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFiniteCoordinate(i));
        }
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|(i, j)| {
                for index in [i, j] {
                    if index >= n {
                        return Err(Error::IndexOutOfRange { index, len: n });
                    }
                }
                Ok((i.min(j), i.max(j)))
            })
            .collect::<Result<_>>()?;
        edges.sort_unstable();
        Ok(MatchstickGraph { vertices, edges, disk })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn disk(&self) -> Option<&DiskSpec> {
        self.disk.as_ref()
    }

    pub fn with_disk(mut self, disk: Option<DiskSpec>) -> Self {
        self.disk = disk;
        self
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn point(&self, v: usize) -> Point {
        self.vertices[v]
    }

    /// Id of the edge joining `u` and `v`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            if i != j {
                adj[j].push(i);
            }
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `keep` (vertex order preserved); the disk is kept.
    pub fn induced(&self, keep: &[usize]) -> MatchstickGraph {
        let mut remap = vec![usize::MAX; self.n()];
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (new, &old) in sorted.iter().enumerate() {
            remap[old] = new;
        }
        let vertices = sorted.iter().map(|&v| self.vertices[v]).collect();
        let edges = self
            .edges
            .iter()
            .filter(|(i, j)| remap[*i] != usize::MAX && remap[*j] != usize::MAX)
            .map(|&(i, j)| (remap[i], remap[j]))
            .collect();
        MatchstickGraph::new(vertices, edges, self.disk).expect("remapped indices are in range")
    }

    /// The graph with degree-0 vertices removed, and how many were dropped.
    pub fn without_isolated(&self) -> (MatchstickGraph, usize) {
        let mut deg = vec![0usize; self.n()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| deg[v] > 0).collect();
        if keep.len() == self.n() || keep.is_empty() {
            return (self.clone(), 0);
        }
        let dropped = self.n() - keep.len();
        (self.induced(&keep), dropped)
    }
}

/// Exact degree histogram plus connectivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub histogram: BTreeMap<usize, usize>,
    pub connected: bool,
}

pub fn degree_profile(g: &MatchstickGraph) -> DegreeProfile {
    let mut deg = vec![0usize; g.n()];
    for &(i, j) in g.edges() {
        deg[i] += 1;
        deg[j] += 1;
    }
    let mut histogram = BTreeMap::new();
    for d in deg {
        *histogram.entry(d).or_insert(0) += 1;
    }
    DegreeProfile {
        histogram,
        connected: g.is_connected(),
    }
}

/// Same vertex set with the given edge ids removed.
pub fn remove_edges(g: &MatchstickGraph, which: &BTreeSet<usize>) -> Result<MatchstickGraph> {
    if let Some(&bad) = which.iter().find(|&&id| id >= g.e()) {
        return Err(Error::UnknownEdge(bad));
    }
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(id, _)| !which.contains(id))
        .map(|(_, &e)| e)
        .collect();
    Ok(MatchstickGraph {
        vertices: g.vertices.clone(),
        edges,
        disk: g.disk,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    UnitLengths,
    Noncrossing,
    Simple,
    Connected,
    TriangleFree,
    DiskContained,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::UnitLengths,
        Check::Noncrossing,
        Check::Simple,
        Check::Connected,
        Check::TriangleFree,
        Check::DiskContained,
    ];

    /// The checks every matchstick graph must pass.
    pub fn basic() -> BTreeSet<Check> {
        [Check::UnitLengths, Check::Noncrossing, Check::Simple]
            .into_iter()
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub check: Check,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub edges: Vec<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub flags: BTreeMap<Check, CheckStatus>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn status(&self, c: Check) -> CheckStatus {
        self.flags.get(&c).copied().unwrap_or(CheckStatus::Skipped)
    }

    pub fn passed(&self, c: Check) -> bool {
        self.status(c) == CheckStatus::Pass
    }

    /// No requested check failed.
    pub fn ok(&self) -> bool {
        !self.flags.values().any(|s| *s == CheckStatus::Fail)
    }
}

/// Runs the requested checks; problems are reported, never raised.
pub fn validate(g: &MatchstickGraph, tol: &Tolerance, checks: &BTreeSet<Check>) -> ValidationReport {
    let mut flags = BTreeMap::new();
    let mut violations = Vec::new();
    for c in Check::ALL {
        if !checks.contains(&c) {
            flags.insert(c, CheckStatus::Skipped);
            continue;
        }
        let found = match c {
            Check::UnitLengths => check_unit_lengths(g, tol),
            Check::Noncrossing => check_noncrossing(g, tol),
            Check::Simple => check_simple(g, tol),
            Check::Connected => check_connected(g),
            Check::TriangleFree => check_triangle_free(g),
            Check::DiskContained => check_disk(g, tol),
        };
        flags.insert(
            c,
            if found.is_empty() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        );
        violations.extend(found);
    }
    ValidationReport { flags, violations }
}

/// Validate and turn any failure into an error.
pub fn ensure_valid(g: &MatchstickGraph, tol: &Tolerance, checks: &BTreeSet<Check>) -> Result<()> {
    let report = validate(g, tol, checks);
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::ValidationFailed(format!(
            "{:?}: {} ({} violation(s))",
            v.check,
            v.reason,
            report.violations.len()
        ))),
    }
}

fn check_unit_lengths(g: &MatchstickGraph, tol: &Tolerance) -> Vec<Violation> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| i != j && !unit_distance(g.point(i), g.point(j), tol))
        .map(|(id, &(i, j))| Violation {
            check: Check::UnitLengths,
            vertices: vec![],
            edges: vec![id],
            reason: format!("length {:.17}", g.point(i).dist(g.point(j))),
        })
        .collect()
}

fn check_noncrossing(g: &MatchstickGraph, tol: &Tolerance) -> Vec<Violation> {
    // Sweep over edges sorted by the left end of their bounding box.
    let slack = tol.geom_tol();
    let boxes: Vec<(f64, f64, f64, f64)> = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let (p, q) = (g.point(i), g.point(j));
            (p.x.min(q.x), p.x.max(q.x), p.y.min(q.y), p.y.max(q.y))
        })
        .collect();
    let mut order: Vec<usize> = (0..g.e()).filter(|&id| g.edges()[id].0 != g.edges()[id].1).collect();
    order.sort_by(|&a, &b| boxes[a].0.total_cmp(&boxes[b].0).then(a.cmp(&b)));
    let mut out = Vec::new();
    for (k, &a) in order.iter().enumerate() {
        let (_, ax1, ay0, ay1) = boxes[a];
        for &b in &order[k + 1..] {
            let (bx0, _, by0, by1) = boxes[b];
            if bx0 > ax1 + slack {
                break;
            }
            if by0 > ay1 + slack || ay0 > by1 + slack {
                continue;
            }
            let (a1, a2) = g.edges()[a];
            let (b1, b2) = g.edges()[b];
            let rel = segment_relation(g.point(a1), g.point(a2), g.point(b1), g.point(b2), tol);
            match rel {
                Ok(r) if !r.is_crossing() => {}
                Ok(r) => out.push(Violation {
                    check: Check::Noncrossing,
                    vertices: vec![],
                    edges: vec![a.min(b), a.max(b)],
                    reason: format!("{r:?}"),
                }),
                Err(e) => out.push(Violation {
                    check: Check::Noncrossing,
                    vertices: vec![],
                    edges: vec![a.min(b), a.max(b)],
                    reason: e.to_string(),
                }),
            }
        }
    }
    out.sort_by(|x, y| x.edges.cmp(&y.edges));
    out
}

fn check_simple(g: &MatchstickGraph, tol: &Tolerance) -> Vec<Violation> {
    let mut out = Vec::new();
    for (id, &(i, j)) in g.edges().iter().enumerate() {
        if i == j {
            out.push(Violation {
                check: Check::Simple,
                vertices: vec![i],
                edges: vec![id],
                reason: "self-loop".into(),
            });
        }
        if id > 0 && g.edges()[id - 1] == (i, j) {
            out.push(Violation {
                check: Check::Simple,
                vertices: vec![i, j],
                edges: vec![id - 1, id],
                reason: "duplicate edge".into(),
            });
        }
    }
    // Coincident vertices: sort by x and compare within a geom_tol window.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.point(a).x.total_cmp(&g.point(b).x));
    for (k, &a) in order.iter().enumerate() {
        for &b in &order[k + 1..] {
            if g.point(b).x - g.point(a).x > tol.geom_tol() {
                break;
            }
            if g.point(a).dist(g.point(b)) <= tol.geom_tol() {
                out.push(Violation {
                    check: Check::Simple,
                    vertices: vec![a.min(b), a.max(b)],
                    edges: vec![],
                    reason: "coincident vertices".into(),
                });
            }
        }
    }
    out
}

fn check_connected(g: &MatchstickGraph) -> Vec<Violation> {
    let comps = g.components();
    if comps.len() <= 1 {
        return vec![];
    }
    vec![Violation {
        check: Check::Connected,
        vertices: comps.iter().skip(1).map(|c| c[0]).collect(),
        edges: vec![],
        reason: format!("{} components", comps.len()),
    }]
}

fn check_triangle_free(g: &MatchstickGraph) -> Vec<Violation> {
    let adj: Vec<BTreeSet<usize>> = g.adjacency().into_iter().map(|a| a.into_iter().collect()).collect();
    let mut out = Vec::new();
    for &(i, j) in g.edges() {
        if i == j {
            continue;
        }
        for &k in adj[i].intersection(&adj[j]) {
            if k > j {
                let ids = [(i, j), (i, k), (j, k)]
                    .iter()
                    .filter_map(|&(a, b)| g.edge_id(a, b))
                    .collect();
                out.push(Violation {
                    check: Check::TriangleFree,
                    vertices: vec![i, j, k],
                    edges: ids,
                    reason: "3-cycle".into(),
                });
            }
        }
    }
    out
}

fn check_disk(g: &MatchstickGraph, tol: &Tolerance) -> Vec<Violation> {
    let Some(disk) = g.disk() else {
        return vec![Violation {
            check: Check::DiskContained,
            vertices: vec![],
            edges: vec![],
            reason: "no disk specified".into(),
        }];
    };
    g.vertices()
        .iter()
        .enumerate()
        .filter(|(_, p)| p.dist(disk.center) > disk.radius + tol.geom_tol())
        .map(|(v, p)| Violation {
            check: Check::DiskContained,
            vertices: vec![v],
            edges: vec![],
            reason: format!("distance {} exceeds radius {}", p.dist(disk.center), disk.radius),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Graph file

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiskFile {
    #[serde(default)]
    center: Option<[f64; 2]>,
    radius: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    version: u32,
    disk: Option<DiskFile>,
    vertices: Vec<[f64; 2]>,
    edges: Vec<[usize; 2]>,
}

fn push_f64(out: &mut String, x: f64) {
    // 17 significant digits round-trip every finite double.
    write!(out, "{x:.16e}").unwrap();
}

/// Serialize to the version-1 graph file format (single line, trailing newline).
pub fn to_json(g: &MatchstickGraph) -> String {
    let mut s = String::with_capacity(48 * g.n() + 16 * g.e() + 64);
    s.push_str("{\"version\":1,\"disk\":");
    match g.disk() {
        None => s.push_str("null"),
        Some(d) => {
            s.push_str("{\"center\":[");
            push_f64(&mut s, d.center.x);
            s.push(',');
            push_f64(&mut s, d.center.y);
            s.push_str("],\"radius\":");
            push_f64(&mut s, d.radius);
            s.push('}');
        }
    }
    s.push_str(",\"vertices\":[");
    for (k, p) in g.vertices().iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push('[');
        push_f64(&mut s, p.x);
        s.push(',');
        push_f64(&mut s, p.y);
        s.push(']');
    }
    s.push_str("],\"edges\":[");
    for (k, (i, j)) in g.edges().iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        write!(s, "[{i},{j}]").unwrap();
    }
    s.push_str("]}\n");
    s
}

pub fn from_json(text: &str) -> Result<MatchstickGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if file.version != 1 {
        return Err(Error::Format(format!("unsupported version {}", file.version)));
    }
    if let Some(bad) = file.edges.iter().find(|[i, j]| i >= j) {
        return Err(Error::Format(format!(
            "edge [{}, {}] must satisfy i < j",
            bad[0], bad[1]
        )));
    }
    let disk = file
        .disk
        .map(|d| {
            let c = d.center.unwrap_or([0.0, 0.0]);
            DiskSpec::new(Point::new(c[0], c[1]), d.radius)
        })
        .transpose()?;
    MatchstickGraph::new(
        file.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect(),
        file.edges.iter().map(|&[i, j]| (i, j)).collect(),
        disk,
    )
}

pub fn save(g: &MatchstickGraph, path: &std::path::Path) -> std::io::Result<()> {
    std::fs::write(path, to_json(g))
}

pub fn load(path: &std::path::Path) -> Result<MatchstickGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format(e.to_string()))?;
    from_json(&text)
}
