//! Closed-form constructions: integer grid, rhombic zonotope tilings, the
//! triangle-free family built around a zonotope, the flattened lattice in a
//! disk, and single rhombus strips used as fixtures.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Point, Tolerance};
use crate::graph::{DiskSpec, Edge, MatchstickGraph};

/// `k x k` piece of the integer lattice with all unit lattice edges.
pub fn gen_grid(k: usize) -> Result<MatchstickGraph> {
    if k == 0 {
        return Err(Error::InvalidParameter("grid side must be >= 1".into()));
    }
    let idx = |row: usize, col: usize| row * k + col;
    let mut vertices = Vec::with_capacity(k * k);
    let mut edges = Vec::with_capacity(2 * k * (k - 1));
    for row in 0..k {
        for col in 0..k {
            vertices.push(Point::new(col as f64, row as f64));
            if col + 1 < k {
                edges.push((idx(row, col), idx(row, col + 1)));
            }
            if row + 1 < k {
                edges.push((idx(row, col), idx(row + 1, col)));
            }
        }
    }
    MatchstickGraph::new(vertices, edges, None)
}

/// Unit directions `v_j` at angle `jπ/k`, `j = 0..k`.
pub fn zonotope_directions(k: usize) -> Vec<Point> {
    (0..k).map(|j| Point::polar(j as f64 * PI / k as f64)).collect()
}

/// Rhombic tiling of the zonogon spanned by `dirs` (angles increasing in
/// `[0, π)`), as an un-centered vertex/edge list.
///
/// Vertices are the sums over contiguous index intervals `[a, b)` (plus the
/// empty interval at the origin); edges join intervals that differ in one end
/// element. Returns the vertices keyed by `(a, b)`.
fn interval_tiling(dirs: &[Point]) -> (Vec<Point>, Vec<Edge>, BTreeMap<(usize, usize), usize>) {
    let k = dirs.len();
    let mut key = BTreeMap::new();
    let mut vertices = vec![Point::ORIGIN];
    key.insert((0, 0), 0);
    for a in 0..k {
        let mut sum = Point::ORIGIN;
        for b in a + 1..=k {
            sum = sum + dirs[b - 1];
            key.insert((a, b), vertices.len());
            vertices.push(sum);
        }
    }
    let id = |a: usize, b: usize| -> usize {
        if a == b {
            0
        } else {
            key[&(a, b)]
        }
    };
    let mut edges = Vec::with_capacity(k * k);
    for a in 0..k {
        for b in a + 1..=k {
            let here = id(a, b);
            if b - a == 1 {
                edges.push((0, here));
            } else {
                edges.push((id(a + 1, b), here));
                edges.push((id(a, b - 1), here));
            }
        }
    }
    (vertices, edges, key)
}

/// Rhombic tiling of the regular `2k`-gon with unit sides: `C(k+1,2)+1`
/// vertices, `k²` edges and `C(k,2)` rhombi, centered at the origin.
pub fn gen_zonotope(k: usize) -> Result<MatchstickGraph> {
    if k < 2 {
        return Err(Error::InvalidParameter("zonotope needs k >= 2".into()));
    }
    let dirs = zonotope_directions(k);
    let (vertices, edges, _) = interval_tiling(&dirs);
    let center = dirs.iter().fold(Point::ORIGIN, |acc, &p| acc + p) * 0.5;
    let vertices = vertices.into_iter().map(|p| p - center).collect();
    MatchstickGraph::new(vertices, edges, None)
}

/// Closed-form edge count `⌊2n − √(2n − 7/4) − 3/2⌋`, evaluated in integers.
pub fn triangle_free_target(n: usize) -> usize {
    assert!(n >= 1);
    let n = n as u64;
    let d = 8 * n - 7;
    let s = d.isqrt();
    let t = 4 * n - 3 - s;
    let e = if s * s == d { t / 2 } else { (t - 1) / 2 };
    e as usize
}

/// Largest `k` with `C(k+1,2) + 1 <= n`, and that base size.
pub fn zonotope_base(n: usize) -> (usize, usize) {
    let mut k = 0;
    while (k + 1) * (k + 2) / 2 < n {
        k += 1;
    }
    (k, k * (k + 1) / 2 + 1)
}

/// Output of [`triangle_free_construction`]: the graph plus which vertices and
/// edges were added around the zonotope base.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleFreeConstruction {
    pub graph: MatchstickGraph,
    pub base_k: usize,
    pub added_vertices: Vec<usize>,
    pub added_edges: Vec<usize>,
    /// Direction of the added edges that leave the base.
    pub augmentation_direction: Option<Point>,
}

/// Triangle-free graph on `n` vertices with `⌊2n − √(2n − 7/4) − 3/2⌋` edges.
pub fn gen_triangle_free(n: usize) -> Result<MatchstickGraph> {
    Ok(triangle_free_construction(n)?.graph)
}

pub fn triangle_free_construction(n: usize) -> Result<TriangleFreeConstruction> {
    triangle_free_variant(n, 0.5, false)
}

/// Augmented zonotope with the new direction placed at fraction `w_frac` of the
/// gap between `v_{k-1}` and `-v_0`; `mirror` reflects the result in the y-axis.
pub(crate) fn triangle_free_variant(n: usize, w_frac: f64, mirror: bool) -> Result<TriangleFreeConstruction> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    if !(w_frac > 0.0 && w_frac < 1.0) {
        return Err(Error::InvalidParameter("w_frac must lie in (0, 1)".into()));
    }
    let (k, n0) = zonotope_base(n);
    let extra = n - n0;
    let dirs = zonotope_directions(k.max(1));
    let dirs = if k == 0 { vec![] } else { dirs };

    let (mut vertices, mut edges, key) = interval_tiling(&dirs);
    let center = if k >= 2 {
        dirs.iter().fold(Point::ORIGIN, |acc, &p| acc + p) * 0.5
    } else {
        Point::ORIGIN
    };

    let mut added_vertices = Vec::new();
    let mut added_pairs = Vec::new();
    let mut augmentation_direction = None;
    if extra > 0 {
        // New direction strictly between v_{k-1} (angle π − π/k) and −v_0 (angle π).
        let angle = if k == 0 {
            0.0
        } else {
            PI - (1.0 - w_frac) * PI / k as f64
        };
        let w = Point::polar(angle);
        augmentation_direction = Some(w);
        // Upper chain: suffix sums over [a, k), starting at the origin (a = k).
        let mut prev_new: Option<usize> = None;
        for step in 0..extra {
            let a = k - step;
            let base = if a == k { 0 } else { key[&(a, k)] };
            let v = vertices.len();
            vertices.push(vertices[base] + w);
            added_vertices.push(v);
            added_pairs.push((base, v));
            if let Some(p) = prev_new {
                added_pairs.push((p, v));
            }
            prev_new = Some(v);
        }
        edges.extend(added_pairs.iter().copied());
    }

    let vertices: Vec<Point> = vertices
        .into_iter()
        .map(|p| {
            let q = p - center;
            if mirror {
                Point::new(-q.x, q.y)
            } else {
                q
            }
        })
        .collect();
    let graph = MatchstickGraph::new(vertices, edges, None)?;
    let mut added_edges: Vec<usize> = added_pairs
        .iter()
        .map(|&(u, v)| graph.edge_id(u, v).expect("added edge present"))
        .collect();
    added_edges.sort_unstable();
    Ok(TriangleFreeConstruction {
        graph,
        base_k: k,
        added_vertices,
        added_edges,
        augmentation_direction: augmentation_direction.map(|w| if mirror { Point::new(-w.x, w.y) } else { w }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeLayout {
    /// `{ s·a + t·b : |s+t| <= p, |s−t| <= m }`
    Lattice,
    /// Fallback for tiny `n`: points `s·a` with `|s| <= p`.
    Strip,
}

/// Parameters of the flattened lattice in a disk.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiskLatticeParams {
    pub r: f64,
    pub n: usize,
    pub p: usize,
    /// Strip half-width actually used (largest with `|P| <= n`).
    pub m: usize,
    /// `⌊n / 2p⌋`, the half-width from the original recipe, kept for comparison.
    pub m_recipe: usize,
    pub eps: f64,
    pub delta: f64,
    pub a: Point,
    pub b: Point,
    pub layout: LatticeLayout,
    pub lattice_points: usize,
    pub padding: usize,
}

/// Lattice coordinates `(u, w) = (s + t, s − t)` of the box `|u| <= p`, `|w| <= m`.
fn lattice_coords(p: i64, m: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for u in -p..=p {
        for w in -m..=m {
            if (u - w).rem_euclid(2) == 0 {
                out.push((u, w));
            }
        }
    }
    out
}

/// Matchstick graph on exactly `n` vertices inside the disk of radius `r`
/// centered at the origin, built from the lattice spanned by
/// `a = (δ, ε)` and `b = (δ, −ε)`.
pub fn gen_disk_lattice(r: f64, n: usize) -> Result<(MatchstickGraph, DiskLatticeParams)> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::NonpositiveRadius(r));
    }
    if r.floor() < 2.0 {
        return Err(Error::InfeasibleRadius(r));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let p = r.floor() as i64 - 1;
    let mut m: i64 = 0;
    while lattice_coords(p, m + 1).len() <= n {
        m += 1;
    }

    let lattice = build_lattice(r, p, m);
    let candidate = if m == 0 {
        let strip = build_strip(r, p, n);
        if strip.1.len() > lattice.1.len() {
            strip
        } else {
            lattice
        }
    } else {
        lattice
    };
    let (mut vertices, edges, layout, eps) = candidate;
    let lattice_points = vertices.len();
    if lattice_points > n {
        return Err(Error::InvariantViolated("lattice exceeds vertex budget".into()));
    }
    let padding = n - lattice_points;
    place_padding(&mut vertices, padding, r)?;

    let delta = (1.0 - eps * eps).sqrt();
    let disk = DiskSpec::centered(r)?;
    let g = MatchstickGraph::new(vertices, edges, Some(disk))?;
    let params = DiskLatticeParams {
        r,
        n,
        p: p as usize,
        m: m as usize,
        m_recipe: n / (2 * p as usize),
        eps,
        delta,
        a: Point::new(delta, eps),
        b: Point::new(delta, -eps),
        layout,
        lattice_points,
        padding,
    };
    Ok((g, params))
}

type Layout = (Vec<Point>, Vec<Edge>, LatticeLayout, f64);

fn build_lattice(r: f64, p: i64, m: i64) -> Layout {
    let mm = m.max(1) as f64;
    let eps = (1.0 / (4.0 * mm)).min((r * r - (p * p) as f64).max(0.0).sqrt() / (2.0 * mm));
    let delta = (1.0 - eps * eps).sqrt();
    let coords = lattice_coords(p, m);
    let index: BTreeMap<(i64, i64), usize> = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let vertices = coords
        .iter()
        .map(|&(u, w)| Point::new(u as f64 * delta, w as f64 * eps))
        .collect();
    let mut edges = Vec::new();
    for (i, &(u, w)) in coords.iter().enumerate() {
        // a-step: (u+1, w+1); b-step: (u+1, w-1).
        for dw in [1, -1] {
            if let Some(&j) = index.get(&(u + 1, w + dw)) {
                edges.push((i, j));
            }
        }
    }
    (vertices, edges, LatticeLayout::Lattice, eps)
}

fn build_strip(_r: f64, p: i64, n: usize) -> Layout {
    let eps = 1.0 / (4.0 * (p + 1) as f64);
    let delta = (1.0 - eps * eps).sqrt();
    let a = Point::new(delta, eps);
    // s = 0, 1, -1, 2, -2, ... keeps the kept points contiguous.
    let mut ss: Vec<i64> = vec![0];
    for s in 1..=p {
        ss.push(s);
        ss.push(-s);
    }
    ss.truncate(n);
    ss.sort_unstable();
    let vertices = ss.iter().map(|&s| a * s as f64).collect();
    let edges = (1..ss.len()).map(|i| (i - 1, i)).collect();
    (vertices, edges, LatticeLayout::Strip, eps)
}

/// Greedily adds `count` points inside the disk whose distance `d` to every
/// existing point satisfies `d >= 0.1` and `|d − 1| >= 0.1`.
fn place_padding(vertices: &mut Vec<Point>, count: usize, r: f64) -> Result<()> {
    if count == 0 {
        return Ok(());
    }
    const STEP: f64 = 0.1;
    const GAP: f64 = 0.1;
    let limit = r - 1e-6;
    let steps = (limit / STEP).floor() as i64;
    let mut placed = 0;
    'rows: for iy in (-steps..=steps).rev() {
        for ix in -steps..=steps {
            let c = Point::new(ix as f64 * STEP, iy as f64 * STEP);
            if c.norm() > limit {
                continue;
            }
            let ok = vertices.iter().all(|&q| {
                let d = q.dist(c);
                d >= GAP && (d - 1.0).abs() >= GAP
            });
            if ok {
                vertices.push(c);
                placed += 1;
                if placed == count {
                    break 'rows;
                }
            }
        }
    }
    if placed < count {
        return Err(Error::PaddingFailed(count - placed));
    }
    Ok(())
}

/// A single chain of `count` congruent rhombi with small angle `theta`; the
/// chain advances along the direction at angle `tilt`.
pub fn gen_rhombus_strip(count: usize, theta: f64, tilt: f64) -> Result<MatchstickGraph> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be >= 1".into()));
    }
    if !(theta > 0.0 && theta <= PI / 2.0) {
        return Err(Error::InvalidParameter(format!("theta {theta} must lie in (0, π/2]")));
    }
    let u = Point::polar(tilt);
    let v = Point::polar(tilt + theta);
    let mut vertices = Vec::with_capacity(2 * (count + 1));
    for i in 0..=count {
        let a = u * i as f64;
        vertices.push(a);
        vertices.push(a + v);
    }
    // a_i = 2i, b_i = 2i + 1
    let mut edges = Vec::with_capacity(3 * count + 1);
    for i in 0..=count {
        edges.push((2 * i, 2 * i + 1));
        if i < count {
            edges.push((2 * i, 2 * i + 2));
            edges.push((2 * i + 1, 2 * i + 3));
        }
    }
    MatchstickGraph::new(vertices, edges, None)
}

/// Check used by tests and the CLI: the tolerance the constructions are built for.
pub fn construction_tolerance() -> Tolerance {
    Tolerance::default()
}
