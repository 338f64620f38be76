//! Graphs shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use matchstick::generators::{gen_disk_lattice, gen_grid, gen_rhombus_strip, gen_triangle_free, gen_zonotope};
use matchstick::{DiskSpec, MatchstickGraph, Point};

pub struct Item {
    pub name: String,
    pub graph: MatchstickGraph,
    /// Radius of a disk (around the graph's disk center) containing it.
    pub disk_r: Option<f64>,
}

fn item(name: String, graph: MatchstickGraph, disk_r: Option<f64>) -> Item {
    Item { name, graph, disk_r }
}

pub const STRIPS: [(usize, f64, f64); 5] = [
    (1, PI / 2.0, 0.0),
    (3, 0.05, 0.0),
    (4, 0.05, 0.02),
    (5, 0.3, 0.7),
    (12, 0.01, 0.2),
];

/// Radii and sizes of the disk lattices in the corpus.
pub fn lattice_params() -> Vec<(f64, usize)> {
    let mut out = Vec::new();
    for r in [2.0, 2.5, 3.0, 4.0] {
        for n in [3, 40, 150, 400, 1000, 2000] {
            out.push((r, n));
        }
    }
    out
}

pub fn triangle_free_corpus() -> Vec<Item> {
    let mut out = Vec::new();
    for k in 1..=20 {
        out.push(item(format!("grid({k})"), gen_grid(k).unwrap(), None));
    }
    for k in 2..=20 {
        out.push(item(format!("zonotope({k})"), gen_zonotope(k).unwrap(), None));
    }
    for n in 1..=500 {
        out.push(item(format!("triangle_free({n})"), gen_triangle_free(n).unwrap(), None));
    }
    for (c, t, tilt) in STRIPS {
        out.push(item(
            format!("strip({c}, {t}, {tilt})"),
            gen_rhombus_strip(c, t, tilt).unwrap(),
            None,
        ));
    }
    for (r, n) in lattice_params() {
        out.push(item(
            format!("disk_lattice({r}, {n})"),
            gen_disk_lattice(r, n).unwrap().0,
            Some(r),
        ));
    }
    out
}

/// Piece of the triangular lattice inside the disk of radius `r` at the origin.
pub fn triangular_disk(r: f64) -> MatchstickGraph {
    let h = 3f64.sqrt() / 2.0;
    let span = r.ceil() as i64 + 2;
    let mut pts = Vec::new();
    for j in -span..=span {
        for i in -2 * span..=2 * span {
            let p = Point::new(i as f64 + j as f64 / 2.0, j as f64 * h);
            if p.norm() <= r - 1e-9 {
                pts.push(p);
            }
        }
    }
    unit_pairs(pts, r)
}

/// Piece of the square lattice inside the disk of radius `r` at the origin.
pub fn square_disk(r: f64) -> MatchstickGraph {
    let span = r.ceil() as i64;
    let mut pts = Vec::new();
    for j in -span..=span {
        for i in -span..=span {
            let p = Point::new(i as f64, j as f64);
            if p.norm() <= r - 1e-9 {
                pts.push(p);
            }
        }
    }
    unit_pairs(pts, r)
}

fn unit_pairs(pts: Vec<Point>, r: f64) -> MatchstickGraph {
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if (pts[i].dist(pts[j]) - 1.0).abs() < 1e-9 {
                edges.push((i, j));
            }
        }
    }
    MatchstickGraph::new(pts, edges, Some(DiskSpec::centered(r).unwrap())).unwrap()
}

/// Disk-contained graphs: the disk lattices plus lattice pieces with
/// triangles and fat rhombi.
pub fn disk_corpus() -> Vec<Item> {
    let mut out: Vec<Item> = lattice_params()
        .into_iter()
        .map(|(r, n)| {
            item(
                format!("disk_lattice({r}, {n})"),
                gen_disk_lattice(r, n).unwrap().0,
                Some(r),
            )
        })
        .collect();
    for r in [2.0, 3.0, 4.5] {
        out.push(item(format!("triangular_disk({r})"), triangular_disk(r), Some(r)));
        out.push(item(format!("square_disk({r})"), square_disk(r), Some(r)));
    }
    out
}
