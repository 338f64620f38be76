//! Planar primitives and tolerance-aware predicates.
//!
//! Every decision that compares floating point values goes through a
//! [`Tolerance`]: `unit_tol` bounds how far an edge length may deviate from 1,
//! `geom_tol` decides coincidence and collinearity.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at `angle` radians from the positive x-axis.
    pub fn polar(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Point { x: c, y: s }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3d cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Rotate counterclockwise about the origin.
    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

/// Numeric tolerance policy shared by all modules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    unit_tol: f64,
    geom_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            unit_tol: 1e-9,
            geom_tol: 1e-10,
        }
    }
}

impl Tolerance {
    /// Requires `0 <= geom_tol < unit_tol < 0.1`.
    pub fn new(unit_tol: f64, geom_tol: f64) -> Result<Self> {
        if !(unit_tol.is_finite() && geom_tol.is_finite()) {
            return Err(Error::InvalidTolerance("tolerances must be finite".into()));
        }
        if !(0.0..0.1).contains(&unit_tol) {
            return Err(Error::InvalidTolerance(format!(
                "unit_tol {unit_tol} must lie in [0, 0.1)"
            )));
        }
        if geom_tol < 0.0 || geom_tol >= unit_tol {
            return Err(Error::InvalidTolerance(format!(
                "geom_tol {geom_tol} must lie in [0, unit_tol)"
            )));
        }
        Ok(Tolerance { unit_tol, geom_tol })
    }

    /// Policy with the given unit tolerance and `geom_tol = unit_tol / 10`.
    pub fn with_unit_tol(unit_tol: f64) -> Result<Self> {
        Tolerance::new(unit_tol, unit_tol / 10.0)
    }

    pub fn unit_tol(&self) -> f64 {
        self.unit_tol
    }

    pub fn geom_tol(&self) -> f64 {
        self.geom_tol
    }

    fn sign(&self, v: f64) -> i8 {
        if v > self.geom_tol {
            1
        } else if v < -self.geom_tol {
            -1
        } else {
            0
        }
    }

    fn coincide(&self, p: Point, q: Point) -> bool {
        p.dist(q) <= self.geom_tol
    }
}

pub fn unit_distance(p: Point, q: Point, tol: &Tolerance) -> bool {
    (p.dist(q) - 1.0).abs() <= tol.unit_tol
}

/// How two closed segments relate to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentRelation {
    Disjoint,
    SharedEndpoint,
    ProperCross,
    Overlap,
    EndpointOnInterior,
}

impl SegmentRelation {
    /// Whether the pair violates the non-crossing requirement of a matchstick drawing.
    pub fn is_crossing(self) -> bool {
        matches!(
            self,
            SegmentRelation::ProperCross | SegmentRelation::Overlap | SegmentRelation::EndpointOnInterior
        )
    }
}

fn orient(a: Point, b: Point, c: Point, tol: &Tolerance) -> i8 {
    tol.sign((b - a).cross(c - a))
}

/// Strictly inside segment `a`-`b`, assuming `p` is collinear with it.
fn within_interior(a: Point, b: Point, p: Point, tol: &Tolerance) -> bool {
    let d = b - a;
    let len = d.norm();
    let t = (p - a).dot(d) / len;
    t > tol.geom_tol && t < len - tol.geom_tol
}

pub fn segment_relation(a1: Point, a2: Point, b1: Point, b2: Point, tol: &Tolerance) -> Result<SegmentRelation> {
    if tol.coincide(a1, a2) || tol.coincide(b1, b2) {
        return Err(Error::DegenerateSegment);
    }
    let shared = [(a1, b1), (a1, b2), (a2, b1), (a2, b2)]
        .iter()
        .filter(|(p, q)| tol.coincide(*p, *q))
        .count();
    if shared >= 2 {
        return Ok(SegmentRelation::Overlap);
    }

    let o1 = orient(a1, a2, b1, tol);
    let o2 = orient(a1, a2, b2, tol);
    let o3 = orient(b1, b2, a1, tol);
    let o4 = orient(b1, b2, a2, tol);

    if o1 == 0 && o2 == 0 {
        // Collinear: compare the parameter intervals along a.
        let d = a2 - a1;
        let len = d.norm();
        let s1 = (b1 - a1).dot(d) / len;
        let s2 = (b2 - a1).dot(d) / len;
        let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        let overlap = hi.min(len) - lo.max(0.0);
        return Ok(if overlap > tol.geom_tol {
            SegmentRelation::Overlap
        } else if shared == 1 {
            SegmentRelation::SharedEndpoint
        } else if overlap >= -tol.geom_tol {
            SegmentRelation::EndpointOnInterior
        } else {
            SegmentRelation::Disjoint
        });
    }

    if shared == 1 {
        return Ok(SegmentRelation::SharedEndpoint);
    }

    if o1 * o2 < 0 && o3 * o4 < 0 {
        return Ok(SegmentRelation::ProperCross);
    }
    let touches = (o1 == 0 && within_interior(a1, a2, b1, tol))
        || (o2 == 0 && within_interior(a1, a2, b2, tol))
        || (o3 == 0 && within_interior(b1, b2, a1, tol))
        || (o4 == 0 && within_interior(b1, b2, a2, tol));
    if touches {
        Ok(SegmentRelation::EndpointOnInterior)
    } else {
        Ok(SegmentRelation::Disjoint)
    }
}

/// Angle of `q - p` in `[0, 2π)`.
pub fn direction_angle(p: Point, q: Point, tol: &Tolerance) -> Result<f64> {
    if tol.coincide(p, q) {
        return Err(Error::DegenerateSegment);
    }
    let d = q - p;
    let mut a = d.y.atan2(d.x);
    if a < 0.0 {
        a += TAU;
    }
    if a >= TAU {
        a -= TAU;
    }
    Ok(a)
}

/// Smaller interior angle θ ∈ (0, π/2] of the rhombus `abcd` (vertices in
/// cyclic order).
pub fn rhombus_small_angle(a: Point, b: Point, c: Point, d: Point, tol: &Tolerance) -> Result<f64> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        let (p, q) = (pts[i], pts[(i + 1) % 4]);
        if !unit_distance(p, q, tol) {
            return Err(Error::NotARhombus(format!("side {i} has length {}", p.dist(q))));
        }
    }
    for (p, q, r, s) in [(a, b, c, d), (b, c, d, a)] {
        if segment_relation(p, q, r, s, tol)? != SegmentRelation::Disjoint {
            return Err(Error::NotARhombus("opposite sides meet".into()));
        }
    }
    if tol.coincide(a, c) || tol.coincide(b, d) {
        return Err(Error::NotARhombus("diagonal collapsed".into()));
    }
    let u = b - a;
    let v = d - a;
    let theta = u.cross(v).abs().atan2(u.dot(v));
    if theta <= tol.geom_tol {
        return Err(Error::NotARhombus("zero angle".into()));
    }
    Ok(theta.min(PI - theta))
}
