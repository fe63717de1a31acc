//! Plane primitives and the tolerance policy shared by every module.
//!
//! A single [`Tolerance`] is installed process-wide and read by every
//! comparison; callers never pass epsilons per call.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Absolute (length units) and relative (dimensionless) epsilons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub absolute_eps: f64,
    pub relative_eps: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        absolute_eps: 1e-9,
        relative_eps: 1e-9,
    };

    pub fn new(absolute_eps: f64, relative_eps: f64) -> Result<Self> {
        if !(absolute_eps > 0.0 && absolute_eps.is_finite()) {
            return Err(GeomError::InvalidArgument(format!(
                "absolute_eps must be positive and finite, got {absolute_eps}"
            )));
        }
        if !(relative_eps > 0.0 && relative_eps.is_finite()) {
            return Err(GeomError::InvalidArgument(format!(
                "relative_eps must be positive and finite, got {relative_eps}"
            )));
        }
        Ok(Self {
            absolute_eps,
            relative_eps,
        })
    }

    /// The tolerance currently installed for this process.
    pub fn current() -> Tolerance {
        *GLOBAL_TOLERANCE.read().unwrap_or_else(|e| e.into_inner())
    }

    /// Replaces the process-wide tolerance. Intended to be called once at
    /// startup from configuration.
    pub fn install(self) {
        *GLOBAL_TOLERANCE.write().unwrap_or_else(|e| e.into_inner()) = self;
    }

    /// `max(absolute_eps, relative_eps * scale)`.
    pub fn margin(&self, scale: f64) -> f64 {
        self.absolute_eps.max(self.relative_eps * scale.abs())
    }

    /// Scalar comparison with scale = the larger operand magnitude.
    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.margin(a.abs().max(b.abs()))
    }

    pub fn is_zero(&self, a: f64, scale: f64) -> bool {
        a.abs() <= self.margin(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

static GLOBAL_TOLERANCE: RwLock<Tolerance> = RwLock::new(Tolerance::DEFAULT);

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(radius * c, radius * s)
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Rotation by +90 degrees.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn midpoint(self, other: Point) -> Point {
        (self + other) * 0.5
    }

    /// `(1 - t) * self + t * other`
    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Coordinate-wise closeness under the current tolerance.
    pub fn approx_eq(self, other: Point) -> bool {
        let tol = Tolerance::current();
        let scale = self.norm().max(other.norm());
        distance(self, other) <= tol.margin(scale)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    fn div(self, rhs: f64) -> Point {
        Point::new(self.x / rhs, self.y / rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

pub fn distance(p: Point, q: Point) -> f64 {
    (p - q).norm()
}

/// An infinite line through `point` with unit `direction`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    point: Point,
    direction: Point,
}

impl Line {
    pub fn new(point: Point, direction: Point) -> Result<Self> {
        let n = direction.norm();
        if !(n > 0.0) || !n.is_finite() || !point.is_finite() {
            return Err(GeomError::InvalidArgument(
                "line direction must be a finite non-zero vector".into(),
            ));
        }
        Ok(Self {
            point,
            direction: direction / n,
        })
    }

    pub fn through(p: Point, q: Point) -> Result<Self> {
        Self::new(p, q - p)
    }

    pub fn point(&self) -> Point {
        self.point
    }

    pub fn direction(&self) -> Point {
        self.direction
    }

    pub fn at(&self, t: f64) -> Point {
        self.point + self.direction * t
    }

    pub fn project(&self, p: Point) -> Point {
        self.at((p - self.point).dot(self.direction))
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        (p - self.point).cross(self.direction).abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() || !center.is_finite() {
            return Err(GeomError::InvalidArgument(format!(
                "circle radius must be positive and finite, got {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    /// Signed power-like residual `|p - c| - r`.
    pub fn offset(&self, p: Point) -> f64 {
        distance(self.center, p) - self.radius
    }
}

pub fn line_intersection(l1: &Line, l2: &Line) -> Result<Point> {
    let tol = Tolerance::current();
    let denom = l1.direction.cross(l2.direction);
    if denom.abs() <= tol.relative_eps {
        return Err(GeomError::Parallel);
    }
    let t = (l2.point - l1.point).cross(l2.direction) / denom;
    Ok(l1.at(t))
}

fn sort_by_y_desc(points: &mut [Point]) {
    points.sort_by(|p, q| {
        q.y.partial_cmp(&p.y)
            .unwrap_or(Ordering::Equal)
            .then(q.x.partial_cmp(&p.x).unwrap_or(Ordering::Equal))
    });
}

/// Points along the chord `foot ± h * dir` given the squared half-length.
fn chord_points(foot: Point, dir: Point, half_sq: f64) -> Vec<Point> {
    let tol = Tolerance::current();
    if half_sq.abs() <= tol.absolute_eps {
        return vec![foot];
    }
    if half_sq < 0.0 {
        return Vec::new();
    }
    let h = half_sq.sqrt();
    let mut pts = vec![foot + dir * h, foot - dir * h];
    sort_by_y_desc(&mut pts);
    pts
}

/// Intersections sorted by y descending (x descending on ties). Concentric
/// circles yield no points.
pub fn circle_circle_intersection(c1: &Circle, c2: &Circle) -> Vec<Point> {
    let delta = c2.center - c1.center;
    let d = delta.norm();
    if d == 0.0 {
        return Vec::new();
    }
    let axis = delta / d;
    let along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    let half_sq = c1.radius * c1.radius - along * along;
    chord_points(c1.center + axis * along, axis.perp(), half_sq)
}

/// Intersections sorted by y descending (x descending on ties).
pub fn circle_line_intersection(c: &Circle, l: &Line) -> Vec<Point> {
    let foot = l.project(c.center);
    let dist_sq = (c.center - foot).norm_sq();
    chord_points(foot, l.direction, c.radius * c.radius - dist_sq)
}
