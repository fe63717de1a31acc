//! Triangles with a prescribed Euler line.
//!
//! The frame is normalized so that the circumcenter sits at the origin and
//! the orthocenter at `(3, 0)`; the centroid is then `(1, 0)`, the
//! nine-point center `(1.5, 0)`, and the orthocentroidal circle has center
//! `(2, 0)` and radius 1. A triangle is picked by its circumradius `R` and
//! the polar angle of vertex A on the circumcircle.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{circle_circle_intersection, circle_line_intersection, distance, Circle, Line, Point, Tolerance};
use crate::triangle::Triangle;

pub const FRAME_CIRCUMCENTER: Point = Point::new(0.0, 0.0);
pub const FRAME_CENTROID: Point = Point::new(1.0, 0.0);
pub const FRAME_NINE_POINT: Point = Point::new(1.5, 0.0);
pub const FRAME_ORTHOCENTER: Point = Point::new(3.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerFrameParams {
    radius: f64,
    theta: f64,
}

impl EulerFrameParams {
    /// `theta` is reduced into `[0, 2π)`.
    pub fn new(radius: f64, theta: f64) -> Result<Self> {
        check_radius(radius)?;
        if !theta.is_finite() {
            return Err(GeomError::InvalidArgument(format!("theta must be finite, got {theta}")));
        }
        Ok(Self {
            radius,
            theta: theta.rem_euclid(TAU),
        })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn vertex_a(&self) -> Point {
        Point::from_polar(self.radius, self.theta)
    }
}

fn check_radius(radius: f64) -> Result<()> {
    if radius > 1.0 && radius.is_finite() {
        Ok(())
    } else {
        Err(GeomError::InvalidRadius(radius))
    }
}

/// Circle on diameter GH; the Apollonius locus `OP = 2 PN`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthocentroidalCircle {
    pub center: Point,
    pub radius: f64,
}

impl OrthocentroidalCircle {
    pub const FRAME: OrthocentroidalCircle = OrthocentroidalCircle {
        center: Point::new(2.0, 0.0),
        radius: 1.0,
    };

    pub fn from_centroid_orthocenter(g: Point, h: Point) -> Self {
        Self {
            center: g.midpoint(h),
            radius: 0.5 * distance(g, h),
        }
    }

    pub fn circle(&self) -> Result<Circle> {
        Circle::new(self.center, self.radius)
    }

    /// Strict interior test without tolerance.
    pub fn contains(&self, p: Point) -> bool {
        (p - self.center).norm_sq() < self.radius * self.radius
    }
}

/// True iff `OP > 2 PN` by more than the tolerance margin; boundary points
/// are not inside.
pub fn is_inside_orthocentroidal(p: Point, o: Point, n: Point) -> Result<bool> {
    let tol = Tolerance::current();
    if distance(o, n) <= tol.margin(o.norm().max(n.norm())) {
        return Err(GeomError::EquilateralDegenerate);
    }
    let op = distance(o, p);
    Ok(op > 2.0 * distance(p, n) + tol.margin(op))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcEndpoints {
    /// Circumcircle ∩ orthocentroidal circle, upper point.
    pub u: Point,
    /// Circumcircle ∩ orthocentroidal circle, lower point.
    pub v: Point,
    /// Second end of the chord from U through G.
    pub y: Point,
    /// Second end of the chord from V through G.
    pub z: Point,
}

/// The arc ZY of the circumcircle on which A admits no triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ForbiddenArc {
    pub radius: f64,
    pub endpoints: Option<ArcEndpoints>,
}

impl ForbiddenArc {
    pub fn exists(&self) -> bool {
        self.endpoints.is_some()
    }

    /// Whether A at angle `theta` lies on the closed forbidden arc.
    pub fn contains_theta(&self, theta: f64) -> bool {
        match self.endpoints {
            // The arc is symmetric about the x-axis and faces away from G.
            Some(e) => self.radius * theta.cos() <= e.y.x,
            None => false,
        }
    }

    /// Angles of Y and Z in `(-π, π]`; the allowed arc runs counterclockwise
    /// from Y through V and U to Z.
    pub fn endpoint_angles(&self) -> Option<(f64, f64)> {
        self.endpoints.map(|e| (e.y.angle(), e.z.angle()))
    }
}

pub fn forbidden_arc(radius: f64) -> Result<ForbiddenArc> {
    check_radius(radius)?;
    if radius >= 3.0 {
        return Ok(ForbiddenArc {
            radius,
            endpoints: None,
        });
    }
    let circum = Circle::new(FRAME_CIRCUMCENTER, radius)?;
    let ortho = OrthocentroidalCircle::FRAME.circle()?;
    let pts = circle_circle_intersection(&circum, &ortho);
    let (u, v) = match pts.as_slice() {
        [u, v] => (*u, *v),
        [t] => (*t, *t),
        _ => {
            return Ok(ForbiddenArc {
                radius,
                endpoints: None,
            })
        }
    };
    // YG : GU = 2 : 1 along the chord through G
    let g = FRAME_CENTROID;
    Ok(ForbiddenArc {
        radius,
        endpoints: Some(ArcEndpoints {
            u,
            v,
            y: g - (u - g) * 2.0,
            z: g - (v - g) * 2.0,
        }),
    })
}

/// Builds ABC from the circumcircle, A, and the midpoint A' of BC given by
/// `AG : GA' = 2 : 1`. B is the chord end counterclockwise of the ray OA'
/// (seen from O), which keeps labels continuous as A moves.
pub fn construct_triangle(p: &EulerFrameParams) -> Result<Triangle> {
    let tol = Tolerance::current();
    let radius = p.radius;
    let theta = p.theta;
    let a = p.vertex_a();
    let a_mid = (FRAME_CENTROID * 3.0 - a) * 0.5;
    let m = a_mid.norm();
    if m >= radius + tol.absolute_eps {
        return Err(GeomError::ForbiddenPosition { theta });
    }
    if m >= radius - tol.absolute_eps || m <= tol.absolute_eps {
        return Err(GeomError::DegenerateChord { theta });
    }
    let normal = (a_mid / m).perp();
    let circle = Circle::new(FRAME_CIRCUMCENTER, radius)?;
    let chord = Line::new(a_mid, normal)?;
    let ends = circle_line_intersection(&circle, &chord);
    let [e1, e2] = ends.as_slice() else {
        return Err(GeomError::DegenerateChord { theta });
    };
    let (b, c) = if (*e1 - a_mid).dot(normal) > 0.0 {
        (*e1, *e2)
    } else {
        (*e2, *e1)
    };
    let t = Triangle::new(a, b, c).map_err(|_| GeomError::DegenerateChord { theta })?;
    if t.area() <= tol.absolute_eps * radius * radius {
        return Err(GeomError::DegenerateChord { theta });
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSample {
    pub theta: f64,
    pub outcome: Result<Triangle>,
}

/// `n` evenly spaced angles `2πk/n`, each run through `construct_triangle`.
/// Per-sample failures are reported inline.
pub fn sweep(radius: f64, n: usize) -> Result<Vec<SweepSample>> {
    check_radius(radius)?;
    if n < 3 {
        return Err(GeomError::InvalidArgument(format!("sweep needs n >= 3, got {n}")));
    }
    Ok((0..n)
        .into_par_iter()
        .map(|k| {
            let theta = TAU * k as f64 / n as f64;
            let outcome = EulerFrameParams::new(radius, theta).and_then(|p| construct_triangle(&p));
            SweepSample { theta, outcome }
        })
        .collect())
}
