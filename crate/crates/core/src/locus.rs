//! Incenter and Fermat-point loci in the Euler frame.
//!
//! For a fixed circumradius `R`, the incenter of every triangle in the frame
//! lies on the quartic `(x² + y²)² = R² [(2x − 3)² + 4y²]`. Distinct
//! radii give curves that never meet inside the orthocentroidal circle and
//! together fill it, except for the nine-point center.
//!
//! Traces are generated by sweeping vertex A around the circumcircle, so
//! every emitted point is the center of a real triangle.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::euler_frame::{construct_triangle, forbidden_arc, sweep, EulerFrameParams, OrthocentroidalCircle};
use crate::geom::{distance, Point, Tolerance};
use crate::triangle::{fermat_point_synthetic, incenter, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuarticLocus {
    radius: f64,
}

impl QuarticLocus {
    pub fn new(radius: f64) -> Result<Self> {
        if radius > 1.0 && radius.is_finite() {
            Ok(Self { radius })
        } else {
            Err(GeomError::InvalidRadius(radius))
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn residual(&self, p: Point) -> f64 {
        quartic_residual(p, self.radius)
    }

    /// Residual divided by the magnitude of the left-hand side.
    pub fn scaled_residual(&self, p: Point) -> f64 {
        let lhs = p.norm_sq() * p.norm_sq();
        let rhs = self.radius * self.radius * denominator(p);
        self.residual(p).abs() / lhs.max(rhs)
    }
}

/// `(x² + y²)² − R² [(2x − 3)² + 4y²]`
pub fn quartic_residual(p: Point, radius: f64) -> f64 {
    let rho2 = p.norm_sq();
    rho2 * rho2 - radius * radius * denominator(p)
}

/// `(2x − 3)² + 4y²`, i.e. `4 PN²` in the frame.
fn denominator(p: Point) -> f64 {
    let t = 2.0 * p.x - 3.0;
    t * t + 4.0 * p.y * p.y
}

fn check_in_disc(p: Point) -> Result<()> {
    if OrthocentroidalCircle::FRAME.contains(p) {
        Ok(())
    } else {
        Err(GeomError::OutsideDisc)
    }
}

/// The unique `R > 1` whose locus passes through `p`.
pub fn radius_for_point(p: Point) -> Result<f64> {
    check_in_disc(p)?;
    let den = denominator(p);
    let eps = Tolerance::current().absolute_eps;
    if den < eps * eps {
        return Err(GeomError::AtNinePointCenter);
    }
    let rho2 = p.norm_sq();
    Ok((rho2 * rho2 / den).sqrt())
}

/// Positive real roots `R` of `den · R² − (x² + y²)² = 0`.
pub fn positive_radius_roots(p: Point) -> Vec<f64> {
    let den = denominator(p);
    let rho2 = p.norm_sq();
    let c = -(rho2 * rho2);
    if den == 0.0 {
        return Vec::new();
    }
    // den R² + 0 R + c = 0
    let disc = -4.0 * den * c;
    if disc < 0.0 {
        return Vec::new();
    }
    let s = disc.sqrt();
    let mut roots = vec![s / (2.0 * den), -s / (2.0 * den)];
    roots.retain(|r| *r > 0.0);
    roots.dedup();
    roots
}

/// `(a² + b²)² > (2a − 3)² + 4b²`, equivalent to `R > 1` for the locus
/// through `(a, b)`.
pub fn prop2_inequality_check(p: Point) -> bool {
    let rho2 = p.norm_sq();
    rho2 * rho2 > denominator(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LocusKind {
    /// `R > 3`: closed curve strictly inside the circle.
    Lobe,
    /// `1 < R < 3`: open arc with ends on the orthocentroidal circle.
    Bell,
    /// `R = 3`: closes at the orthocenter.
    ClosedAtH,
}

impl LocusKind {
    pub fn classify(radius: f64) -> Self {
        let tol = Tolerance::current();
        if (radius - 3.0).abs() <= tol.margin(3.0) {
            LocusKind::ClosedAtH
        } else if radius > 3.0 {
            LocusKind::Lobe
        } else {
            LocusKind::Bell
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub theta: f64,
    pub point: Point,
    /// Orientation of the source triangle ABC, ±1.
    pub branch: i8,
    /// Extra sample placed next to a degenerate end of the sweep.
    pub limit: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocusTrace {
    pub radius: f64,
    pub kind: LocusKind,
    pub points: Vec<TracePoint>,
}

impl LocusTrace {
    pub fn first(&self) -> Option<Point> {
        self.points.first().map(|p| p.point)
    }

    pub fn last(&self) -> Option<Point> {
        self.points.last().map(|p| p.point)
    }

    pub fn sweep_points(&self) -> impl Iterator<Item = &TracePoint> {
        self.points.iter().filter(|p| !p.limit)
    }

    pub fn steps(&self) -> Vec<f64> {
        self.points.windows(2).map(|w| distance(w[0].point, w[1].point)).collect()
    }

    /// Distance from the last point back to the first.
    pub fn closure_gap(&self) -> f64 {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) => distance(a, b),
            _ => f64::INFINITY,
        }
    }

    /// Number of separate passes of the (cyclic) trace through the
    /// `eps`-ball around `p`.
    pub fn visit_count(&self, p: Point, eps: f64) -> usize {
        let near: Vec<bool> = self.points.iter().map(|q| distance(q.point, p) <= eps).collect();
        let n = near.len();
        if n == 0 {
            return 0;
        }
        if near.iter().all(|&b| b) {
            return 1;
        }
        (0..n).filter(|&i| near[i] && !near[(i + n - 1) % n]).count()
    }

    /// Maximal runs of constant branch tag, as index ranges.
    pub fn branch_runs(&self) -> Vec<std::ops::Range<usize>> {
        let mut runs = Vec::new();
        let mut start = 0;
        for i in 1..=self.points.len() {
            if i == self.points.len() || self.points[i].branch != self.points[start].branch {
                if i > start {
                    runs.push(start..i);
                }
                start = i;
            }
        }
        runs
    }
}

const LIMIT_OFFSETS: [f64; 5] = [1e-8, 1e-7, 1e-6, 1e-5, 1e-4];

/// Smallest offset from `theta` (in direction `sign`) that still builds a
/// proper triangle.
fn limit_sample(radius: f64, theta: f64, sign: f64) -> Option<(f64, Triangle)> {
    LIMIT_OFFSETS.iter().find_map(|off| {
        let th = (theta + sign * off).rem_euclid(TAU);
        let params = EulerFrameParams::new(radius, th).ok()?;
        construct_triangle(&params).ok().map(|t| (th, t))
    })
}

fn trace_with(radius: f64, n: usize, center: impl Fn(&Triangle) -> Point) -> Result<LocusTrace> {
    QuarticLocus::new(radius)?;
    if n < 16 {
        return Err(GeomError::InvalidArgument(format!("locus trace needs n >= 16, got {n}")));
    }
    let kind = LocusKind::classify(radius);
    let samples = sweep(radius, n)?;
    let to_point = |theta: f64, t: &Triangle, limit: bool| TracePoint {
        theta,
        point: center(t),
        branch: t.orientation(),
        limit,
    };
    let mut points: Vec<TracePoint> = samples
        .iter()
        .filter_map(|s| s.outcome.as_ref().ok().map(|t| to_point(s.theta, t, false)))
        .collect();

    match kind {
        LocusKind::Lobe => {}
        LocusKind::ClosedAtH => {
            // A = H at theta = 0 collapses the triangle; approach from both sides.
            if let Some((th, t)) = limit_sample(radius, 0.0, 1.0) {
                points.insert(0, to_point(th, &t, true));
            }
            if let Some((th, t)) = limit_sample(radius, TAU, -1.0) {
                points.push(to_point(th, &t, true));
            }
        }
        LocusKind::Bell => {
            let arc = forbidden_arc(radius)?;
            if let Some((theta_y, theta_z)) = arc.endpoint_angles() {
                let from_y = |th: f64| (th - theta_y).rem_euclid(TAU);
                points.sort_by(|a, b| from_y(a.theta).total_cmp(&from_y(b.theta)));
                if let Some((th, t)) = limit_sample(radius, theta_y, 1.0) {
                    points.insert(0, to_point(th, &t, true));
                }
                if let Some((th, t)) = limit_sample(radius, theta_z, -1.0) {
                    points.push(to_point(th, &t, true));
                }
            }
        }
    }
    Ok(LocusTrace { radius, kind, points })
}

/// Incenters along a full sweep of vertex A. Lobes are in θ order; bells run
/// from the Y end of the allowed arc to the Z end; both open kinds carry a
/// limit sample at each degenerate end.
pub fn trace_incenter_locus(radius: f64, n: usize) -> Result<LocusTrace> {
    trace_with(radius, n, |t| incenter(t).0)
}

/// Same sweep as [`trace_incenter_locus`], tracing the Fermat point.
pub fn trace_fermat_locus(radius: f64, n: usize) -> Result<LocusTrace> {
    trace_with(radius, n, fermat_point_synthetic)
}

/// Finds a vertex angle whose triangle has its incenter at `p`, returning
/// `(R, θ, distance)`.
pub fn locate_incenter(p: Point) -> Result<(f64, f64, f64)> {
    let radius = radius_for_point(p)?;
    let miss = |theta: f64| -> f64 {
        EulerFrameParams::new(radius, theta)
            .and_then(|params| construct_triangle(&params))
            .map(|t| distance(incenter(&t).0, p))
            .unwrap_or(f64::INFINITY)
    };
    const COARSE: usize = 4096;
    let step = TAU / COARSE as f64;
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..COARSE {
        let th = k as f64 * step;
        let d = miss(th);
        if d < best.0 {
            best = (d, th);
        }
    }
    // golden-section refinement inside the neighbouring cells
    let (mut lo, mut hi) = (best.1 - step, best.1 + step);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (miss(x1), miss(x2));
    for _ in 0..200 {
        if hi - lo < 1e-15 * PI {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = miss(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = miss(x2);
        }
    }
    let (d, th) = [(f1, x1), (f2, x2), best]
        .into_iter()
        .fold((f64::INFINITY, 0.0), |acc, c| if c.0 < acc.0 { c } else { acc });
    Ok((radius, th.rem_euclid(TAU), d))
}
