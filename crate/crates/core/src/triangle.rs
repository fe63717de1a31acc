//! Triangles, their classical centers, and the apex-up frame used for the
//! Fermat-point inequality.

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{distance, line_intersection, Line, Point, Tolerance};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    a_vertex: Point,
    b_vertex: Point,
    c_vertex: Point,
}

impl Triangle {
    /// Fails with `DegenerateTriangle` when the vertices are collinear,
    /// coincident or non-finite.
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::DegenerateTriangle);
        }
        let t = Self {
            a_vertex: a,
            b_vertex: b,
            c_vertex: c,
        };
        let eps = Tolerance::current().absolute_eps;
        let area = t.signed_area();
        if !(area.abs() > eps * eps) || !area.is_finite() {
            return Err(GeomError::DegenerateTriangle);
        }
        Ok(t)
    }

    pub fn from_array(v: [Point; 3]) -> Result<Self> {
        Self::new(v[0], v[1], v[2])
    }

    pub fn a(&self) -> Point {
        self.a_vertex
    }

    pub fn b(&self) -> Point {
        self.b_vertex
    }

    pub fn c(&self) -> Point {
        self.c_vertex
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.a_vertex, self.b_vertex, self.c_vertex]
    }

    pub fn signed_area(&self) -> f64 {
        0.5 * (self.b_vertex - self.a_vertex).cross(self.c_vertex - self.a_vertex)
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// +1 for counterclockwise vertex order, -1 for clockwise.
    pub fn orientation(&self) -> i8 {
        if self.signed_area() > 0.0 {
            1
        } else {
            -1
        }
    }

    /// Side lengths opposite A, B, C.
    pub fn side_lengths(&self) -> [f64; 3] {
        let [a, b, c] = self.vertices();
        [distance(b, c), distance(c, a), distance(a, b)]
    }

    pub fn perimeter(&self) -> f64 {
        self.side_lengths().iter().sum()
    }

    pub fn diameter(&self) -> f64 {
        self.side_lengths().into_iter().fold(0.0, f64::max)
    }

    /// Interior angles at A, B, C in radians.
    pub fn angles(&self) -> [f64; 3] {
        let v = self.vertices();
        std::array::from_fn(|i| {
            let p = v[(i + 1) % 3] - v[i];
            let q = v[(i + 2) % 3] - v[i];
            p.cross(q).abs().atan2(p.dot(q))
        })
    }

    pub fn max_angle(&self) -> f64 {
        self.angles().into_iter().fold(0.0, f64::max)
    }

    pub fn min_angle(&self) -> f64 {
        self.angles().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn side_lines(&self) -> [Line; 3] {
        let [a, b, c] = self.vertices();
        // non-degenerate, so no side has zero length
        [
            Line::through(b, c).expect("side BC"),
            Line::through(c, a).expect("side CA"),
            Line::through(a, b).expect("side AB"),
        ]
    }

    pub fn transformed(&self, f: impl Fn(Point) -> Point) -> Result<Triangle> {
        let [a, b, c] = self.vertices();
        Triangle::new(f(a), f(b), f(c))
    }
}

pub fn centroid(t: &Triangle) -> Point {
    (t.a() + t.b() + t.c()) / 3.0
}

/// Circumcenter and circumradius.
pub fn circumcenter(t: &Triangle) -> (Point, f64) {
    let a = t.a();
    let b = t.b() - a;
    let c = t.c() - a;
    let d = 2.0 * b.cross(c);
    let (bb, cc) = (b.norm_sq(), c.norm_sq());
    let offset = Point::new(c.y * bb - b.y * cc, b.x * cc - c.x * bb) / d;
    (a + offset, offset.norm())
}

/// Uses `H = A + B + C - 2 O`.
pub fn orthocenter(t: &Triangle) -> Point {
    let (o, _) = circumcenter(t);
    t.a() + t.b() + t.c() - o * 2.0
}

/// Side-length-weighted vertex average, with inradius `2K / perimeter`.
pub fn incenter(t: &Triangle) -> (Point, f64) {
    let [la, lb, lc] = t.side_lengths();
    let p = la + lb + lc;
    let i = (t.a() * la + t.b() * lb + t.c() * lc) / p;
    (i, 2.0 * t.area() / p)
}

pub fn nine_point_center(t: &Triangle) -> Point {
    let (o, _) = circumcenter(t);
    o.midpoint(orthocenter(t))
}

/// Excenters opposite A, B and C.
pub fn excenters(t: &Triangle) -> [Point; 3] {
    let [la, lb, lc] = t.side_lengths();
    let (a, b, c) = (t.a(), t.b(), t.c());
    [
        (b * lb + c * lc - a * la) / (lb + lc - la),
        (a * la + c * lc - b * lb) / (la + lc - lb),
        (a * la + b * lb - c * lc) / (la + lb - lc),
    ]
}

pub fn angle_cosines(t: &Triangle) -> [f64; 3] {
    let v = t.vertices();
    std::array::from_fn(|i| {
        let p = v[(i + 1) % 3] - v[i];
        let q = v[(i + 2) % 3] - v[i];
        p.dot(q) / (p.norm() * q.norm())
    })
}

/// True when OH is below `relative_eps * R`.
pub fn is_equilateral(t: &Triangle) -> bool {
    let (o, r) = circumcenter(t);
    distance(o, orthocenter(t)) < Tolerance::current().relative_eps * r
}

/// Apexes of the equilateral triangles erected outward on BC, CA and AB.
pub fn external_apexes(t: &Triangle) -> [Point; 3] {
    let v = t.vertices();
    std::array::from_fn(|i| {
        let p = v[(i + 1) % 3];
        let q = v[(i + 2) % 3];
        let opposite = v[i];
        let edge = q - p;
        let lift = edge.perp() * (SQRT3 / 2.0);
        let mid = p.midpoint(q);
        // outward means across PQ from the third vertex
        if edge.cross(opposite - p) > 0.0 {
            mid - lift
        } else {
            mid + lift
        }
    })
}

/// Concurrency point of the lines joining each vertex to the opposite
/// outward apex. Intersects the best-conditioned pair of the three lines.
pub fn fermat_point_synthetic(t: &Triangle) -> Point {
    let v = t.vertices();
    let apexes = external_apexes(t);
    let lines: [Line; 3] =
        std::array::from_fn(|i| Line::through(v[i], apexes[i]).expect("apex differs from vertex"));
    let mut pairs = [(0, 1), (1, 2), (0, 2)];
    pairs.sort_by(|&(i, j), &(k, l)| {
        let s1 = lines[i].direction().cross(lines[j].direction()).abs();
        let s2 = lines[k].direction().cross(lines[l].direction()).abs();
        s2.total_cmp(&s1)
    });
    let (i, j) = pairs[0];
    line_intersection(&lines[i], &lines[j]).expect("cevians through the Fermat point are never parallel")
}

/// Rigid motion taking the original triangle into its apex-up frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Placement {
    /// Foot of the apex altitude, in original coordinates.
    pub origin: Point,
    /// Unit vector of the frame x-axis (B towards C).
    pub x_axis: Point,
    /// Unit vector of the frame y-axis (foot towards apex).
    pub y_axis: Point,
    /// Input indices of the vertices that became A, B and C.
    pub order: [usize; 3],
}

impl Placement {
    pub fn to_frame(&self, p: Point) -> Point {
        let d = p - self.origin;
        Point::new(d.dot(self.x_axis), d.dot(self.y_axis))
    }

    pub fn from_frame(&self, q: Point) -> Point {
        self.origin + self.x_axis * q.x + self.y_axis * q.y
    }

    pub fn preserves_orientation(&self) -> bool {
        self.x_axis.cross(self.y_axis) > 0.0
    }
}

/// `A = (0, a)`, `B = (-b, 0)`, `C = (c, 0)` with the largest angle at A.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BCFrame {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl BCFrame {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && c > 0.0) || !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::InvalidArgument(format!(
                "frame parameters must be positive and finite, got a={a}, b={b}, c={c}"
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn apex(&self) -> Point {
        Point::new(0.0, self.a)
    }

    pub fn left(&self) -> Point {
        Point::new(-self.b, 0.0)
    }

    pub fn right(&self) -> Point {
        Point::new(self.c, 0.0)
    }

    pub fn triangle(&self) -> Result<Triangle> {
        Triangle::new(self.apex(), self.left(), self.right())
    }

    /// Fermat-point numerators and common denominator `(u, v, d)`.
    pub fn fermat_uvd(&self) -> (f64, f64, f64) {
        let (a, b, c) = (self.a, self.b, self.c);
        let u = (SQRT3 * b * c - SQRT3 * a * a - a * c - a * b) * (b - c);
        let v = (a * a + SQRT3 * a * b + SQRT3 * a * c + 3.0 * b * c) * (b + c);
        let d = 2.0 * SQRT3 * (a * a + b * b + c * c) + 6.0 * a * c + 6.0 * a * b + 2.0 * SQRT3 * b * c;
        (u, v, d)
    }

    /// `((c - b)/2, (a^2 - bc)/2a)`
    pub fn circumcenter(&self) -> Point {
        let (a, b, c) = (self.a, self.b, self.c);
        Point::new(0.5 * (c - b), (a * a - b * c) / (2.0 * a))
    }

    /// `((c - b)/4, (a^2 + bc)/4a)`
    pub fn nine_point_center(&self) -> Point {
        let (a, b, c) = (self.a, self.b, self.c);
        Point::new(0.25 * (c - b), (a * a + b * c) / (4.0 * a))
    }
}

pub fn fermat_point_closed_form(f: &BCFrame) -> Point {
    let (u, v, d) = f.fermat_uvd();
    Point::new(u / d, v / d)
}

pub fn to_bc_frame(t: &Triangle) -> (BCFrame, Placement) {
    let sides = t.side_lengths();
    let mut apex = 0;
    for i in 1..3 {
        if sides[i] > sides[apex] {
            apex = i;
        }
    }
    let order = [apex, (apex + 1) % 3, (apex + 2) % 3];
    let v = t.vertices();
    let (pa, pb, pc) = (v[order[0]], v[order[1]], v[order[2]]);
    let base = Line::through(pb, pc).expect("non-degenerate base");
    let x_axis = base.direction();
    let rel = pa - pb;
    let y_axis = if x_axis.cross(rel) > 0.0 { x_axis.perp() } else { -x_axis.perp() };
    let foot = pb + x_axis * rel.dot(x_axis);
    let height = rel.dot(y_axis);
    let placement = Placement {
        origin: foot,
        x_axis,
        y_axis,
        order,
    };
    let frame = BCFrame {
        a: height,
        b: (foot - pb).dot(x_axis),
        c: (pc - foot).dot(x_axis),
    };
    (frame, placement)
}

/// Every center and radius needed by the position theorems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CenterSet {
    pub centroid: Point,
    pub orthocenter: Point,
    pub circumcenter: Point,
    pub incenter: Point,
    pub nine_point: Point,
    pub fermat: Point,
    pub excenters: [Point; 3],
    pub circumradius: f64,
    pub inradius: f64,
}

impl CenterSet {
    pub fn compute(t: &Triangle) -> Self {
        let (o, big_r) = circumcenter(t);
        let h = t.a() + t.b() + t.c() - o * 2.0;
        let (i, r) = incenter(t);
        Self {
            centroid: centroid(t),
            orthocenter: h,
            circumcenter: o,
            incenter: i,
            nine_point: o.midpoint(h),
            fermat: fermat_point_synthetic(t),
            excenters: excenters(t),
            circumradius: big_r,
            inradius: r,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn right_345() -> Triangle {
        Triangle::new(p(0.0, 0.0), p(3.0, 0.0), p(0.0, 4.0)).unwrap()
    }

    fn equilateral() -> Triangle {
        Triangle::new(p(-1.0, 0.0), p(1.0, 0.0), p(0.0, SQRT3)).unwrap()
    }

    fn unit_equilateral_at_origin() -> Triangle {
        Triangle::new(
            Point::from_polar(1.0, std::f64::consts::FRAC_PI_2),
            Point::from_polar(1.0, std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::FRAC_PI_3),
            Point::from_polar(1.0, std::f64::consts::FRAC_PI_2 + 4.0 * std::f64::consts::FRAC_PI_3),
        )
        .unwrap()
    }

    fn close(a: Point, b: Point, eps: f64) -> bool {
        distance(a, b) <= eps
    }

    #[test]
    fn degenerate_rejected() {
        assert_eq!(
            Triangle::new(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)),
            Err(GeomError::DegenerateTriangle)
        );
        assert_eq!(
            Triangle::new(p(0.0, 0.0), p(0.0, 0.0), p(2.0, 2.0)),
            Err(GeomError::DegenerateTriangle)
        );
        assert!(Triangle::new(p(f64::NAN, 0.0), p(1.0, 0.0), p(0.0, 1.0)).is_err());
    }

    #[test]
    fn centroid_examples() {
        let t = Triangle::new(p(0.0, 0.0), p(3.0, 0.0), p(0.0, 3.0)).unwrap();
        assert_eq!(centroid(&t), p(1.0, 1.0));
        assert!(close(centroid(&unit_equilateral_at_origin()), Point::ORIGIN, 1e-15));
        let t = Triangle::new(p(0.0, 4.0), p(-1.0, 0.0), p(2.0, 0.0)).unwrap();
        assert!(close(centroid(&t), p(1.0 / 3.0, 4.0 / 3.0), 1e-15));
    }

    #[test]
    fn circumcenter_examples() {
        let (o, r) = circumcenter(&right_345());
        assert!(close(o, p(1.5, 2.0), 1e-15));
        assert_relative_eq!(r, 2.5, epsilon = 1e-15);

        let frame = BCFrame::new(4.0, 1.0, 2.0).unwrap();
        let (o, _) = circumcenter(&frame.triangle().unwrap());
        assert!(close(o, p(0.5, 1.75), 1e-14));
        assert!(close(frame.circumcenter(), p(0.5, 1.75), 1e-15));

        let t = unit_equilateral_at_origin();
        assert!(close(circumcenter(&t).0, centroid(&t), 1e-15));
    }

    #[test]
    fn orthocenter_examples() {
        assert!(close(orthocenter(&right_345()), Point::ORIGIN, 1e-14));
        let t = unit_equilateral_at_origin();
        assert!(close(orthocenter(&t), centroid(&t), 1e-14));
        let (a, b) = (2.5, 1.5);
        let t = BCFrame::new(a, b, b).unwrap().triangle().unwrap();
        assert!(close(orthocenter(&t), p(0.0, b * b / a), 1e-14));
    }

    #[test]
    fn orthocenter_lies_on_all_altitudes() {
        let t = Triangle::new(p(0.3, 1.7), p(-2.0, 0.1), p(4.0, -0.5)).unwrap();
        let h = orthocenter(&t);
        let v = t.vertices();
        for i in 0..3 {
            let side = v[(i + 2) % 3] - v[(i + 1) % 3];
            assert!((h - v[i]).dot(side).abs() < 1e-12 * side.norm_sq().max(1.0));
        }
    }

    #[test]
    fn incenter_examples() {
        let (i, r) = incenter(&right_345());
        assert!(close(i, p(1.0, 1.0), 1e-15));
        assert_relative_eq!(r, 1.0, epsilon = 1e-15);
        let t = unit_equilateral_at_origin();
        assert!(close(incenter(&t).0, centroid(&t), 1e-15));
    }

    #[test]
    fn incenter_matches_bisector_intersection() {
        let t = Triangle::new(p(0.3, 1.7), p(-2.0, 0.1), p(4.0, -0.5)).unwrap();
        let (i, r) = incenter(&t);
        for line in t.side_lines() {
            assert_relative_eq!(line.distance_to(i), r, max_relative = 1e-9);
        }
        // bisector oracle: direction of the sum of unit edge vectors
        let v = t.vertices();
        let bisector = |k: usize| {
            let u = (v[(k + 1) % 3] - v[k]) / (v[(k + 1) % 3] - v[k]).norm();
            let w = (v[(k + 2) % 3] - v[k]) / (v[(k + 2) % 3] - v[k]).norm();
            Line::new(v[k], u + w).unwrap()
        };
        let x = line_intersection(&bisector(0), &bisector(1)).unwrap();
        assert!(close(x, i, 1e-12));
    }

    #[test]
    fn nine_point_examples() {
        let frame = BCFrame::new(4.0, 1.0, 2.0).unwrap();
        let n = nine_point_center(&frame.triangle().unwrap());
        assert!(close(n, p(0.25, 1.125), 1e-14));
        assert!(close(frame.nine_point_center(), p(0.25, 1.125), 1e-15));
        assert!(close(nine_point_center(&right_345()), p(0.75, 1.0), 1e-14));
        let t = unit_equilateral_at_origin();
        assert!(close(nine_point_center(&t), centroid(&t), 1e-14));
    }

    #[test]
    fn nine_point_center_is_medial_circumcenter() {
        let t = Triangle::new(p(0.3, 1.7), p(-2.0, 0.1), p(4.0, -0.5)).unwrap();
        let [a, b, c] = t.vertices();
        let medial = Triangle::new(b.midpoint(c), c.midpoint(a), a.midpoint(b)).unwrap();
        assert!(close(circumcenter(&medial).0, nine_point_center(&t), 1e-12));
    }

    #[test]
    fn excenters_of_right_triangle() {
        let t = right_345();
        let [ea, eb, ec] = excenters(&t);
        // exradii K/(s - side): 6/(6-5), 6/(6-4), 6/(6-3)
        assert!(close(ea, p(6.0, 6.0), 1e-14));
        assert!(close(eb, p(-3.0, 3.0), 1e-14));
        assert!(close(ec, p(2.0, -2.0), 1e-14));
        let radii = [6.0, 3.0, 2.0];
        for (e, r) in [ea, eb, ec].into_iter().zip(radii) {
            for line in t.side_lines() {
                assert_relative_eq!(line.distance_to(e), r, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn excenters_symmetry() {
        let t = unit_equilateral_at_origin();
        let e = excenters(&t);
        let rot = |q: Point| Point::from_polar(q.norm(), q.angle() + 2.0 * std::f64::consts::FRAC_PI_3);
        for k in 0..3 {
            assert!(close(rot(e[k]), e[(k + 1) % 3], 1e-12));
        }
        let t = BCFrame::new(2.0, 1.0, 1.0).unwrap().triangle().unwrap();
        assert!(excenters(&t)[0].x.abs() < 1e-15);
    }

    #[test]
    fn angle_cosine_examples() {
        for c in angle_cosines(&unit_equilateral_at_origin()) {
            assert_relative_eq!(c, 0.5, epsilon = 1e-15);
        }
        let c = angle_cosines(&right_345());
        assert_relative_eq!(c[0], 0.0, epsilon = 1e-15);
        assert_relative_eq!(c[1], 0.6, epsilon = 1e-15);
        assert_relative_eq!(c[2], 0.8, epsilon = 1e-15);
    }

    #[test]
    fn equilateral_gate() {
        assert!(is_equilateral(&unit_equilateral_at_origin()));
        assert!(is_equilateral(&equilateral()));
        assert!(!is_equilateral(&right_345()));
        let t = unit_equilateral_at_origin();
        let nudged = Triangle::new(t.a() + p(3e-13, 0.0), t.b(), t.c()).unwrap();
        let (o, _) = circumcenter(&nudged);
        let oh = distance(o, orthocenter(&nudged));
        assert!(oh > 0.0 && oh < 1e-11, "oh = {oh}");
        assert!(is_equilateral(&nudged));
    }

    #[test]
    fn fermat_synthetic_examples() {
        let t = unit_equilateral_at_origin();
        assert!(close(fermat_point_synthetic(&t), Point::ORIGIN, 1e-14));
        let b = 1.3;
        let t = BCFrame::new(3.0, b, b).unwrap().triangle().unwrap();
        assert!(close(fermat_point_synthetic(&t), p(0.0, b / SQRT3), 1e-14));
        let t = Triangle::new(p(0.0, 4.0), p(-1.0, 0.0), p(2.0, 0.0)).unwrap();
        let closed = fermat_point_closed_form(&BCFrame::new(4.0, 1.0, 2.0).unwrap());
        assert!(close(fermat_point_synthetic(&t), closed, 1e-9));
    }

    #[test]
    fn fermat_line_from_c_is_concurrent() {
        let t = Triangle::new(p(0.3, 1.7), p(-2.0, 0.1), p(4.0, -0.5)).unwrap();
        let f = fermat_point_synthetic(&t);
        let apexes = external_apexes(&t);
        for (v, apex) in t.vertices().into_iter().zip(apexes) {
            let line = Line::through(v, apex).unwrap();
            assert!(line.distance_to(f) < 1e-12);
        }
    }

    #[test]
    fn closed_form_examples() {
        let s = SQRT3;
        let t = fermat_point_closed_form(&BCFrame::new(s, 1.0, 1.0).unwrap());
        assert!(close(t, p(0.0, 1.0 / s), 1e-15));
        let (u, _, d) = BCFrame::new(0.7, 2.0, 2.0).unwrap().fermat_uvd();
        assert_eq!(u, 0.0);
        assert!(d > 0.0);
        let t = fermat_point_closed_form(&BCFrame::new(0.7, 2.0, 2.0).unwrap());
        assert!(close(t, p(0.0, 2.0 / s), 1e-15));
    }

    #[test]
    fn bc_frame_of_frame_triangle_is_identity() {
        let t = Triangle::new(p(0.0, 1.0), p(-1.0, 0.0), p(2.0, 0.0)).unwrap();
        let (f, place) = to_bc_frame(&t);
        assert_eq!(place.order, [0, 1, 2]);
        assert_relative_eq!(f.a, 1.0, epsilon = 1e-15);
        assert_relative_eq!(f.b, 1.0, epsilon = 1e-15);
        assert_relative_eq!(f.c, 2.0, epsilon = 1e-15);
        assert_eq!(place.origin, Point::ORIGIN);
        assert_eq!(place.x_axis, p(1.0, 0.0));
        assert_eq!(place.y_axis, p(0.0, 1.0));
        assert!(place.preserves_orientation());
    }

    #[test]
    fn bc_frame_picks_largest_angle_not_input_apex() {
        // (0,4),(-1,0),(2,0) has its largest angle at (-1,0)
        let t = Triangle::new(p(0.0, 4.0), p(-1.0, 0.0), p(2.0, 0.0)).unwrap();
        let (f, place) = to_bc_frame(&t);
        assert_eq!(place.order, [1, 2, 0]);
        let sides = t.side_lengths();
        assert_relative_eq!(f.b + f.c, sides[1], max_relative = 1e-15);
        assert_relative_eq!(f.a * sides[1], 2.0 * t.area(), max_relative = 1e-15);
    }

    #[test]
    fn bc_frame_of_rotated_triangle() {
        let rot = |q: Point| q.perp();
        let t = Triangle::new(rot(p(0.0, 1.0)), rot(p(-1.0, 0.0)), rot(p(2.0, 0.0))).unwrap();
        let (f, place) = to_bc_frame(&t);
        assert_relative_eq!(f.a, 1.0, epsilon = 1e-14);
        assert_relative_eq!(f.b, 1.0, epsilon = 1e-14);
        assert_relative_eq!(f.c, 2.0, epsilon = 1e-14);
        // placement undoes the +90 rotation
        let q = place.to_frame(p(0.0, 1.0));
        assert!(close(q, p(1.0, 0.0), 1e-15));
        assert!(place.preserves_orientation());
    }

    #[test]
    fn bc_frame_of_right_triangle() {
        let (f, place) = to_bc_frame(&right_345());
        assert_eq!(place.order[0], 0);
        assert_relative_eq!(f.a, 12.0 / 5.0, epsilon = 1e-14);
        assert_relative_eq!(f.b + f.c, 5.0, epsilon = 1e-14);
        assert_relative_eq!(f.b * f.c, f.a * f.a, epsilon = 1e-13);
    }

    #[test]
    fn bc_frame_reflects_clockwise_input() {
        let t = Triangle::new(p(0.0, 1.0), p(2.0, 0.0), p(-1.0, 0.0)).unwrap();
        let (f, place) = to_bc_frame(&t);
        assert!(!place.preserves_orientation());
        assert_relative_eq!(f.b, 2.0, epsilon = 1e-15);
        assert_relative_eq!(f.c, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn center_set_invariants_on_fixed_triangle() {
        let t = Triangle::new(p(0.3, 1.7), p(-2.0, 0.1), p(4.0, -0.5)).unwrap();
        let cs = CenterSet::compute(&t);
        let (o, g, n, h) = (cs.circumcenter, cs.centroid, cs.nine_point, cs.orthocenter);
        assert!(close(n, o.midpoint(h), 1e-14));
        assert!((g - o).cross(h - o).abs() < 1e-12);
        let gn = distance(g, n);
        assert_relative_eq!(distance(o, g), 2.0 * gn, max_relative = 1e-12);
        assert_relative_eq!(distance(n, h), 3.0 * gn, max_relative = 1e-12);
        assert!(cs.circumradius >= 2.0 * cs.inradius);
    }

    fn triangle_strategy() -> impl Strategy<Value = Triangle> {
        (
            -10f64..10.0,
            -10f64..10.0,
            -10f64..10.0,
            -10f64..10.0,
            -10f64..10.0,
            -10f64..10.0,
        )
            .prop_filter_map("well-shaped", |(ax, ay, bx, by, cx, cy)| {
                let t = Triangle::new(p(ax, ay), p(bx, by), p(cx, cy)).ok()?;
                (t.min_angle() > 1e-3).then_some(t)
            })
    }

    proptest! {
        #[test]
        fn euler_line_ratios(t in triangle_strategy()) {
            let cs = CenterSet::compute(&t);
            let scale = cs.circumradius;
            let (o, g, n, h) = (cs.circumcenter, cs.centroid, cs.nine_point, cs.orthocenter);
            prop_assert!((g - o).cross(h - o).abs() <= 1e-9 * scale * scale);
            let gn = distance(g, n);
            prop_assert!((distance(o, g) - 2.0 * gn).abs() <= 1e-9 * scale);
            prop_assert!((distance(n, h) - 3.0 * gn).abs() <= 1e-9 * scale);
        }

        #[test]
        fn euler_and_feuerbach(t in triangle_strategy()) {
            let cs = CenterSet::compute(&t);
            let (big_r, r) = (cs.circumradius, cs.inradius);
            let oi2 = (cs.incenter - cs.circumcenter).norm_sq();
            prop_assert!((oi2 - big_r * (big_r - 2.0 * r)).abs() <= 1e-9 * big_r * big_r);
            let inn = distance(cs.incenter, cs.nine_point);
            prop_assert!((inn - (big_r / 2.0 - r)).abs() <= 1e-9 * big_r);
        }

        #[test]
        fn closed_form_agrees_with_construction(t in triangle_strategy()) {
            let (frame, place) = to_bc_frame(&t);
            let synthetic = fermat_point_synthetic(&t);
            let closed = place.from_frame(fermat_point_closed_form(&frame));
            prop_assert!(distance(synthetic, closed) <= 1e-9 * t.diameter());
        }

        #[test]
        fn frame_is_an_isometry(t in triangle_strategy()) {
            let (frame, place) = to_bc_frame(&t);
            let ft = frame.triangle().unwrap();
            for (orig, img) in [place.order[0], place.order[1], place.order[2]]
                .iter()
                .map(|&k| t.vertices()[k])
                .zip(ft.vertices())
            {
                prop_assert!(distance(place.to_frame(orig), img) <= 1e-12 * t.diameter());
            }
            prop_assert!(frame.a > 0.0 && frame.b > 0.0 && frame.c > 0.0);
        }

        #[test]
        fn fermat_minimizes_total_distance(t in triangle_strategy(), probes in proptest::collection::vec((0f64..1.0, 0f64..1.0), 200)) {
            prop_assume!(t.max_angle() <= 2.0 * std::f64::consts::FRAC_PI_3);
            let f = fermat_point_synthetic(&t);
            let total = |q: Point| t.vertices().iter().map(|v| distance(*v, q)).sum::<f64>();
            let best = total(f);
            let slack = 1e-12 * t.diameter();
            for v in t.vertices() {
                prop_assert!(best <= total(v) + slack);
            }
            let [a, b, c] = t.vertices();
            for (s, u) in probes {
                let (s, u) = if s + u > 1.0 { (1.0 - s, 1.0 - u) } else { (s, u) };
                let q = a + (b - a) * s + (c - a) * u;
                prop_assert!(best <= total(q) + slack);
            }
        }
    }
}
