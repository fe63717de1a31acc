use std::f64::consts::FRAC_PI_3;

use crate::error::{GeomError, Result};
use crate::geom::{Point, Tolerance};
use crate::triangle::{centroid, Triangle};

const GRADIENT_TOL: f64 = 1e-10;

fn total_distance(x: Point, v: &[Point; 3]) -> f64 {
    v.iter().map(|&p| (x - p).norm()).sum()
}

/// Minimizer of `TA + TB + TC` by Weiszfeld iteration from the centroid with
/// Newton steps taken whenever they decrease the objective. Stops once the
/// gradient norm, measured relative to the triangle size, is below 1e-10.
pub fn fermat_brute_force_oracle(t: &Triangle, iterations: usize) -> Result<Point> {
    let tol = Tolerance::current();
    let max = t.max_angle();
    let limit = 2.0 * FRAC_PI_3;
    if max > limit + tol.margin(limit) {
        return Err(GeomError::AngleTooLarge { degrees: max.to_degrees() });
    }
    let v = t.vertices();
    let diam = t.diameter();
    let mut x = centroid(t);
    for _ in 0..iterations {
        let d = v.map(|p| (x - p).norm());
        if let Some(i) = (0..3).find(|&i| d[i] <= 1e-15 * diam) {
            // sitting on a vertex: optimal iff the other two pulls sum to at most one
            let pull = (0..3).filter(|&j| j != i).fold(Point::new(0.0, 0.0), |s, j| s + (x - v[j]) / d[j]);
            if pull.norm() <= 1.0 {
                return Ok(x);
            }
            x = x - pull * (1e-8 * diam / pull.norm());
            continue;
        }
        let grad = (0..3).fold(Point::new(0.0, 0.0), |s, i| s + (x - v[i]) / d[i]);
        if grad.norm() <= GRADIENT_TOL {
            return Ok(x);
        }
        // Hessian: Σ (I − u uᵀ)/dᵢ
        let (mut hxx, mut hxy, mut hyy) = (0.0, 0.0, 0.0);
        for i in 0..3 {
            let u = (x - v[i]) / d[i];
            hxx += (1.0 - u.x * u.x) / d[i];
            hxy -= u.x * u.y / d[i];
            hyy += (1.0 - u.y * u.y) / d[i];
        }
        let det = hxx * hyy - hxy * hxy;
        let f0 = total_distance(x, &v);
        if det > 0.0 {
            let step = Point::new(hyy * grad.x - hxy * grad.y, hxx * grad.y - hxy * grad.x) / det;
            let y = x - step;
            if y.is_finite() && total_distance(y, &v) <= f0 {
                x = y;
                continue;
            }
        }
        let w = d.map(|di| 1.0 / di);
        let sw: f64 = w.iter().sum();
        x = (v[0] * w[0] + v[1] * w[1] + v[2] * w[2]) / sw;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::distance;
    use crate::triangle::{fermat_point_synthetic, BCFrame};

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn equilateral_gives_centroid() {
        let t = Triangle::new(p(-1.0, 0.0), p(1.0, 0.0), p(0.0, 3f64.sqrt())).unwrap();
        let x = fermat_brute_force_oracle(&t, 200).unwrap();
        assert!(distance(x, centroid(&t)) < 1e-12);
    }

    #[test]
    fn matches_synthetic_on_345() {
        let t = Triangle::new(p(0.0, 0.0), p(3.0, 0.0), p(0.0, 4.0)).unwrap();
        let x = fermat_brute_force_oracle(&t, 200).unwrap();
        assert!(distance(x, fermat_point_synthetic(&t)) < 1e-7 * t.diameter());
    }

    #[test]
    fn isosceles_frame() {
        for (a, b) in [(1.0, 1.0), (4.0, 1.0), (0.6, 1.0)] {
            let t = BCFrame::new(a, b, b).unwrap().triangle().unwrap();
            let x = fermat_brute_force_oracle(&t, 200).unwrap();
            assert!(distance(x, p(0.0, b / 3f64.sqrt())) < 1e-9, "a={a}: {x}");
        }
    }

    #[test]
    fn refuses_wide_angles() {
        let t = BCFrame::new(0.5, 2.0, 2.0).unwrap().triangle().unwrap();
        assert!(matches!(fermat_brute_force_oracle(&t, 100), Err(GeomError::AngleTooLarge { .. })));
    }

    #[test]
    fn exactly_120_degrees_lands_on_vertex() {
        let t = Triangle::new(p(0.0, 0.0), p(1.0, 0.0), Point::from_polar(1.0, 2.0 * FRAC_PI_3)).unwrap();
        let x = fermat_brute_force_oracle(&t, 500).unwrap();
        assert!(x.norm() < 1e-7, "{x}");
    }
}
