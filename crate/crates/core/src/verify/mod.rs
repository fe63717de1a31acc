//! Scalar identities and position inequalities, checked numerically on
//! individual triangles and on seeded random batches.

mod oracle;
mod sampler;
mod suite;

pub use oracle::fermat_brute_force_oracle;
pub use sampler::{SamplerShape, TriangleSampler, DEFAULT_MIN_ANGLE};
pub use suite::{
    isosceles_sample, run_suite, sample_triangle, CheckResult, Counterexample, IdentityResult, SampleCounts, SampleRef,
    SampleSource, SuiteConfig, SuiteReport, SuiteTolerances,
};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{distance, Point, Tolerance};
use crate::triangle::{angle_cosines, is_equilateral, BCFrame, CenterSet, Triangle};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// `ρ = OI`, `σ = IN`, `κ = OH`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GuinandScalars {
    pub rho: f64,
    pub sigma: f64,
    pub kappa: f64,
}

impl GuinandScalars {
    pub fn from_centers(cs: &CenterSet) -> Self {
        Self {
            rho: distance(cs.circumcenter, cs.incenter),
            sigma: distance(cs.incenter, cs.nine_point),
            kappa: distance(cs.circumcenter, cs.orthocenter),
        }
    }

    /// Fourth power of the largest of the three lengths.
    pub fn scale4(&self) -> f64 {
        self.rho.max(self.sigma).max(self.kappa).powi(4)
    }

    /// `ρ⁴(1 − 2x)³ + 8ρ²σ²x(3 − 2x) − 16σ⁴x − 4σ²κ²(1 − x)`
    pub fn cubic(&self, x: f64) -> f64 {
        let (r2, s2, k2) = (self.rho * self.rho, self.sigma * self.sigma, self.kappa * self.kappa);
        let w = 1.0 - 2.0 * x;
        r2 * r2 * w * w * w + 8.0 * r2 * s2 * x * (3.0 - 2.0 * x) - 16.0 * s2 * s2 * x - 4.0 * s2 * k2 * (1.0 - x)
    }
}

fn non_equilateral(t: &Triangle) -> Result<CenterSet> {
    if is_equilateral(t) {
        return Err(GeomError::EquilateralDegenerate);
    }
    Ok(CenterSet::compute(t))
}

/// The cubic evaluated at the three angle cosines (raw values).
pub fn guinand_cubic_residuals(t: &Triangle) -> Result<[f64; 3]> {
    let cs = non_equilateral(t)?;
    let g = GuinandScalars::from_centers(&cs);
    Ok(angle_cosines(t).map(|x| g.cubic(x)))
}

/// `OH² − R²(1 − 8 cos A cos B cos C)`.
pub fn oh_squared_identity(t: &Triangle) -> f64 {
    let cs = CenterSet::compute(t);
    let p: f64 = angle_cosines(t).iter().product();
    let r2 = cs.circumradius * cs.circumradius;
    (cs.orthocenter - cs.circumcenter).norm_sq() - r2 * (1.0 - 8.0 * p)
}

/// `OI² − R(R − 2r)`.
pub fn euler_relation(t: &Triangle) -> f64 {
    let cs = CenterSet::compute(t);
    let (big_r, r) = (cs.circumradius, cs.inradius);
    (cs.incenter - cs.circumcenter).norm_sq() - big_r * (big_r - 2.0 * r)
}

/// `IN − (R/2 − r)`.
pub fn feuerbach_relation(t: &Triangle) -> f64 {
    let cs = CenterSet::compute(t);
    distance(cs.incenter, cs.nine_point) - (0.5 * cs.circumradius - cs.inradius)
}

/// `(OI² − 4IN² − 2r(R − 2r), OI² − 4IN² − (2r/R)·OI²)`.
pub fn euler_feuerbach_combination(t: &Triangle) -> Result<(f64, f64)> {
    let cs = non_equilateral(t)?;
    let (big_r, r) = (cs.circumradius, cs.inradius);
    let oi2 = (cs.incenter - cs.circumcenter).norm_sq();
    let diff = oi2 - 4.0 * (cs.incenter - cs.nine_point).norm_sq();
    Ok((diff - 2.0 * r * (big_r - 2.0 * r), diff - 2.0 * r / big_r * oi2))
}

/// `OI² − 4 IN²`, positive for every non-equilateral triangle.
pub fn oi_minus_four_in(t: &Triangle) -> Result<f64> {
    let cs = non_equilateral(t)?;
    Ok((cs.incenter - cs.circumcenter).norm_sq() - 4.0 * (cs.incenter - cs.nine_point).norm_sq())
}

/// `ρ⁴(1 − 8 cos A cos B cos C) − 4σ²κ²`.
pub fn viete_relation(t: &Triangle) -> Result<f64> {
    let cs = non_equilateral(t)?;
    let g = GuinandScalars::from_centers(&cs);
    let p: f64 = angle_cosines(t).iter().product();
    Ok(g.rho.powi(4) * (1.0 - 8.0 * p) - 4.0 * g.sigma.powi(2) * g.kappa.powi(2))
}

/// `OP > 2 PN` compared on squares, with no tolerance.
fn strictly_inside(p: Point, o: Point, n: Point) -> bool {
    (p - o).norm_sq() > 4.0 * (p - n).norm_sq()
}

/// Incenter inside and all three excenters outside the orthocentroidal
/// circle.
pub fn incenter_position_check(t: &Triangle) -> Result<bool> {
    let cs = non_equilateral(t)?;
    let (o, n) = (cs.circumcenter, cs.nine_point);
    Ok(strictly_inside(cs.incenter, o, n) && cs.excenters.iter().all(|&e| (e - o).norm_sq() < 4.0 * (e - n).norm_sq()))
}

/// `OT² > 4 NT²`.
pub fn fermat_position_check(t: &Triangle) -> Result<bool> {
    let cs = non_equilateral(t)?;
    Ok(strictly_inside(cs.fermat, cs.circumcenter, cs.nine_point))
}

fn frame_is_equilateral(f: &BCFrame) -> bool {
    let tol = Tolerance::current();
    let (a, b, c) = (f.a, f.b, f.c);
    tol.is_zero(a * a - 3.0 * b * c, a * a) && tol.close(b, c)
}

/// The five terms of `a d u (c − b) + d v (a² + 3bc) − a b c d² − 3 a u² − 3 a v²`.
fn fermat_lhs_terms(f: &BCFrame) -> [f64; 5] {
    let (a, b, c) = (f.a, f.b, f.c);
    let (u, v, d) = f.fermat_uvd();
    [
        a * d * u * (c - b),
        d * v * (a * a + 3.0 * b * c),
        -a * b * c * d * d,
        -3.0 * a * u * u,
        -3.0 * a * v * v,
    ]
}

/// Float evaluation of the degree-7 left-hand side.
pub fn fermat_lhs_value(f: &BCFrame) -> Result<f64> {
    if frame_is_equilateral(f) {
        return Err(GeomError::EquilateralDegenerate);
    }
    Ok(fermat_lhs_terms(f).iter().sum())
}

/// Largest absolute term of the left-hand side; the natural scale for its
/// rounding error.
pub fn fermat_lhs_scale(f: &BCFrame) -> f64 {
    fermat_lhs_terms(f).iter().fold(0.0, |m, t| m.max(t.abs()))
}

/// `a⁴ + a²b² − 8a²bc + a²c² + 9b²c²`
pub fn fermat_quartic(f: &BCFrame) -> f64 {
    let (a, b, c) = (f.a, f.b, f.c);
    let a2 = a * a;
    a2 * a2 + a2 * b * b - 8.0 * a2 * b * c + a2 * c * c + 9.0 * b * b * c * c
}

/// `2(b + c)(√3a² + √3b² + √3c² + √3bc + 3ab + 3ac)(quartic)`.
pub fn fermat_lhs_factored(f: &BCFrame) -> f64 {
    let (a, b, c) = (f.a, f.b, f.c);
    let quad = SQRT3 * (a * a + b * b + c * c + b * c) + 3.0 * a * b + 3.0 * a * c;
    2.0 * (b + c) * quad * fermat_quartic(f)
}

/// Position `t` of the Fermat point on the Euler line `(1 − t)G + tH` for
/// the isosceles frame triangle `(0, a), (−b, 0), (b, 0)`.
pub fn isosceles_fermat_parameter(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(GeomError::InvalidArgument(format!(
            "isosceles parameters must be positive, got a={a}, b={b}"
        )));
    }
    if Tolerance::current().close(a, SQRT3 * b) {
        return Err(GeomError::Midpoint);
    }
    Ok(a / (a + SQRT3 * b))
}

/// All scaled residuals for one triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledResiduals {
    pub euler: f64,
    pub feuerbach: f64,
    pub guinand_cubic: [f64; 3],
    pub oh_squared: f64,
    pub viete: f64,
    pub euler_feuerbach: (f64, f64),
}

impl ScaledResiduals {
    pub fn compute(t: &Triangle) -> Result<Self> {
        let cs = non_equilateral(t)?;
        let g = GuinandScalars::from_centers(&cs);
        let (big_r, r) = (cs.circumradius, cs.inradius);
        let r2 = big_r * big_r;
        let cos = angle_cosines(t);
        let p: f64 = cos.iter().product();
        let oi2 = g.rho * g.rho;
        let in2 = g.sigma * g.sigma;
        let diff = oi2 - 4.0 * in2;
        let s4 = g.scale4();
        Ok(Self {
            euler: (oi2 - big_r * (big_r - 2.0 * r)).abs() / r2,
            feuerbach: (g.sigma - (0.5 * big_r - r)).abs() / big_r,
            guinand_cubic: cos.map(|x| g.cubic(x).abs() / s4),
            oh_squared: (g.kappa * g.kappa - r2 * (1.0 - 8.0 * p)).abs() / r2,
            viete: (oi2 * oi2 * (1.0 - 8.0 * p) - 4.0 * in2 * g.kappa * g.kappa).abs() / s4,
            euler_feuerbach: (
                (diff - 2.0 * r * (big_r - 2.0 * r)).abs() / r2,
                (diff - 2.0 * r / big_r * oi2).abs() / r2,
            ),
        })
    }

    pub fn max(&self) -> f64 {
        [
            self.euler,
            self.feuerbach,
            self.guinand_cubic[0],
            self.guinand_cubic[1],
            self.guinand_cubic[2],
            self.oh_squared,
            self.viete,
            self.euler_feuerbach.0,
            self.euler_feuerbach.1,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::{centroid, fermat_point_synthetic, orthocenter};
    use approx::assert_relative_eq;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn right_345() -> Triangle {
        Triangle::new(p(0.0, 0.0), p(3.0, 0.0), p(0.0, 4.0)).unwrap()
    }

    fn equilateral() -> Triangle {
        Triangle::new(p(-1.0, 0.0), p(1.0, 0.0), p(0.0, SQRT3)).unwrap()
    }

    fn from_angles_deg(a: f64, b: f64) -> Triangle {
        let (ra, rb) = (a.to_radians(), b.to_radians());
        let rc = std::f64::consts::PI - ra - rb;
        // law of sines with AB = sin C along the x-axis
        Triangle::new(p(0.0, 0.0), p(rc.sin(), 0.0), Point::from_polar(rb.sin(), ra)).unwrap()
    }

    #[test]
    fn cubic_vanishes_on_345() {
        let res = guinand_cubic_residuals(&right_345()).unwrap();
        let s4 = GuinandScalars::from_centers(&CenterSet::compute(&right_345())).scale4();
        for r in res {
            assert!(r.abs() <= 1e-12 * s4, "{r}");
        }
    }

    #[test]
    fn cubic_at_zero_cosine_gives_rho_squared_two_sigma_kappa() {
        let g = GuinandScalars::from_centers(&CenterSet::compute(&right_345()));
        assert_relative_eq!(g.rho * g.rho, 2.0 * g.sigma * g.kappa, max_relative = 1e-12);
        assert_relative_eq!(g.cubic(0.0), g.rho.powi(4) - 4.0 * (g.sigma * g.kappa).powi(2), epsilon = 1e-12);
    }

    #[test]
    fn cubic_on_isosceles_frame() {
        let t = BCFrame::new(4.0, 1.0, 1.0).unwrap().triangle().unwrap();
        let s = ScaledResiduals::compute(&t).unwrap();
        assert!(s.guinand_cubic.iter().all(|r| *r < 1e-12));
    }

    #[test]
    fn oh_squared_examples() {
        // right triangle: OH = R
        let cs = CenterSet::compute(&right_345());
        assert_relative_eq!(distance(cs.circumcenter, cs.orthocenter), 2.5, max_relative = 1e-14);
        assert!(oh_squared_identity(&right_345()).abs() < 1e-13);
        assert!(oh_squared_identity(&equilateral()).abs() < 1e-13);
    }

    #[test]
    fn euler_feuerbach_on_345() {
        let (x, y) = euler_feuerbach_combination(&right_345()).unwrap();
        assert!(x.abs() < 1e-13 && y.abs() < 1e-13);
        assert_relative_eq!(oi_minus_four_in(&right_345()).unwrap(), 1.0, max_relative = 1e-13);
        assert!(euler_relation(&right_345()).abs() < 1e-13);
        assert!(feuerbach_relation(&right_345()).abs() < 1e-14);
    }

    #[test]
    fn combination_shrinks_but_stays_positive_near_equilateral() {
        let mut prev = f64::INFINITY;
        for k in 1..6 {
            let eps = 10f64.powi(-k);
            let t = Triangle::new(p(-1.0, 0.0), p(1.0, 0.0), p(eps, SQRT3)).unwrap();
            let v = oi_minus_four_in(&t).unwrap();
            assert!(v > 0.0 && v < prev, "eps={eps}: {v}");
            prev = v;
        }
    }

    #[test]
    fn obtuse_combination_positive() {
        let t = from_angles_deg(150.0, 20.0);
        assert!(oi_minus_four_in(&t).unwrap() > 0.0);
    }

    #[test]
    fn equilateral_is_refused() {
        let t = equilateral();
        assert_eq!(guinand_cubic_residuals(&t), Err(GeomError::EquilateralDegenerate));
        assert_eq!(viete_relation(&t), Err(GeomError::EquilateralDegenerate));
        assert_eq!(incenter_position_check(&t), Err(GeomError::EquilateralDegenerate));
        assert_eq!(fermat_position_check(&t), Err(GeomError::EquilateralDegenerate));
        assert_eq!(euler_feuerbach_combination(&t), Err(GeomError::EquilateralDegenerate));
    }

    #[test]
    fn viete_examples() {
        let t = right_345();
        let g = GuinandScalars::from_centers(&CenterSet::compute(&t));
        assert!(viete_relation(&t).unwrap().abs() <= 1e-12 * g.scale4());
        let t = from_angles_deg(130.0, 35.0);
        let g = GuinandScalars::from_centers(&CenterSet::compute(&t));
        assert!(viete_relation(&t).unwrap().abs() <= 1e-12 * g.scale4());
    }

    #[test]
    fn position_checks() {
        assert!(incenter_position_check(&right_345()).unwrap());
        assert!(incenter_position_check(&from_angles_deg(178.0, 1.0)).unwrap());
        let near = Triangle::new(p(-1.0, 0.0), p(1.0, 0.0), p(1e-3, SQRT3)).unwrap();
        assert!(incenter_position_check(&near).unwrap());
        assert!(fermat_position_check(&near).unwrap());
    }

    #[test]
    fn fermat_inside_for_isosceles_4_1_1() {
        let f = BCFrame::new(4.0, 1.0, 1.0).unwrap();
        let t = f.triangle().unwrap();
        let cs = CenterSet::compute(&t);
        assert!(distance(cs.fermat, p(0.0, 1.0 / SQRT3)) < 1e-14);
        assert!(distance(cs.circumcenter, p(0.0, 1.875)) < 1e-14);
        assert!(distance(cs.nine_point, p(0.0, 17.0 / 16.0)) < 1e-14);
        // OT = 1.875 - 0.5774 = 1.2976, NT = 1.0625 - 0.5774 = 0.4851
        assert!(fermat_position_check(&t).unwrap());
    }

    #[test]
    fn fermat_inside_beyond_120_degrees() {
        let t = BCFrame::new(0.5, 2.0, 2.0).unwrap().triangle().unwrap();
        assert!(t.max_angle() > 2.0 * std::f64::consts::FRAC_PI_3);
        assert!(fermat_position_check(&t).unwrap());
    }

    #[test]
    fn lhs_examples() {
        let f = BCFrame::new(4.0, 1.0, 2.0).unwrap();
        let v = fermat_lhs_value(&f).unwrap();
        assert!(v > 0.0);
        assert_relative_eq!(v, fermat_lhs_factored(&f), max_relative = 1e-12);

        let f = BCFrame::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(fermat_quartic(&f), 4.0);
        assert!(fermat_lhs_value(&f).unwrap() > 0.0);

        let f = BCFrame::new(SQRT3, 1.0, 1.0).unwrap();
        assert!(fermat_quartic(&f).abs() < 1e-14);
        assert_eq!(fermat_lhs_value(&f), Err(GeomError::EquilateralDegenerate));
    }

    #[test]
    fn lhs_scales_with_degree_seven() {
        let f = BCFrame::new(1.3, 0.4, 2.2).unwrap();
        let v = fermat_lhs_value(&f).unwrap();
        for lambda in [0.01, 0.5, 3.0, 100.0] {
            let g = BCFrame::new(f.a * lambda, f.b * lambda, f.c * lambda).unwrap();
            assert_relative_eq!(fermat_lhs_value(&g).unwrap(), v * lambda.powi(7), max_relative = 1e-12);
        }
    }

    #[test]
    fn isosceles_parameter_examples() {
        assert_eq!(isosceles_fermat_parameter(SQRT3, 1.0), Err(GeomError::Midpoint));
        let t = isosceles_fermat_parameter(1.0, 1.0).unwrap();
        assert_relative_eq!(t, 1.0 / (1.0 + SQRT3), max_relative = 1e-15);
        assert!((t - 0.36603).abs() < 1e-5);
        assert!(isosceles_fermat_parameter(1e-12, 1.0).unwrap() < 1e-11);
        // T on the Euler line at parameter t
        let tri = BCFrame::new(1.0, 1.0, 1.0).unwrap().triangle().unwrap();
        let on_line = centroid(&tri).lerp(orthocenter(&tri), t);
        assert!(distance(on_line, fermat_point_synthetic(&tri)) < 1e-14);
    }
}
