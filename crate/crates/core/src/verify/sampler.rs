use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::Point;
use crate::triangle::Triangle;

/// Smallest angle any sampler will produce, in radians.
pub const DEFAULT_MIN_ANGLE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplerShape {
    Uniform,
    Obtuse,
    NearEquilateral,
    NearDegenerate,
}

impl SamplerShape {
    pub const ALL: [SamplerShape; 4] = [
        SamplerShape::Uniform,
        SamplerShape::Obtuse,
        SamplerShape::NearEquilateral,
        SamplerShape::NearDegenerate,
    ];

    fn tag(self) -> u8 {
        match self {
            SamplerShape::Uniform => 1,
            SamplerShape::Obtuse => 2,
            SamplerShape::NearEquilateral => 3,
            SamplerShape::NearDegenerate => 4,
        }
    }
}

/// Seeded triangle generator. Sample `i` depends only on `(seed, shape, i)`,
/// so batches can be drawn in any order or in parallel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleSampler {
    pub seed: u64,
    pub min_angle: f64,
    pub shape: SamplerShape,
}

impl TriangleSampler {
    pub fn new(seed: u64, shape: SamplerShape) -> Self {
        Self {
            seed,
            min_angle: DEFAULT_MIN_ANGLE,
            shape,
        }
    }

    pub fn with_min_angle(mut self, min_angle: f64) -> Result<Self> {
        if !(min_angle > 0.0 && min_angle < 0.1) {
            return Err(GeomError::InvalidArgument(format!(
                "min_angle must lie in (0, 0.1), got {min_angle}"
            )));
        }
        self.min_angle = min_angle;
        Ok(self)
    }

    fn rng(&self, index: u64) -> ChaCha20Rng {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&self.seed.to_le_bytes());
        key[8] = self.shape.tag();
        let mut rng = ChaCha20Rng::from_seed(key);
        rng.set_stream(index);
        rng
    }

    pub fn sample(&self, index: u64) -> Triangle {
        let mut rng = self.rng(index);
        loop {
            let angles = match self.shape {
                SamplerShape::Uniform => self.uniform_angles(&mut rng),
                SamplerShape::Obtuse => self.obtuse_angles(&mut rng),
                SamplerShape::NearEquilateral => near_equilateral_angles(&mut rng),
                SamplerShape::NearDegenerate => self.near_degenerate_angles(&mut rng),
            };
            let Some(angles) = angles else { continue };
            if let Ok(t) = place(angles, &mut rng) {
                return t;
            }
        }
    }

    pub fn iter(&self, count: u64) -> impl Iterator<Item = Triangle> + '_ {
        (0..count).map(move |i| self.sample(i))
    }

    /// Vertices uniform in the unit square, rejected below the angle floor.
    fn uniform_angles(&self, rng: &mut ChaCha20Rng) -> Option<[f64; 3]> {
        let mut v = [Point::new(0.0, 0.0); 3];
        for p in &mut v {
            *p = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let t = Triangle::from_array(v).ok()?;
        (t.min_angle() >= self.min_angle).then(|| t.angles())
    }

    fn obtuse_angles(&self, rng: &mut ChaCha20Rng) -> Option<[f64; 3]> {
        let m = self.min_angle;
        let big = rng.gen_range(FRAC_PI_2 + 1e-6..PI - 2.0 * m);
        let rest = PI - big;
        if rest < 2.0 * m {
            return None;
        }
        let a = rng.gen_range(m..=rest - m);
        Some(shuffle([big, a, rest - a], rng))
    }

    fn near_degenerate_angles(&self, rng: &mut ChaCha20Rng) -> Option<[f64; 3]> {
        let lo = self.min_angle.log10();
        let small = |rng: &mut ChaCha20Rng| 10f64.powf(rng.gen_range(lo..-2.0));
        let s1 = small(rng);
        let angles = if rng.gen_bool(0.5) {
            let s2 = small(rng);
            [s1, s2, PI - s1 - s2]
        } else {
            let rest = PI - s1;
            let a = rng.gen_range(s1..=rest - s1);
            [s1, a, rest - a]
        };
        Some(shuffle(angles, rng))
    }
}

/// Angles `π/3 + δ·e` with `δ ∈ [10⁻⁴, 10⁻²]` log-uniform.
fn near_equilateral_angles(rng: &mut ChaCha20Rng) -> Option<[f64; 3]> {
    let delta = 10f64.powf(rng.gen_range(-4.0..-2.0));
    let e1: f64 = rng.gen_range(-1.0..1.0);
    let e2: f64 = rng.gen_range(-1.0..1.0);
    if e1.abs().max(e2.abs()) < 0.1 {
        return None;
    }
    Some([FRAC_PI_3 + delta * e1, FRAC_PI_3 + delta * e2, FRAC_PI_3 - delta * (e1 + e2)])
}

fn shuffle(mut a: [f64; 3], rng: &mut ChaCha20Rng) -> [f64; 3] {
    for i in (1..3).rev() {
        a.swap(i, rng.gen_range(0..=i));
    }
    a
}

/// Triangle with the given angles under a random similarity, possibly
/// reflected.
fn place(angles: [f64; 3], rng: &mut ChaCha20Rng) -> Result<Triangle> {
    let [a, b, c] = angles;
    let base = [
        Point::new(0.0, 0.0),
        Point::new(c.sin(), 0.0),
        Point::from_polar(b.sin(), a),
    ];
    let scale = 10f64.powf(rng.gen_range(-2.0..2.0));
    let phi = rng.gen_range(0.0..TAU);
    let (s, co) = phi.sin_cos();
    let shift = Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)) * scale;
    let flip = if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
    let map = |p: Point| {
        let q = Point::new(p.x, flip * p.y) * scale;
        Point::new(co * q.x - s * q.y, s * q.x + co * q.y) + shift
    };
    Triangle::from_array(base.map(map))
}
