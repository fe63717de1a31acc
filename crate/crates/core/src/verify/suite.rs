use std::f64::consts::FRAC_PI_3;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sampler::{SamplerShape, TriangleSampler, DEFAULT_MIN_ANGLE};
use super::{
    fermat_brute_force_oracle, fermat_lhs_factored, fermat_lhs_scale, fermat_lhs_value, fermat_quartic,
    fermat_position_check, incenter_position_check, isosceles_fermat_parameter, oi_minus_four_in, ScaledResiduals,
};
use crate::error::{GeomError, Result};
use crate::geom::{distance, Point};
use crate::triangle::{
    centroid, fermat_point_closed_form, fermat_point_synthetic, is_equilateral, orthocenter, to_bc_frame, BCFrame,
    Triangle,
};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteTolerances {
    /// Scaled residual bound for the scalar identities.
    pub identity: f64,
    /// Relative agreement between two evaluations of the same quantity.
    pub agreement: f64,
    /// Oracle versus construction, relative to the triangle diameter.
    pub oracle: f64,
    /// Closest the isosceles parameter may come to one half.
    pub midpoint_gap: f64,
}

impl Default for SuiteTolerances {
    fn default() -> Self {
        Self {
            identity: 1e-8,
            agreement: 1e-9,
            oracle: 1e-7,
            midpoint_gap: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SampleCounts {
    pub uniform: u64,
    pub obtuse: u64,
    pub near_equilateral: u64,
    pub near_degenerate: u64,
    pub isosceles: u64,
}

impl Default for SampleCounts {
    fn default() -> Self {
        Self::split(100_000)
    }
}

impl SampleCounts {
    /// Split a total across the samplers; isosceles frames come on top.
    pub fn split(total: u64) -> Self {
        let uniform = total * 2 / 5;
        let obtuse = total * 3 / 10;
        let near_equilateral = total / 5;
        Self {
            uniform,
            obtuse,
            near_equilateral,
            near_degenerate: total - uniform - obtuse - near_equilateral,
            isosceles: (total / 10).max(1),
        }
    }

    pub fn of(&self, shape: SamplerShape) -> u64 {
        match shape {
            SamplerShape::Uniform => self.uniform,
            SamplerShape::Obtuse => self.obtuse,
            SamplerShape::NearEquilateral => self.near_equilateral,
            SamplerShape::NearDegenerate => self.near_degenerate,
        }
    }

    pub fn triangles(&self) -> u64 {
        SamplerShape::ALL.iter().map(|&s| self.of(s)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: SampleCounts,
    pub min_angle: f64,
    pub oracle_iterations: usize,
    pub tolerances: SuiteTolerances,
    pub max_counterexamples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: SampleCounts::default(),
            min_angle: DEFAULT_MIN_ANGLE,
            oracle_iterations: 200,
            tolerances: SuiteTolerances::default(),
            max_counterexamples: 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleSource {
    Uniform,
    Obtuse,
    NearEquilateral,
    NearDegenerate,
    Isosceles,
}

impl From<SamplerShape> for SampleSource {
    fn from(s: SamplerShape) -> Self {
        match s {
            SamplerShape::Uniform => SampleSource::Uniform,
            SamplerShape::Obtuse => SampleSource::Obtuse,
            SamplerShape::NearEquilateral => SampleSource::NearEquilateral,
            SamplerShape::NearDegenerate => SampleSource::NearDegenerate,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SampleRef {
    pub source: SampleSource,
    pub index: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub sample: SampleRef,
    pub vertices: [Point; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub tolerance: f64,
    pub samples: u64,
    pub max_residual: f64,
    pub worst_sample: Option<SampleRef>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub samples: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub min_angle: f64,
    pub tolerances: SuiteTolerances,
    pub samples: SampleCounts,
    pub samples_total: u64,
    pub skipped_equilateral: u64,
    pub identities: Vec<IdentityResult>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn identity(&self, name: &str) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| r.name == name)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|r| r.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tol {
    Identity,
    Agreement,
    Oracle,
}

const IDENTITIES: [(&str, Tol); 11] = [
    ("euler_relation", Tol::Identity),
    ("feuerbach", Tol::Identity),
    ("guinand_cubic", Tol::Identity),
    ("oh_squared", Tol::Identity),
    ("viete", Tol::Identity),
    ("euler_feuerbach_combination", Tol::Identity),
    ("fermat_closed_form", Tol::Agreement),
    ("fermat_lhs_factorization", Tol::Agreement),
    ("sum_of_squares", Tol::Agreement),
    ("fermat_oracle", Tol::Oracle),
    ("isosceles_on_euler_line", Tol::Agreement),
];

const CHECKS: [&str; 6] = [
    "incenter_position",
    "fermat_position",
    "oi_minus_four_in_positive",
    "fermat_lhs_positive",
    "isosceles_not_midpoint",
    "evaluation_errors",
];

#[derive(Clone, Copy)]
struct MaxAcc {
    samples: u64,
    value: f64,
    at: Option<SampleRef>,
}

impl MaxAcc {
    const EMPTY: MaxAcc = MaxAcc {
        samples: 0,
        value: 0.0,
        at: None,
    };

    fn push(&mut self, value: f64, at: SampleRef) {
        let value = if value.is_nan() { f64::INFINITY } else { value };
        self.merge(MaxAcc {
            samples: 1,
            value,
            at: Some(at),
        });
    }

    fn merge(&mut self, o: MaxAcc) {
        self.samples += o.samples;
        let take = match (self.at, o.at) {
            (_, None) => false,
            (None, Some(_)) => true,
            (Some(a), Some(b)) => o.value > self.value || (o.value == self.value && b < a),
        };
        if take {
            self.value = o.value;
            self.at = o.at;
        }
    }
}

#[derive(Clone, Default)]
struct CheckAcc {
    samples: u64,
    failures: u64,
    kept: Vec<Counterexample>,
}

impl CheckAcc {
    fn push(&mut self, ok: bool, at: SampleRef, t: &Triangle, keep: usize) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            self.kept.push(Counterexample {
                sample: at,
                vertices: t.vertices(),
            });
            self.trim(keep);
        }
    }

    fn trim(&mut self, keep: usize) {
        self.kept.sort_by_key(|c| c.sample);
        self.kept.truncate(keep);
    }

    fn merge(&mut self, o: CheckAcc, keep: usize) {
        self.samples += o.samples;
        self.failures += o.failures;
        self.kept.extend(o.kept);
        self.trim(keep);
    }
}

#[derive(Clone)]
struct Acc {
    identities: [MaxAcc; IDENTITIES.len()],
    checks: [CheckAcc; CHECKS.len()],
    skipped: u64,
}

impl Acc {
    fn new() -> Self {
        Self {
            identities: [MaxAcc::EMPTY; IDENTITIES.len()],
            checks: Default::default(),
            skipped: 0,
        }
    }

    fn merge(mut self, o: Acc, keep: usize) -> Acc {
        for (a, b) in self.identities.iter_mut().zip(o.identities) {
            a.merge(b);
        }
        for (a, b) in self.checks.iter_mut().zip(o.checks) {
            a.merge(b, keep);
        }
        self.skipped += o.skipped;
        self
    }
}

/// Isosceles frame `(a, b, b)` with `b` log-uniform in `[0.1, 10]` and
/// `a/(√3 b)` log-uniform in `[10⁻², 10²]`.
pub fn isosceles_sample(seed: u64, index: u64) -> (f64, f64) {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8] = 5;
    let mut rng = ChaCha20Rng::from_seed(key);
    rng.set_stream(index);
    let b = 10f64.powf(rng.gen_range(-1.0..1.0));
    let a = SQRT3 * b * 10f64.powf(rng.gen_range(-2.0..2.0));
    (a, b)
}

/// Regenerate the triangle behind a report entry.
pub fn sample_triangle(cfg: &SuiteConfig, at: SampleRef) -> Result<Triangle> {
    let shape = match at.source {
        SampleSource::Uniform => SamplerShape::Uniform,
        SampleSource::Obtuse => SamplerShape::Obtuse,
        SampleSource::NearEquilateral => SamplerShape::NearEquilateral,
        SampleSource::NearDegenerate => SamplerShape::NearDegenerate,
        SampleSource::Isosceles => {
            let (a, b) = isosceles_sample(cfg.seed, at.index);
            return BCFrame::new(a, b, b)?.triangle();
        }
    };
    Ok(TriangleSampler::new(cfg.seed, shape).with_min_angle(cfg.min_angle)?.sample(at.index))
}

struct Evaluator<'a> {
    cfg: &'a SuiteConfig,
}

impl Evaluator<'_> {
    fn keep(&self) -> usize {
        self.cfg.max_counterexamples
    }

    fn triangle(&self, acc: &mut Acc, at: SampleRef, t: &Triangle) {
        if is_equilateral(t) {
            acc.skipped += 1;
            return;
        }
        let keep = self.keep();
        let ok = self.triangle_inner(acc, at, t).is_ok();
        acc.checks[5].push(ok, at, t, keep);
    }

    fn triangle_inner(&self, acc: &mut Acc, at: SampleRef, t: &Triangle) -> Result<()> {
        let keep = self.keep();
        let s = ScaledResiduals::compute(t)?;
        let id = &mut acc.identities;
        id[0].push(s.euler, at);
        id[1].push(s.feuerbach, at);
        id[2].push(s.guinand_cubic.into_iter().fold(0.0, f64::max), at);
        id[3].push(s.oh_squared, at);
        id[4].push(s.viete, at);
        id[5].push(s.euler_feuerbach.0.max(s.euler_feuerbach.1), at);

        let diam = t.diameter();
        let synthetic = fermat_point_synthetic(t);
        let (frame, placement) = to_bc_frame(t);
        let closed = placement.from_frame(fermat_point_closed_form(&frame));
        id[6].push(distance(synthetic, closed) / diam, at);

        let lhs = fermat_lhs_value(&frame)?;
        id[7].push((lhs - fermat_lhs_factored(&frame)).abs() / fermat_lhs_scale(&frame), at);
        id[8].push(sum_of_squares_gap(&frame), at);

        if t.max_angle() <= 2.0 * FRAC_PI_3 {
            let x = fermat_brute_force_oracle(t, self.cfg.oracle_iterations)?;
            id[9].push(distance(x, synthetic) / diam, at);
        }

        acc.checks[0].push(incenter_position_check(t)?, at, t, keep);
        acc.checks[1].push(fermat_position_check(t)?, at, t, keep);
        acc.checks[2].push(oi_minus_four_in(t)? > 0.0, at, t, keep);
        acc.checks[3].push(lhs > 0.0, at, t, keep);
        Ok(())
    }

    fn isosceles(&self, acc: &mut Acc, index: u64) {
        let at = SampleRef {
            source: SampleSource::Isosceles,
            index,
        };
        let (a, b) = isosceles_sample(self.cfg.seed, index);
        let Ok(t) = BCFrame::new(a, b, b).and_then(|f| f.triangle()) else {
            return;
        };
        let keep = self.keep();
        let outcome = isosceles_fermat_parameter(a, b).map(|tp| {
            let on_line = centroid(&t).lerp(orthocenter(&t), tp);
            let gap = distance(on_line, fermat_point_synthetic(&t)) / t.diameter();
            acc.identities[10].push(gap, at);
            (tp - 0.5).abs() > self.cfg.tolerances.midpoint_gap && tp > 0.0 && tp < 1.0
        });
        let ok = match outcome {
            Ok(ok) => ok,
            Err(GeomError::Midpoint) => false,
            Err(_) => false,
        };
        acc.checks[4].push(ok, at, &t, keep);
    }
}

fn sum_of_squares_gap(f: &BCFrame) -> f64 {
    let (a, b, c) = (f.a, f.b, f.c);
    let p = a * a - 3.0 * b * c;
    let q = a * (b - c);
    let scale = (a * a + b * b + c * c).powi(2);
    (fermat_quartic(f) - (p * p + q * q)).abs() / scale
}

#[derive(Clone, Copy)]
enum Task {
    Sampler(SamplerShape, u64),
    Isosceles(u64),
}

/// Run every identity and check over the configured batch. The report is a
/// pure function of the configuration.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let samplers: Vec<TriangleSampler> = SamplerShape::ALL
        .iter()
        .map(|&s| TriangleSampler::new(cfg.seed, s).with_min_angle(cfg.min_angle))
        .collect::<Result<_>>()?;
    let tasks: Vec<Task> = SamplerShape::ALL
        .iter()
        .flat_map(|&s| (0..cfg.samples.of(s)).map(move |i| Task::Sampler(s, i)))
        .chain((0..cfg.samples.isosceles).map(Task::Isosceles))
        .collect();

    let ev = Evaluator { cfg };
    let keep = cfg.max_counterexamples;
    let acc = tasks
        .par_iter()
        .fold(Acc::new, |mut acc, task| {
            match *task {
                Task::Sampler(shape, i) => {
                    let t = samplers[shape as usize].sample(i);
                    let at = SampleRef {
                        source: shape.into(),
                        index: i,
                    };
                    ev.triangle(&mut acc, at, &t);
                }
                Task::Isosceles(i) => ev.isosceles(&mut acc, i),
            }
            acc
        })
        .reduce(Acc::new, |a, b| a.merge(b, keep));

    let tols = cfg.tolerances;
    let identities: Vec<IdentityResult> = IDENTITIES
        .iter()
        .zip(acc.identities)
        .map(|(&(name, kind), m)| {
            let tolerance = match kind {
                Tol::Identity => tols.identity,
                Tol::Agreement => tols.agreement,
                Tol::Oracle => tols.oracle,
            };
            IdentityResult {
                name: name.to_string(),
                tolerance,
                samples: m.samples,
                max_residual: m.value,
                worst_sample: m.at,
                passed: m.value <= tolerance,
            }
        })
        .collect();
    let checks: Vec<CheckResult> = CHECKS
        .iter()
        .zip(acc.checks)
        .map(|(&name, c)| CheckResult {
            name: name.to_string(),
            samples: c.samples,
            counterexample_count: c.failures,
            counterexamples: c.kept,
            passed: c.failures == 0,
        })
        .collect();
    let passed = identities.iter().all(|r| r.passed) && checks.iter().all(|c| c.passed);
    Ok(SuiteReport {
        seed: cfg.seed,
        min_angle: cfg.min_angle,
        tolerances: tols,
        samples: cfg.samples,
        samples_total: tasks.len() as u64,
        skipped_equilateral: acc.skipped,
        identities,
        checks,
        passed,
    })
}
