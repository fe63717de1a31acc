use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::ParseError;
use crate::geom::Tolerance;
use crate::verify::{SampleCounts, SuiteConfig, TriangleSampler, SamplerShape};

pub const DEFAULT_PRECISION: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputSpec {
    pub format: OutputFormat,
    pub path: Option<PathBuf>,
    pub precision: u32,
}

impl OutputSpec {
    pub fn new(format: OutputFormat, path: Option<PathBuf>, precision: u32) -> Result<Self, ParseError> {
        check_precision(precision)?;
        Ok(Self { format, path, precision })
    }
}

fn check_precision(p: u32) -> Result<(), ParseError> {
    if (6..=17).contains(&p) {
        Ok(())
    } else {
        Err(ParseError::Config(format!("precision must lie in [6, 17], got {p}")))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ToleranceOverrides {
    pub absolute: Option<f64>,
    pub relative: Option<f64>,
    pub identity: Option<f64>,
    pub agreement: Option<f64>,
    pub oracle: Option<f64>,
}

/// Settings read from a TOML file. Every field is optional; command-line
/// flags are layered on top with [`RunConfig::overlay`].
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub min_angle: Option<f64>,
    pub radii: Option<Vec<f64>>,
    pub points: Option<usize>,
    pub precision: Option<u32>,
    pub tolerance: ToleranceOverrides,
}

fn positive(name: &str, v: Option<f64>) -> Result<(), ParseError> {
    match v {
        Some(x) if !(x.is_finite() && x > 0.0) => {
            Err(ParseError::Config(format!("{name} must be positive and finite, got {x}")))
        }
        _ => Ok(()),
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ParseError> {
        if let Some(p) = self.precision {
            check_precision(p)?;
        }
        if self.samples == Some(0) {
            return Err(ParseError::Config("samples must be positive".into()));
        }
        if let Some(n) = self.points {
            if n < 16 {
                return Err(ParseError::Config(format!("points must be at least 16, got {n}")));
            }
        }
        if let Some(radii) = &self.radii {
            if radii.is_empty() {
                return Err(ParseError::Config("radii must not be empty".into()));
            }
            if let Some(r) = radii.iter().find(|r| !(r.is_finite() && **r > 1.0)) {
                return Err(ParseError::Config(format!("every radius must exceed 1, got {r}")));
            }
        }
        if let Some(m) = self.min_angle {
            TriangleSampler::new(0, SamplerShape::Uniform)
                .with_min_angle(m)
                .map_err(|e| ParseError::Config(e.to_string()))?;
        }
        let t = &self.tolerance;
        positive("tolerance.absolute", t.absolute)?;
        positive("tolerance.relative", t.relative)?;
        positive("tolerance.identity", t.identity)?;
        positive("tolerance.agreement", t.agreement)?;
        positive("tolerance.oracle", t.oracle)?;
        for (name, v) in [("tolerance.absolute", t.absolute), ("tolerance.relative", t.relative)] {
            if v.is_some_and(|x| x > 1e-3) {
                return Err(ParseError::Config(format!("{name} must not exceed 1e-3")));
            }
        }
        self.geometry_tolerance()?;
        Ok(())
    }

    /// Fields set in `over` replace those in `self`.
    pub fn overlay(self, over: RunConfig) -> RunConfig {
        let t = over.tolerance;
        RunConfig {
            seed: over.seed.or(self.seed),
            samples: over.samples.or(self.samples),
            min_angle: over.min_angle.or(self.min_angle),
            radii: over.radii.or(self.radii),
            points: over.points.or(self.points),
            precision: over.precision.or(self.precision),
            tolerance: ToleranceOverrides {
                absolute: t.absolute.or(self.tolerance.absolute),
                relative: t.relative.or(self.tolerance.relative),
                identity: t.identity.or(self.tolerance.identity),
                agreement: t.agreement.or(self.tolerance.agreement),
                oracle: t.oracle.or(self.tolerance.oracle),
            },
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision.unwrap_or(DEFAULT_PRECISION)
    }

    pub fn geometry_tolerance(&self) -> Result<Tolerance, ParseError> {
        let d = Tolerance::DEFAULT;
        Tolerance::new(
            self.tolerance.absolute.unwrap_or(d.absolute_eps),
            self.tolerance.relative.unwrap_or(d.relative_eps),
        )
        .map_err(|e| ParseError::Config(e.to_string()))
    }

    pub fn suite_config(&self) -> SuiteConfig {
        let mut cfg = SuiteConfig::default();
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(n) = self.samples {
            cfg.samples = SampleCounts::split(n);
        }
        if let Some(m) = self.min_angle {
            cfg.min_angle = m;
        }
        let t = &self.tolerance;
        let tol = &mut cfg.tolerances;
        tol.identity = t.identity.unwrap_or(tol.identity);
        tol.agreement = t.agreement.unwrap_or(tol.agreement);
        tol.oracle = t.oracle.unwrap_or(tol.oracle);
        cfg
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig, ParseError> {
    let cfg: RunConfig = toml::from_str(text).map_err(|e| ParseError::Config(e.message().to_string()))?;
    cfg.validate()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
seed = 7
samples = 4000
radii = [2.0, 3.0, 4.0, 6.0]
points = 720
precision = 10

[tolerance]
identity = 1e-9
absolute = 1e-10
"#;

    #[test]
    fn parses_full_file() {
        let c = parse_config(SAMPLE).unwrap();
        assert_eq!(c.seed, Some(7));
        assert_eq!(c.radii.as_deref(), Some(&[2.0, 3.0, 4.0, 6.0][..]));
        assert_eq!(c.precision(), 10);
        assert_eq!(c.tolerance.identity, Some(1e-9));
        let s = c.suite_config();
        assert_eq!(s.seed, 7);
        assert_eq!(s.samples.triangles(), 4000);
        assert_eq!(s.tolerances.identity, 1e-9);
        assert_eq!(c.geometry_tolerance().unwrap().absolute_eps, 1e-10);
    }

    #[test]
    fn empty_file_is_defaults() {
        let c = parse_config("").unwrap();
        assert_eq!(c, RunConfig::default());
        assert_eq!(c.precision(), DEFAULT_PRECISION);
        assert_eq!(c.suite_config(), SuiteConfig::default());
    }

    #[test]
    fn rejects_invalid_values() {
        for bad in [
            "precision = 5",
            "precision = 18",
            "samples = 0",
            "radii = [1.0]",
            "radii = []",
            "points = 3",
            "min_angle = 0.0",
            "[tolerance]\nidentity = -1.0",
            "[tolerance]\nrelative = 0.5",
            "unknown = 1",
            "seed = \"x\"",
            "seed = ",
        ] {
            assert!(parse_config(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn flags_win_over_file() {
        let file = parse_config(SAMPLE).unwrap();
        let flags = RunConfig {
            seed: Some(99),
            tolerance: ToleranceOverrides {
                identity: Some(1e-30),
                ..Default::default()
            },
            ..Default::default()
        };
        let c = file.overlay(flags);
        assert_eq!(c.seed, Some(99));
        assert_eq!(c.samples, Some(4000));
        assert_eq!(c.tolerance.identity, Some(1e-30));
        assert_eq!(c.tolerance.absolute, Some(1e-10));
    }

    #[test]
    fn output_spec_precision_bounds() {
        assert!(OutputSpec::new(OutputFormat::Csv, None, 6).is_ok());
        assert!(OutputSpec::new(OutputFormat::Csv, None, 17).is_ok());
        assert!(OutputSpec::new(OutputFormat::Csv, None, 5).is_err());
        assert!(OutputSpec::new(OutputFormat::Svg, None, 18).is_err());
    }
}
