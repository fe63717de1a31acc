//! Text formats: vertex lists, locus tables, run configuration and figures.

mod config;
mod locus_file;
mod svg;

pub use config::{parse_config, OutputFormat, OutputSpec, RunConfig, ToleranceOverrides, DEFAULT_PRECISION};
pub use locus_file::{locus_json, locus_rows, read_locus_csv, write_locus_csv, LocusRow};
pub use svg::render_svg;

use thiserror::Error;

use crate::geom::Point;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("vertex list: {0}")]
    Vertices(String),
    #[error("locus csv, record {record}: {message}")]
    LocusCsv { record: u64, message: String },
    #[error("config: {0}")]
    Config(String),
}

/// Parse `"x,y"`.
pub fn parse_point(s: &str) -> Result<Point, ParseError> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| ParseError::Vertices(format!("expected x,y but found {s:?}")))?;
    let coord = |t: &str| -> Result<f64, ParseError> {
        let v: f64 = t
            .trim()
            .parse()
            .map_err(|_| ParseError::Vertices(format!("not a number: {t:?}")))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(ParseError::Vertices(format!("coordinate must be finite: {t:?}")))
        }
    };
    Ok(Point::new(coord(x)?, coord(y)?))
}

/// Parse three whitespace-separated points, e.g. `"0,0 3,0 0,4"`.
pub fn parse_vertices(s: &str) -> Result<[Point; 3], ParseError> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.len() != 3 {
        return Err(ParseError::Vertices(format!("expected 3 points, found {}", tokens.len())));
    }
    let mut out = [Point::new(0.0, 0.0); 3];
    for (slot, tok) in out.iter_mut().zip(tokens) {
        *slot = parse_point(tok)?;
    }
    Ok(out)
}

/// `x` rounded to `digits` significant digits.
pub fn round_sig(x: f64, digits: u32) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let s = format!("{:.*e}", digits.saturating_sub(1) as usize, x);
    s.parse().unwrap_or(x)
}

/// Shortest decimal that round-trips the value rounded to `digits`
/// significant digits.
pub fn format_number(x: f64, digits: u32) -> String {
    let r = round_sig(x, digits);
    if r == 0.0 {
        return "0".to_string();
    }
    format!("{r}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertices_parse() {
        let v = parse_vertices("0,0 3,0 0,4").unwrap();
        assert_eq!(v, [Point::new(0.0, 0.0), Point::new(3.0, 0.0), Point::new(0.0, 4.0)]);
        let v = parse_vertices("  -1.5,2e-3\t7, 8 \n1,1").unwrap_err();
        assert!(matches!(v, ParseError::Vertices(_)));
        assert!(parse_vertices("-1.5,2e-3\t7,8 \n1,1").is_ok());
    }

    #[test]
    fn vertices_reject_garbage() {
        for bad in ["", "0,0 1,1", "0,0 1,1 2,2 3,3", "0;0 1,1 2,2", "a,0 1,1 2,2", "inf,0 1,1 2,2", "NaN,0 1,1 2,2"] {
            assert!(parse_vertices(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.1 + 0.2, 12), "0.3");
        assert_eq!(format_number(2.5, 12), "2.5");
        assert_eq!(format_number(1.0 / 3.0, 6), "0.333333");
        assert_eq!(format_number(-0.0, 12), "0");
        assert_eq!(format_number(1.0 / 3.0, 17).parse::<f64>().unwrap(), 1.0 / 3.0);
        assert_eq!(format_number(123456789.0, 6), "123457000");
    }
}
