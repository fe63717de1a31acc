use serde::{Deserialize, Serialize};

use super::{format_number, round_sig, ParseError};
use crate::locus::LocusTrace;

pub const LOCUS_HEADER: [&str; 5] = ["R", "theta", "x", "y", "branch"];

/// One row of the `R,theta,x,y,branch` table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocusRow {
    #[serde(rename = "R")]
    pub radius: f64,
    pub theta: f64,
    pub x: f64,
    pub y: f64,
    pub branch: i8,
}

impl LocusRow {
    fn rounded(self, digits: u32) -> Self {
        Self {
            radius: round_sig(self.radius, digits),
            theta: round_sig(self.theta, digits),
            x: round_sig(self.x, digits),
            y: round_sig(self.y, digits),
            branch: self.branch,
        }
    }
}

pub fn locus_rows(traces: &[LocusTrace]) -> Vec<LocusRow> {
    traces
        .iter()
        .flat_map(|tr| {
            tr.points.iter().map(move |p| LocusRow {
                radius: tr.radius,
                theta: p.theta,
                x: p.point.x,
                y: p.point.y,
                branch: p.branch,
            })
        })
        .collect()
}

pub fn write_locus_csv(traces: &[LocusTrace], digits: u32) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(LOCUS_HEADER).expect("in-memory write");
    for r in locus_rows(traces) {
        w.write_record([
            format_number(r.radius, digits),
            format_number(r.theta, digits),
            format_number(r.x, digits),
            format_number(r.y, digits),
            r.branch.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn read_locus_csv(text: &str) -> Result<Vec<LocusRow>, ParseError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| ParseError::LocusCsv {
        record: 0,
        message: e.to_string(),
    })?;
    if header.iter().ne(LOCUS_HEADER) {
        return Err(ParseError::LocusCsv {
            record: 0,
            message: format!("header must be {}", LOCUS_HEADER.join(",")),
        });
    }
    let mut rows = Vec::new();
    for (i, rec) in rdr.deserialize::<LocusRow>().enumerate() {
        let record = i as u64 + 1;
        let row = rec.map_err(|e| ParseError::LocusCsv {
            record,
            message: e.to_string(),
        })?;
        let finite = [row.radius, row.theta, row.x, row.y].iter().all(|v| v.is_finite());
        if !finite || row.branch.abs() != 1 {
            return Err(ParseError::LocusCsv {
                record,
                message: "values must be finite and branch must be 1 or -1".into(),
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

#[derive(Serialize)]
struct JsonTrace {
    #[serde(rename = "R")]
    radius: f64,
    kind: crate::locus::LocusKind,
    points: Vec<LocusRow>,
}

pub fn locus_json(traces: &[LocusTrace], digits: u32) -> String {
    let doc: Vec<JsonTrace> = traces
        .iter()
        .map(|tr| JsonTrace {
            radius: round_sig(tr.radius, digits),
            kind: tr.kind,
            points: locus_rows(std::slice::from_ref(tr)).into_iter().map(|r| r.rounded(digits)).collect(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&doc).expect("locus serializes");
    s.push('\n');
    s
}
