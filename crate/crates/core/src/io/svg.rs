use std::fmt::Write;

use crate::euler_frame::{FRAME_CENTROID, FRAME_CIRCUMCENTER, FRAME_NINE_POINT, FRAME_ORTHOCENTER};
use crate::geom::Point;
use crate::locus::LocusTrace;

const X_MIN: f64 = -0.2;
const X_MAX: f64 = 3.2;
const Y_MIN: f64 = -1.4;
const Y_MAX: f64 = 1.4;
const PX_PER_UNIT: f64 = 200.0;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn px(p: Point) -> (f64, f64) {
    ((p.x - X_MIN) * PX_PER_UNIT, (Y_MAX - p.y) * PX_PER_UNIT)
}

/// Orthocentroidal circle, Euler line with O, G, N, H marked, and one
/// polyline per trace, in the fixed frame window.
pub fn render_svg(traces: &[LocusTrace], title: &str) -> String {
    let w = (X_MAX - X_MIN) * PX_PER_UNIT;
    let h = (Y_MAX - Y_MIN) * PX_PER_UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let (x0, y0) = px(Point::new(X_MIN, 0.0));
    let (x1, _) = px(Point::new(X_MAX, 0.0));
    let _ = writeln!(
        s,
        r##"<line x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y0:.3}" stroke="#888" stroke-width="1"/>"##
    );
    let (cx, cy) = px(Point::new(2.0, 0.0));
    let _ = writeln!(
        s,
        r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        PX_PER_UNIT
    );
    for (label, p) in [
        ("O", FRAME_CIRCUMCENTER),
        ("G", FRAME_CENTROID),
        ("N", FRAME_NINE_POINT),
        ("H", FRAME_ORTHOCENTER),
    ] {
        let (x, y) = px(p);
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14">{label}</text>"#,
            x - 4.0,
            y + 18.0
        );
    }

    for (i, tr) in traces.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut pts = String::new();
        for p in &tr.points {
            let (x, y) = px(p.point);
            if !pts.is_empty() {
                pts.push(' ');
            }
            let _ = write!(pts, "{x:.3},{y:.3}");
        }
        let _ = writeln!(
            s,
            r#"<polyline data-radius="{}" points="{pts}" fill="none" stroke="{color}" stroke-width="1.2"/>"#,
            tr.radius
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::locus::trace_incenter_locus;

    #[test]
    fn deterministic_and_framed() {
        let traces: Vec<LocusTrace> = [2.0, 3.0, 4.0, 6.0]
            .iter()
            .map(|&r| trace_incenter_locus(r, 180).unwrap())
            .collect();
        let a = render_svg(&traces, "incenter");
        let b = render_svg(&traces, "incenter");
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
        assert_eq!(a.matches("<polyline").count(), 4);
        assert!(a.contains(r#"viewBox="0 0 680 560""#));
        // circle center (2,0) maps to (440, 280)
        assert!(a.contains(r#"cx="440.000" cy="280.000" r="200.000""#));
    }

    #[test]
    fn title_is_escaped() {
        assert!(render_svg(&[], "a<b & c").contains("<title>a&lt;b &amp; c</title>"));
    }
}
