use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use eulerline::euler_frame::{construct_triangle, is_inside_orthocentroidal, EulerFrameParams};
use eulerline::geom::Point;
use eulerline::io::{
    format_number, locus_json, parse_config, parse_vertices, render_svg, round_sig, write_locus_csv, RunConfig,
    ToleranceOverrides,
};
use eulerline::locus::{trace_fermat_locus, trace_incenter_locus, LocusTrace};
use eulerline::polyid::{diff_text, prove_theorem1, MultiPoly, GOLDEN_EXPANSION};
use eulerline::triangle::{is_equilateral, CenterSet, Triangle};
use eulerline::verify::{run_suite, sample_triangle, SuiteReport};
use serde_json::{json, Value};

use crate::{
    CentersArgs, Cli, Command, ConstructArgs, LocusArgs, LocusFormat, LocusWhat, ProveArgs, TextFormat, VerifyArgs,
};

const DEFAULT_POINTS: usize = 720;

#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Domain(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Domain(_) => 2,
            Failure::Usage(_) => 3,
        }
    }
}

pub fn usage_exit() -> ExitCode {
    ExitCode::from(3)
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn run(cli: Cli) -> ExitCode {
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let msg = match &f {
                Failure::Verification(m) | Failure::Domain(m) | Failure::Usage(m) => m,
            };
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(f.code())
        }
    }
}

struct Ctx {
    cfg: RunConfig,
}

impl Ctx {
    fn precision(&self) -> u32 {
        self.cfg.precision()
    }

    fn num(&self, x: f64) -> String {
        format_number(x, self.precision())
    }

    fn pt(&self, p: Point) -> String {
        format!("{} {}", self.num(p.x), self.num(p.y))
    }

    fn jpt(&self, p: Point) -> Value {
        json!([round_sig(p.x, self.precision()), round_sig(p.y, self.precision())])
    }

    fn jnum(&self, x: f64) -> Value {
        json!(round_sig(x, self.precision()))
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            parse_config(&text).map_err(usage)?
        }
        None => RunConfig::default(),
    };
    let mut flags = RunConfig {
        precision: cli.precision,
        tolerance: ToleranceOverrides {
            absolute: cli.abs_eps,
            relative: cli.rel_eps,
            ..Default::default()
        },
        ..Default::default()
    };
    match &cli.command {
        Command::Locus(a) => {
            if !a.radii.is_empty() {
                flags.radii = Some(a.radii.clone());
            }
            flags.points = a.n;
        }
        Command::Verify(a) => {
            flags.seed = a.seed;
            flags.samples = a.samples;
            flags.tolerance.identity = a.tol;
        }
        _ => {}
    }
    let cfg = file.overlay(flags);
    validate_flags(&cli, &cfg)?;
    cfg.geometry_tolerance().map_err(usage)?.install();
    let ctx = Ctx { cfg };

    match &cli.command {
        Command::Centers(a) => centers(&ctx, a),
        Command::Construct(a) => construct(&ctx, a),
        Command::Locus(a) => locus(&ctx, a),
        Command::Verify(a) => verify(&ctx, a),
        Command::Prove(a) => prove(a),
    }
}

/// Radii given on the command line are domain input; everything else that
/// fails validation is a usage error.
fn validate_flags(cli: &Cli, cfg: &RunConfig) -> Result<(), Failure> {
    if let Command::Locus(a) = &cli.command {
        if let Some(r) = a.radii.iter().find(|r| !(r.is_finite() && **r > 1.0)) {
            return Err(domain(format!("circumradius must exceed 1, got {r}")));
        }
        if let Some(n) = a.n {
            if n < 16 {
                return Err(domain(format!("a trace needs at least 16 samples, got {n}")));
            }
        }
    }
    cfg.validate().map_err(usage)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict(inside: bool) -> &'static str {
    if inside {
        "inside"
    } else {
        "outside"
    }
}

fn describe_triangle(ctx: &Ctx, t: &Triangle, format: TextFormat) -> Result<String, Failure> {
    let cs = CenterSet::compute(t);
    let equilateral = is_equilateral(t);
    let verdicts = if equilateral {
        None
    } else {
        let (o, n) = (cs.circumcenter, cs.nine_point);
        let inside = |p| is_inside_orthocentroidal(p, o, n).map_err(domain);
        let ex = cs
            .excenters
            .iter()
            .map(|&e| inside(e).map(verdict))
            .collect::<Result<Vec<_>, _>>()?;
        Some((verdict(inside(cs.incenter)?), verdict(inside(cs.fermat)?), ex))
    };

    let named = [
        ("centroid", cs.centroid),
        ("orthocenter", cs.orthocenter),
        ("circumcenter", cs.circumcenter),
        ("nine_point", cs.nine_point),
        ("incenter", cs.incenter),
        ("fermat", cs.fermat),
    ];
    Ok(match format {
        TextFormat::Text => {
            let mut s = String::new();
            for (label, p) in ["A", "B", "C"].iter().zip(t.vertices()) {
                let _ = writeln!(s, "{label}: {}", ctx.pt(p));
            }
            for (name, p) in named {
                let _ = writeln!(s, "{name}: {}", ctx.pt(p));
            }
            for (i, e) in cs.excenters.iter().enumerate() {
                let _ = writeln!(s, "excenter_{}: {}", ["A", "B", "C"][i], ctx.pt(*e));
            }
            let _ = writeln!(s, "circumradius: {}", ctx.num(cs.circumradius));
            let _ = writeln!(s, "inradius: {}", ctx.num(cs.inradius));
            match &verdicts {
                None => s.push_str("verdicts: equilateral: circle undefined\n"),
                Some((i, f, ex)) => {
                    let all_out = ex.iter().all(|v| *v == "outside");
                    let ex = if all_out { "outside".to_string() } else { ex.join(",") };
                    let _ = writeln!(s, "verdicts: I:{i} T:{f} excenters:{ex}");
                }
            }
            s
        }
        TextFormat::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("vertices".into(), Value::Array(t.vertices().iter().map(|&p| ctx.jpt(p)).collect()));
            for (name, p) in named {
                doc.insert(name.into(), ctx.jpt(p));
            }
            doc.insert("excenters".into(), Value::Array(cs.excenters.iter().map(|&p| ctx.jpt(p)).collect()));
            doc.insert("circumradius".into(), ctx.jnum(cs.circumradius));
            doc.insert("inradius".into(), ctx.jnum(cs.inradius));
            let v = match verdicts {
                None => json!("equilateral: circle undefined"),
                Some((i, f, ex)) => json!({ "incenter": i, "fermat": f, "excenters": ex }),
            };
            doc.insert("verdicts".into(), v);
            let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
            s.push('\n');
            s
        }
    })
}

fn centers(ctx: &Ctx, a: &CentersArgs) -> Result<(), Failure> {
    let v = parse_vertices(&a.vertices.join(" ")).map_err(usage)?;
    let t = Triangle::from_array(v).map_err(domain)?;
    print!("{}", describe_triangle(ctx, &t, a.format)?);
    Ok(())
}

fn construct(ctx: &Ctx, a: &ConstructArgs) -> Result<(), Failure> {
    let params = EulerFrameParams::new(a.radius, a.theta).map_err(domain)?;
    let t = construct_triangle(&params).map_err(domain)?;
    print!("{}", describe_triangle(ctx, &t, a.format)?);
    Ok(())
}

fn locus(ctx: &Ctx, a: &LocusArgs) -> Result<(), Failure> {
    let radii = ctx
        .cfg
        .radii
        .clone()
        .ok_or_else(|| usage("at least one --R value is required"))?;
    let n = ctx.cfg.points.unwrap_or(DEFAULT_POINTS);
    let traces: Vec<LocusTrace> = radii
        .iter()
        .map(|&r| match a.what {
            LocusWhat::Incenter => trace_incenter_locus(r, n),
            LocusWhat::Fermat => trace_fermat_locus(r, n),
        })
        .collect::<Result<_, _>>()
        .map_err(domain)?;
    let digits = ctx.precision();
    let text = match a.format {
        LocusFormat::Csv => write_locus_csv(&traces, digits),
        LocusFormat::Json => locus_json(&traces, digits),
        LocusFormat::Svg => {
            let what = match a.what {
                LocusWhat::Incenter => "incenter",
                LocusWhat::Fermat => "Fermat point",
            };
            let list: Vec<String> = radii.iter().map(|r| format!("{r}")).collect();
            render_svg(&traces, &format!("Locus of the {what}, R = {}", list.join(", ")))
        }
    };
    write_output(a.out.as_deref(), &text)
}

fn failure_summary(cfg: &eulerline::verify::SuiteConfig, r: &SuiteReport) -> String {
    let mut s = String::new();
    for i in r.identities.iter().filter(|i| !i.passed) {
        let _ = write!(s, "\n  {}: max residual {:e} exceeds {:e}", i.name, i.max_residual, i.tolerance);
        if let Some(at) = i.worst_sample {
            if let Ok(t) = sample_triangle(cfg, at) {
                let v = t.vertices();
                let _ = write!(
                    s,
                    " at triangle ({},{}) ({},{}) ({},{})",
                    v[0].x, v[0].y, v[1].x, v[1].y, v[2].x, v[2].y
                );
            }
        }
    }
    for c in r.checks.iter().filter(|c| !c.passed) {
        let _ = write!(s, "\n  {}: {} counterexamples", c.name, c.counterexample_count);
        if let Some(ce) = c.counterexamples.first() {
            let v = ce.vertices;
            let _ = write!(
                s,
                ", first ({},{}) ({},{}) ({},{})",
                v[0].x, v[0].y, v[1].x, v[1].y, v[2].x, v[2].y
            );
        }
    }
    s
}

fn verify(ctx: &Ctx, a: &VerifyArgs) -> Result<(), Failure> {
    let cfg = ctx.cfg.suite_config();
    let report = run_suite(&cfg).map_err(domain)?;
    write_output(a.out.as_deref(), &report.to_json())?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "verification failed:{}",
            failure_summary(&cfg, &report)
        )))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn prove(a: &ProveArgs) -> Result<(), Failure> {
    let report = prove_theorem1();
    let text = report.lhs.to_text();
    if let Some(p) = &a.out {
        write_output(Some(p), &text)?;
    }
    let golden = match &a.golden {
        Some(p) => std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        None => GOLDEN_EXPANSION.to_string(),
    };
    println!("expanded terms: {}", report.lhs.len());
    println!("expansion equals factored form: {}", yes(report.lhs_equals_rhs));
    println!("both sides homogeneous of degree 7: {}", yes(report.lhs_homogeneous_deg7 && report.rhs_homogeneous_deg7));
    println!("quartic factor is a sum of two squares: {}", yes(report.sum_of_squares));
    println!("cleared-denominator form matches: {}", yes(report.cleared_form_matches));

    let mut problems = Vec::new();
    if let Some((m, l, r)) = &report.first_difference {
        problems.push(format!("first differing monomial {:?}: expansion {l}, factored {r}", m.0));
    }
    if !report.holds() && problems.is_empty() {
        problems.push("structural check failed".to_string());
    }
    if text == golden {
        println!("golden expansion: match");
    } else {
        println!("golden expansion: MISMATCH");
        let detail = match MultiPoly::from_text(&golden) {
            Ok(g) => match report.lhs.first_difference(&g) {
                Some((m, l, r)) => format!("first differing monomial {:?}: computed {l}, golden {r}", m.0),
                None => "same polynomial, different text".to_string(),
            },
            Err(e) => {
                let line = diff_text(&text, &golden)
                    .map(|(n, x, y)| format!("; line {n}: computed {x:?}, golden {y:?}"))
                    .unwrap_or_default();
                format!("golden file does not parse ({e}){line}")
            }
        };
        problems.push(detail);
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(problems.join("\n")))
    }
}
