use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Triangle centers on a fixed Euler line.
#[derive(Debug, Parser)]
#[command(name = "eulerline", version, about)]
struct Cli {
    /// TOML file with default settings; flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Significant digits in numeric output, 6 to 17.
    #[arg(long, global = true)]
    precision: Option<u32>,

    /// Absolute geometric tolerance.
    #[arg(long, global = true, value_name = "EPS")]
    abs_eps: Option<f64>,

    /// Relative geometric tolerance.
    #[arg(long, global = true, value_name = "EPS")]
    rel_eps: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Centers, radii and orthocentroidal verdicts for a triangle.
    Centers(CentersArgs),
    /// Build the triangle whose vertex A sits at angle theta on the circumcircle.
    Construct(ConstructArgs),
    /// Trace incenter or Fermat-point loci.
    Locus(LocusArgs),
    /// Run the randomized identity suite.
    Verify(VerifyArgs),
    /// Check the Fermat-point polynomial factorization exactly.
    Prove(ProveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct CentersArgs {
    /// Three points "x,y", as separate arguments or one quoted string. Put
    /// `--` first when a leading coordinate is negative.
    #[arg(required = true, num_args = 1..=3)]
    vertices: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    /// Circumradius, greater than 1.
    #[arg(long = "R", short = 'R', allow_negative_numbers = true)]
    radius: f64,
    /// Angle of vertex A in radians.
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LocusWhat {
    Incenter,
    Fermat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LocusFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Args)]
struct LocusArgs {
    /// One or more circumradii.
    #[arg(long = "R", short = 'R', num_args = 1.., allow_negative_numbers = true)]
    radii: Vec<f64>,
    /// Sweep samples per radius.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "incenter")]
    what: LocusWhat,
    #[arg(long, value_enum, default_value = "csv")]
    format: LocusFormat,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random triangles.
    #[arg(long)]
    samples: Option<u64>,
    /// Scaled residual bound for the identities.
    #[arg(long)]
    tol: Option<f64>,
    /// Report file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ProveArgs {
    /// Where to write the canonical expansion.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Expansion to compare against; the bundled copy when absent.
    #[arg(long)]
    golden: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                commands::usage_exit()
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    commands::run(cli)
}
