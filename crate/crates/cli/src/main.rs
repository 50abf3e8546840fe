//! `archgeom`: box-counting dimension analysis of raster drawings plus a
//! calculator for the Poincare half-plane and disc models.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
//! 3 numeric or model-domain violation.

mod commands;
mod csvio;
mod error;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use archgeom_core::generators::FractalKind;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use error::CliError;

#[derive(Parser)]
#[command(name = "archgeom", version, about = "Fractal dimension and hyperbolic geometry toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate the box-counting dimension of a PGM image
    Boxcount(BoxcountArgs),
    /// Rasterize a reference fractal to a PGM file
    Generate(GenerateArgs),
    /// Hyperbolic-geometry calculations in the half-plane and disc models
    Hyp(HypArgs),
    /// Summary statistics and correlations over CSV dimension columns
    Stats(StatsArgs),
    /// Render a dimension report as a log-log SVG plot
    Plot(PlotArgs),
}

#[derive(Args)]
pub struct BoxcountArgs {
    /// Input image, PGM (P2 or P5)
    pub image: PathBuf,
    /// Ink threshold: pixels strictly below it count as ink
    /// (default: half the maxval, i.e. 128 for 8-bit images)
    #[arg(long)]
    pub threshold: Option<u16>,
    /// Number of halving grid scales
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..))]
    pub levels: u32,
    /// Write the full report as JSON
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the per-scale counts as CSV
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args)]
pub struct GenerateArgs {
    /// One of: koch_curve, sierpinski_triangle, sierpinski_carpet,
    /// cantor_dust, line, filled_square
    pub kind: FractalKind,
    /// Recursion depth
    #[arg(long, default_value_t = 0)]
    pub level: u32,
    /// Canvas edge in pixels
    #[arg(long)]
    pub size: u32,
    /// Output PGM path
    #[arg(long)]
    pub out: PathBuf,
    /// Write ASCII (P2) instead of binary (P5)
    #[arg(long)]
    pub ascii: bool,
}

#[derive(Args)]
pub struct HypArgs {
    /// Write the result payload as JSON
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: HypCommand,
}

#[derive(Subcommand)]
pub enum HypCommand {
    /// Distance between two points of the upper half-plane
    #[command(allow_negative_numbers = true)]
    DistH { x1: f64, y1: f64, x2: f64, y2: f64 },
    /// Distance between two points of the unit disc
    #[command(allow_negative_numbers = true)]
    DistD { x1: f64, y1: f64, x2: f64, y2: f64 },
    /// Map a half-plane point into the disc model
    #[command(allow_negative_numbers = true)]
    ToDisc { x: f64, y: f64 },
    /// Map a disc point into the half-plane model
    #[command(allow_negative_numbers = true)]
    ToHalf { x: f64, y: f64 },
    /// The geodesic through two half-plane points
    #[command(allow_negative_numbers = true)]
    Geodesic { x1: f64, y1: f64, x2: f64, y2: f64 },
    /// The two limiting parallels to a line through an external point
    #[command(allow_negative_numbers = true)]
    Parallels {
        px: f64,
        py: f64,
        /// Foot of a vertical-ray line
        #[arg(long)]
        foot: Option<f64>,
        /// Center of a semicircle line (needs --radius)
        #[arg(long)]
        center: Option<f64>,
        /// Radius of a semicircle line (needs --center)
        #[arg(long)]
        radius: Option<f64>,
    },
    /// Interior angle sum of the triangle on three half-plane vertices
    #[command(allow_negative_numbers = true)]
    AngleSum { ax: f64, ay: f64, bx: f64, by: f64, cx: f64, cy: f64 },
    /// Residual of the right-triangle identity ch c = ch a * ch b for
    /// vertices (0, r), (u, v), (0, 1) with u^2 + v^2 = 1
    #[command(allow_negative_numbers = true)]
    Pythagoras { r: f64, u: f64, v: f64 },
}

#[derive(Args)]
pub struct StatsArgs {
    /// CSV of labeled numeric columns (header row)
    pub csv: PathBuf,
    /// Correlation pairs, e.g. "facade,plan;a,b"
    #[arg(long)]
    pub pairs: Option<String>,
    /// Write column stats and correlations as JSON
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct PlotArgs {
    /// Report JSON produced by `boxcount --out`
    pub report: PathBuf,
    /// Output SVG path
    #[arg(long)]
    pub out: PathBuf,
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Boxcount(a) => commands::boxcount(a),
        Command::Generate(a) => commands::generate(a),
        Command::Hyp(a) => commands::hyp(a),
        Command::Stats(a) => commands::stats(a),
        Command::Plot(a) => commands::plot(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else clap
            // rejects is a usage error.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
