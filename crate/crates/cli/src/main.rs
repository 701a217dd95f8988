//! `noneuclid`: curvature laws, disk and sphere figures, and printable
//! templates for tiling, folding and crochet models.
//!
//! Exit status is 0 on success, 2 on a usage or domain error (with exactly one
//! line on stderr) and 1 on an internal failure.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "noneuclid",
    version,
    about = "Constant-curvature geometry and model templates"
)]
pub struct Cli {
    /// Settings file of `key = value` lines (overrides $NONEUCLID_CONFIG).
    #[arg(long, global = true, value_name = "PATH")]
    pub config_file: Option<PathBuf>,
    /// Page size in mm.
    #[arg(long, global = true, value_name = "W,H")]
    pub page: Option<String>,
    /// Page margin in mm.
    #[arg(long, global = true, value_name = "MM")]
    pub margin_mm: Option<f64>,
    /// Stroke width override, e.g. `cut=0.5`; repeatable.
    #[arg(long = "stroke", global = true, value_name = "CLASS=MM")]
    pub strokes: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Circumference, area and angle-sum laws for curvature K.
    Geometry(GeometryArgs),
    /// Great-circle triangles and intersections on the unit sphere.
    #[command(subcommand)]
    Sphere(SphereCommand),
    /// Figures in the Poincaré disk, drawn as SVG.
    #[command(subcommand)]
    Disk(DiskCommand),
    /// Net of a (p,6,6) polygon tiling patch.
    Tiling(TilingArgs),
    /// Annulus crease template for a folded paper model.
    Fold(FoldArgs),
    /// Row-by-row schedule for a crocheted hyperbolic surface.
    Crochet(CrochetArgs),
}

#[derive(Debug, Args)]
pub struct TextOut {
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SvgOut {
    /// SVG output file.
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    /// Also write a JSON report to this file.
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GeometryArgs {
    /// Gaussian curvature K.
    #[arg(long, allow_hyphen_values = true)]
    pub curvature: f64,
    /// Radius of a geodesic circle.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Area of a geodesic triangle.
    #[arg(long)]
    pub area: Option<f64>,
    #[command(flatten)]
    pub output: TextOut,
}

#[derive(Debug, Subcommand)]
pub enum SphereCommand {
    /// Angles and area of the triangle on three points.
    Triangle {
        /// Three points as LAT,LON in degrees or X,Y,Z.
        #[arg(
            long,
            num_args = 3,
            required = true,
            allow_hyphen_values = true,
            value_name = "POINT"
        )]
        points: Vec<String>,
        /// Also draw the triangle as SVG.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[command(flatten)]
        output: TextOut,
    },
    /// Where two great circles, each through two points, cross.
    Intersect {
        /// Two points (LAT,LON or X,Y,Z) on the first great circle.
        #[arg(
            long,
            num_args = 2,
            required = true,
            allow_hyphen_values = true,
            value_name = "POINT"
        )]
        first: Vec<String>,
        /// Two points on the second great circle.
        #[arg(
            long,
            num_args = 2,
            required = true,
            allow_hyphen_values = true,
            value_name = "POINT"
        )]
        second: Vec<String>,
        #[command(flatten)]
        output: TextOut,
    },
}

#[derive(Debug, Subcommand)]
pub enum DiskCommand {
    /// Geodesic triangle on three points.
    Triangle {
        /// Vertices inside the unit disk.
        #[arg(long, num_args = 3, required = true, allow_hyphen_values = true, value_name = "X,Y")]
        points: Vec<String>,
        #[command(flatten)]
        output: SvgOut,
    },
    /// Several geodesics through a point, none meeting a given line.
    Parallels {
        /// Two points of the line (inside the disk or on its boundary).
        #[arg(long, num_args = 2, required = true, allow_hyphen_values = true, value_name = "X,Y")]
        line: Vec<String>,
        /// Point off the line that every parallel passes through.
        #[arg(long, allow_hyphen_values = true, value_name = "X,Y")]
        point: String,
        /// Number of parallels to draw.
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[command(flatten)]
        output: SvgOut,
    },
    /// Circle of given hyperbolic radius.
    Circle {
        /// Centre inside the unit disk.
        #[arg(long, allow_hyphen_values = true, value_name = "X,Y")]
        center: String,
        /// Hyperbolic radius.
        #[arg(long)]
        radius: f64,
        #[command(flatten)]
        output: SvgOut,
    },
}

#[derive(Debug, Args)]
pub struct TilingArgs {
    /// Vertex configuration: 5,6,6, 6,6,6 or 7,6,6.
    #[arg(long)]
    pub config: String,
    /// Rings of faces around the centre.
    #[arg(long, default_value_t = 1)]
    pub rings: u32,
    /// Polygon edge length in mm.
    #[arg(long)]
    pub edge_mm: Option<f64>,
    /// Glue-tab depth in mm.
    #[arg(long)]
    pub tab_mm: Option<f64>,
    /// Spanning tree used to unfold: bfs or dfs.
    #[arg(long, default_value = "bfs")]
    pub strategy: String,
    /// SVG output file.
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    /// JSON report file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FoldArgs {
    /// Inner cut radius in mm.
    #[arg(long)]
    pub inner: f64,
    /// Outer cut radius in mm.
    #[arg(long)]
    pub outer: f64,
    /// Number of crease circles between the cuts.
    #[arg(long)]
    pub creases: usize,
    /// uniform or geometric:RATIO.
    #[arg(long, default_value = "uniform")]
    pub spacing: String,
    /// Fold angle of every strip in degrees.
    #[arg(long, default_value_t = 0.0)]
    pub fold_angle: f64,
    /// SVG output file.
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    /// JSON report file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CrochetArgs {
    /// Stitches in the foundation chain.
    #[arg(long)]
    pub foundation: u64,
    /// Increase once every n stitches.
    #[arg(long)]
    pub ratio_n: u64,
    /// Rows to work after the foundation.
    #[arg(long)]
    pub rows: u32,
    /// Stitch width and row height in mm.
    #[arg(long, value_name = "W,H")]
    pub gauge: Option<String>,
    /// Also write the JSON schedule to this file.
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
    #[command(flatten)]
    pub output: TextOut,
}

/// A failed invocation and the exit status it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or inputs outside an operation's domain.
    Usage(String),
    Internal(String),
}

impl From<noneuclid::Error> for CliError {
    fn from(e: noneuclid::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn one_line(s: &str) -> String {
    s.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|info| {
        eprintln!("internal error: {}", one_line(&info.to_string()));
    }));
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            eprintln!("error: a subcommand is required; see noneuclid --help");
            return ExitCode::from(2);
        }
        Err(e) => {
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("{}", first.trim());
            return ExitCode::from(2);
        }
    };
    match std::panic::catch_unwind(|| commands::run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::Usage(m))) => {
            eprintln!("error: {}", one_line(&m));
            ExitCode::from(2)
        }
        Ok(Err(CliError::Internal(m))) => {
            eprintln!("internal error: {}", one_line(&m));
            ExitCode::from(1)
        }
        Err(_) => ExitCode::from(1),
    }
}
