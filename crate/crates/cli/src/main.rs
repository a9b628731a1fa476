//! `cwlab`: generation, checks, metrics, and rendering for constant-width
//! bodies represented as composed ball intersections.
//!
//! Exit codes: 0 success / affirmative verdict, 1 negative verdict, 2 usage
//! error, 3 numeric failure (empty intersection or solver certificate
//! failure).

mod output;
mod render;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use cwlab_core::{
    central_symmetry, hausdorff, is_constant_width, is_pair_constant_width, json,
    nonopenness_report, reuleaux_polygon, reuleaux_simplex, reuleaux_triangle,
    support_family_rank, width_report, Body, Dim, Direction, DirectionGrid, Error, Point,
    DEFAULT_GRID_2D, DEFAULT_GRID_3D, DEFAULT_RANK_TOL, DEFAULT_VERDICT_TOL,
};
use output::{emit, render_report, ReportFormat};

#[derive(Parser)]
#[command(name = "cwlab", version, about = "Constant-width body laboratory")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a body and write its JSON description.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Width of a body: full grid report, or a single direction with --dir.
    Width {
        body: PathBuf,
        #[arg(long)]
        m: Option<usize>,
        /// Direction as comma-separated reals, e.g. --dir 0,1 (normalized).
        #[arg(long)]
        dir: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Constant-width check; exit 0 when the verdict is affirmative.
    CheckCw {
        body: PathBuf,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_VERDICT_TOL)]
        tol: f64,
        /// Additionally require the measured width to stay at or below this
        /// bound (the rotate-inside-a-square predicate).
        #[arg(long)]
        max_width: Option<f64>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Pair-of-constant-width check; prints the ball fit of a − b.
    CheckPair {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_VERDICT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Central symmetry map (a − a)/2, written as a body.
    Symmetrize {
        body: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Hausdorff distance of two bodies over a shared grid.
    Hausdorff {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Rank of the rotated-Reuleaux support evaluation matrix.
    Rank {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Orthogonal projection of a spatial body to the plane.
    Project {
        body: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Witness report: simplex widths, projection deviation, boundary-lift
    /// points with coplanarity, and polygon diameter residuals.
    Witness {
        #[arg(long, default_value_t = 5)]
        imax: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Render a body as SVG (planar) or OBJ (spatial).
    Render {
        body: PathBuf,
        #[arg(long, value_enum)]
        format: RenderFormat,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    ReuleauxTriangle {
        #[arg(long)]
        d: f64,
        #[arg(long)]
        out: PathBuf,
    },
    ReuleauxPolygon {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        out: PathBuf,
    },
    ReuleauxSimplex {
        #[arg(long)]
        out: PathBuf,
    },
    Ball {
        #[arg(long)]
        dim: u8,
        /// Center as comma-separated reals, e.g. --center 0,0
        #[arg(long)]
        center: String,
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum RenderFormat {
    Svg,
    Obj,
}

enum CliError {
    Usage(String),
    Numeric(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::EmptyBody { .. } | Error::SolverFailure { .. } => {
                CliError::Numeric(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let code = match run(cli.cmd) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    };
    std::process::exit(code);
}

fn load_body(path: &Path) -> Result<Body, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(json::from_json(&text)?)
}

fn default_m(dim: Dim) -> usize {
    match dim {
        Dim::Two => DEFAULT_GRID_2D,
        Dim::Three => DEFAULT_GRID_3D,
    }
}

fn grid_for(body: &Body, m: Option<usize>) -> Result<DirectionGrid, CliError> {
    Ok(DirectionGrid::new(body.dim(), m.unwrap_or_else(|| default_m(body.dim())))?)
}

fn parse_csv_reals(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("bad number {s:?}: {e}")))
        })
        .collect()
}

fn write_body(body: &Body, out: &Path) -> Result<(), CliError> {
    let mut text = json::to_json(body);
    text.push('\n');
    emit(&text, Some(out))?;
    Ok(())
}

fn run(cmd: Cmd) -> Result<i32, CliError> {
    match cmd {
        Cmd::Gen { what } => {
            let (body, out) = match what {
                GenCmd::ReuleauxTriangle { d, out } => (reuleaux_triangle(d)?, out),
                GenCmd::ReuleauxPolygon { i, out } => (reuleaux_polygon(i)?, out),
                GenCmd::ReuleauxSimplex { out } => (reuleaux_simplex()?, out),
                GenCmd::Ball { dim, center, radius, out } => {
                    let coords = parse_csv_reals(&center)?;
                    if coords.len() != dim as usize {
                        return Err(CliError::Usage(format!(
                            "--center has {} coordinates but --dim is {dim}",
                            coords.len()
                        )));
                    }
                    (Body::ball(Point::new(&coords)?, radius)?, out)
                }
            };
            write_body(&body, &out)?;
            Ok(0)
        }
        Cmd::Width { body, m, dir, format } => {
            let body = load_body(&body)?;
            match dir {
                Some(text) => {
                    let coords = parse_csv_reals(&text)?;
                    let u = Direction::new(&coords)?;
                    let w = body.width(&u)?;
                    emit(&format!("{w}\n"), None)?;
                }
                None => {
                    let grid = grid_for(&body, m)?;
                    let report = width_report(&body, &grid)?;
                    emit(&render_report(&report, format), None)?;
                }
            }
            Ok(0)
        }
        Cmd::CheckCw { body, m, tol, max_width, format } => {
            let body = load_body(&body)?;
            let grid = grid_for(&body, m)?;
            let verdict = is_constant_width(&body, &grid, tol)?;
            emit(&render_report(&verdict, format), None)?;
            let mut ok = verdict.is_constant;
            if let Some(bound) = max_width {
                ok = ok && verdict.report.max_width <= bound + tol;
            }
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::CheckPair { a, b, m, tol, format } => {
            let a = load_body(&a)?;
            let b = load_body(&b)?;
            if a.dim() != b.dim() {
                return Err(CliError::Usage("bodies have different dimensions".into()));
            }
            let grid = grid_for(&a, m)?;
            let (ok, fit) = is_pair_constant_width(&a, &b, &grid, tol)?;
            emit(&render_report(&fit, format), None)?;
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Symmetrize { body, out } => {
            let body = load_body(&body)?;
            write_body(&central_symmetry(&body), &out)?;
            Ok(0)
        }
        Cmd::Hausdorff { a, b, m } => {
            let a = load_body(&a)?;
            let b = load_body(&b)?;
            if a.dim() != b.dim() {
                return Err(CliError::Usage("bodies have different dimensions".into()));
            }
            let grid = grid_for(&a, m)?;
            let d = hausdorff(&a, &b, &grid)?;
            emit(&format!("{d}\n"), None)?;
            Ok(0)
        }
        Cmd::Rank { k, tol, format } => {
            let report = support_family_rank(k, tol)?;
            emit(&render_report(&report, format), None)?;
            Ok(0)
        }
        Cmd::Project { body, out } => {
            let body = load_body(&body)?;
            write_body(&body.project()?, &out)?;
            Ok(0)
        }
        Cmd::Witness { imax, out, format } => {
            let report = nonopenness_report(imax, DEFAULT_GRID_2D, DEFAULT_GRID_3D)?;
            emit(&render_report(&report, format), out.as_deref())?;
            Ok(0)
        }
        Cmd::Render { body, format, m, out } => {
            let body = load_body(&body)?;
            let text = match (format, body.dim()) {
                (RenderFormat::Svg, Dim::Two) => {
                    render::render_svg(&body, m.unwrap_or(DEFAULT_GRID_2D))?
                }
                (RenderFormat::Obj, Dim::Three) => {
                    render::render_obj(&body, m.unwrap_or(DEFAULT_GRID_3D))?
                }
                (RenderFormat::Svg, Dim::Three) => {
                    return Err(CliError::Usage("svg output requires a planar body".into()))
                }
                (RenderFormat::Obj, Dim::Two) => {
                    return Err(CliError::Usage("obj output requires a spatial body".into()))
                }
            };
            emit(&text, Some(&out))?;
            Ok(0)
        }
    }
}
