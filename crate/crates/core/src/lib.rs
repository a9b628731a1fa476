//! Computational kernel for convex bodies of constant width in dimensions 2 and 3.
//!
//! Bodies are represented as intersections of closed balls composed through
//! Minkowski-algebra operators (scaling, reflection, sums, planar rotations,
//! and projection to the plane). Every body carries an exact support-function
//! oracle; widths, Hausdorff distances, ball fits, and the various
//! constant-width verdicts are all derived from support evaluations over
//! deterministic direction grids.
//!
//! Grid sweeps are data-parallel. With the default `parallel` feature they run
//! on rayon; the `*_seq` variants (and builds with
//! `--no-default-features`) use the same code on a plain sequential iterator,
//! which keeps a reference path around for benchmarks and determinism checks.

mod body;
mod error;
mod exec;
mod grid;
pub mod json;
mod minkowski;
mod reuleaux;
mod solver;
mod sweep;
mod vec;
mod witness;

pub use body::{Ball, Body};
pub use error::{Error, Result};
pub use grid::DirectionGrid;
pub use minkowski::{central_symmetry, fit_ball, is_pair_constant_width, BallFit};
pub use reuleaux::{
    is_constant_width, reuleaux_polygon, reuleaux_simplex, reuleaux_simplex_edge,
    reuleaux_triangle, support_family_matrix, support_family_rank, ConstantWidthVerdict,
    RankReport,
};
pub use solver::{
    feasible_point, max_linear_over_balls, max_linear_over_balls_exact,
    max_linear_over_balls_iterative, SolverConfig,
};
pub use sweep::{
    hausdorff, hausdorff_seq, support_profile, support_profile_seq, width_report,
    width_report_seq, SupportProfile, WidthReport,
};
pub use vec::{Dim, Direction, Point};
pub use witness::{
    boundary_lift_points, coplanarity_residual, diameter_orthogonality_check, nonopenness_report,
    WitnessReport,
};

/// Default verdict tolerance for constant-width and ball-fit checks.
pub const DEFAULT_VERDICT_TOL: f64 = 1e-6;
/// Feasibility/certificate tolerance used by the ball-intersection solvers.
pub const SOLVER_TOL: f64 = 1e-10;
/// Default relative tolerance for numerical rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;
/// Default grid resolution for planar sweeps.
pub const DEFAULT_GRID_2D: usize = 4096;
/// Default grid resolution for spherical sweeps.
pub const DEFAULT_GRID_3D: usize = 20000;
