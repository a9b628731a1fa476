//! Minkowski algebra: central symmetry, ball fitting, and pair checks.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::body::Body;
use crate::error::{Error, Result};
use crate::grid::DirectionGrid;
use crate::sweep::{support_profile, SupportProfile};
use crate::vec::Point;

/// The central symmetry map `(A − A)/2`: always centrally symmetric, and a
/// ball exactly when `A` has constant width.
pub fn central_symmetry(a: &Body) -> Body {
    let sum = Body::sum(a.clone(), a.clone().negate()).expect("dimensions match by construction");
    sum.scale(0.5).expect("scale factor 0.5 is valid")
}

/// Least-squares ball fitted to a support profile.
#[derive(Clone, Debug, Serialize)]
pub struct BallFit {
    pub center: Point,
    pub radius: f64,
    /// Sup-norm mismatch `max_j |h(u_j) − (⟨center,u_j⟩ + radius)|`.
    pub residual: f64,
}

/// Fits `h(u) ≈ ⟨c,u⟩ + r` over the profile's grid by linear least squares.
pub fn fit_ball(profile: &SupportProfile) -> Result<BallFit> {
    if profile.values().iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid("support profile contains non-finite values"));
    }
    let grid = profile.grid();
    let dim = grid.dim().len();
    let m = grid.resolution();
    let a = DMatrix::from_fn(m, dim + 1, |row, col| {
        if col < dim {
            grid.get(row).coords()[col]
        } else {
            1.0
        }
    });
    let b = DVector::from_column_slice(profile.values());
    let svd = a.svd(true, true);
    let sol = svd
        .solve(&b, 1e-12)
        .map_err(|_| Error::SolverFailure { gap: 0.0, residual: f64::INFINITY })?;
    let mut c = [0.0; 3];
    c[..dim].copy_from_slice(&sol.as_slice()[..dim]);
    let center = Point::from_raw(c, grid.dim());
    let radius = sol[dim];
    let residual = profile
        .values()
        .iter()
        .enumerate()
        .map(|(j, &h)| (h - (grid.get(j).dot(&center) + radius)).abs())
        .fold(0.0, f64::max);
    Ok(BallFit { center, radius, residual })
}

/// Checks whether `(a, b)` is a pair of constant relative width, i.e. whether
/// the difference body `a − b` is a ball within `tol` (sup-norm ball-fit
/// residual over the grid). The fit is returned as evidence either way.
pub fn is_pair_constant_width(
    a: &Body,
    b: &Body,
    grid: &DirectionGrid,
    tol: f64,
) -> Result<(bool, BallFit)> {
    if a.dim() != b.dim() {
        return Err(Error::invalid("pair check requires equal dimensions"));
    }
    if tol <= 0.0 {
        return Err(Error::invalid("pair tolerance must be positive"));
    }
    let diff = Body::sum(a.clone(), b.clone().negate())?;
    let fit = fit_ball(&support_profile(&diff, grid)?)?;
    Ok((fit.residual <= tol, fit))
}
