//! Grid sweeps: support profiles, width reports, and Hausdorff distances.

use serde::Serialize;

use crate::body::Body;
use crate::error::{Error, Result};
use crate::exec;
use crate::grid::DirectionGrid;
use crate::vec::Direction;

/// Support values of one body over a direction grid.
#[derive(Clone, Debug)]
pub struct SupportProfile {
    grid: DirectionGrid,
    values: Vec<f64>,
}

impl SupportProfile {
    pub fn grid(&self) -> &DirectionGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Width extrema over a grid, with the attaining grid directions.
#[derive(Clone, Debug, Serialize)]
pub struct WidthReport {
    pub min_width: f64,
    pub max_width: f64,
    pub argmin: Direction,
    pub argmax: Direction,
    pub resolution: usize,
}

fn check_dims(body: &Body, grid: &DirectionGrid) -> Result<()> {
    if body.dim() != grid.dim() {
        return Err(Error::invalid("grid dimension does not match the body"));
    }
    Ok(())
}

fn profile_values(
    body: &Body,
    grid: &DirectionGrid,
    parallel: bool,
) -> Result<Vec<f64>> {
    check_dims(body, grid)?;
    let n = grid.resolution();
    let f = |j: usize| body.support(grid.get(j));
    if parallel {
        exec::map_indexed(n, f)
    } else {
        exec::map_indexed_seq(n, f)
    }
}

/// Evaluates the support function of `body` at every grid direction.
pub fn support_profile(body: &Body, grid: &DirectionGrid) -> Result<SupportProfile> {
    Ok(SupportProfile { grid: grid.clone(), values: profile_values(body, grid, true)? })
}

/// Sequential variant of [`support_profile`]; same results, one thread.
pub fn support_profile_seq(body: &Body, grid: &DirectionGrid) -> Result<SupportProfile> {
    Ok(SupportProfile { grid: grid.clone(), values: profile_values(body, grid, false)? })
}

fn widths(body: &Body, grid: &DirectionGrid, parallel: bool) -> Result<Vec<f64>> {
    check_dims(body, grid)?;
    let n = grid.resolution();
    if grid.antipode_index(0).is_some() {
        // The grid is closed under negation: evaluate h once per direction
        // and pair each value with its antipode.
        let h = profile_values(body, grid, parallel)?;
        Ok((0..n).map(|j| h[j] + h[grid.antipode_index(j).unwrap()]).collect())
    } else {
        let f = |j: usize| {
            let u = grid.get(j);
            Ok(body.support(u)? + body.support(&u.negate())?)
        };
        if parallel {
            exec::map_indexed(n, f)
        } else {
            exec::map_indexed_seq(n, f)
        }
    }
}

fn reduce_widths(widths: &[f64], grid: &DirectionGrid) -> WidthReport {
    let mut imin = 0;
    let mut imax = 0;
    for (j, &w) in widths.iter().enumerate() {
        if w < widths[imin] {
            imin = j;
        }
        if w > widths[imax] {
            imax = j;
        }
    }
    WidthReport {
        min_width: widths[imin],
        max_width: widths[imax],
        argmin: *grid.get(imin),
        argmax: *grid.get(imax),
        resolution: grid.resolution(),
    }
}

/// Width extrema of `body` over the grid.
pub fn width_report(body: &Body, grid: &DirectionGrid) -> Result<WidthReport> {
    Ok(reduce_widths(&widths(body, grid, true)?, grid))
}

/// Sequential variant of [`width_report`]; same results, one thread.
pub fn width_report_seq(body: &Body, grid: &DirectionGrid) -> Result<WidthReport> {
    Ok(reduce_widths(&widths(body, grid, false)?, grid))
}

fn sup_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Hausdorff distance of two convex bodies, computed as the sup-norm of their
/// support difference over the grid.
///
/// The grid value underestimates the true distance by at most
/// `(R_a + R_b) · mesh(grid)` where `R` bounds the point norms of each body
/// and `mesh` is the covering radius of the grid.
pub fn hausdorff(a: &Body, b: &Body, grid: &DirectionGrid) -> Result<f64> {
    Ok(sup_diff(&profile_values(a, grid, true)?, &profile_values(b, grid, true)?))
}

/// Sequential variant of [`hausdorff`]; same results, one thread.
pub fn hausdorff_seq(a: &Body, b: &Body, grid: &DirectionGrid) -> Result<f64> {
    Ok(sup_diff(&profile_values(a, grid, false)?, &profile_values(b, grid, false)?))
}
