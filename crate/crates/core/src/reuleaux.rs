//! Constant-width constructions and the support-family rank experiment.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::body::Body;
use crate::error::{Error, Result};
use crate::grid::DirectionGrid;
use crate::sweep::{width_report, WidthReport};
use crate::vec::{Dim, Direction, Point};

/// Reuleaux triangle of width `d`: the intersection of the three discs of
/// radius `d` centered at `(0,0)`, `(d,0)`, and `(d/2, d√3/2)`.
pub fn reuleaux_triangle(d: f64) -> Result<Body> {
    if !d.is_finite() || d <= 0.0 {
        return Err(Error::invalid("reuleaux triangle width must be positive"));
    }
    let centers = [
        Point::new2(0.0, 0.0),
        Point::new2(d, 0.0),
        Point::new2(d / 2.0, d * 3f64.sqrt() / 2.0),
    ];
    balls_at(&centers, d, Dim::Two)
}

/// Reuleaux polygon with `2i+1` vertices at the roots of unity
/// `x_j = (cos(2πj/(2i+1)), sin(2πj/(2i+1)))`, cut by discs of radius
/// `‖x₀ − x_i‖ = 2·sin(πi/(2i+1))` centered at the vertices.
pub fn reuleaux_polygon(i: u32) -> Result<Body> {
    if i < 1 {
        return Err(Error::invalid("reuleaux polygon index must be at least 1"));
    }
    let n = 2 * i as usize + 1;
    let centers: Vec<Point> = (0..n)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            Point::new2(theta.cos(), theta.sin())
        })
        .collect();
    let radius = centers[0].dist(&centers[i as usize]);
    balls_at(&centers, radius, Dim::Two)
}

/// The Reuleaux simplex: intersection of the four balls of radius 2 centered
/// at `(0,±1,0)` and `(±1,0,√2)` — a regular tetrahedron of edge 2.
pub fn reuleaux_simplex() -> Result<Body> {
    reuleaux_simplex_edge(2.0)
}

/// Reuleaux simplex over a regular tetrahedron of edge `d` (balls of radius
/// `d` at the vertices).
pub fn reuleaux_simplex_edge(d: f64) -> Result<Body> {
    if !d.is_finite() || d <= 0.0 {
        return Err(Error::invalid("reuleaux simplex edge must be positive"));
    }
    let s = d / 2.0;
    let centers = [
        Point::new3(0.0, s, 0.0),
        Point::new3(0.0, -s, 0.0),
        Point::new3(-s, 0.0, s * 2f64.sqrt()),
        Point::new3(s, 0.0, s * 2f64.sqrt()),
    ];
    balls_at(&centers, d, Dim::Three)
}

fn balls_at(centers: &[Point], radius: f64, dim: Dim) -> Result<Body> {
    let balls = centers
        .iter()
        .map(|&c| crate::body::Ball::new(c, radius))
        .collect::<Result<Vec<_>>>()?;
    Body::ball_intersection(dim, balls)
}

/// Verdict of a constant-width check over a grid.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantWidthVerdict {
    pub is_constant: bool,
    pub report: WidthReport,
    pub tolerance: f64,
}

/// Sweeps the widths of `body` over `grid` and declares constant width when
/// `max − min ≤ tol`. The report is returned for inspection either way.
pub fn is_constant_width(
    body: &Body,
    grid: &DirectionGrid,
    tol: f64,
) -> Result<ConstantWidthVerdict> {
    if tol <= 0.0 {
        return Err(Error::invalid("constant-width tolerance must be positive"));
    }
    let report = width_report(body, grid)?;
    let is_constant = report.max_width - report.min_width <= tol;
    Ok(ConstantWidthVerdict { is_constant, report, tolerance: tol })
}

/// Numerical rank evidence for the rotated-Reuleaux support family.
#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub k: usize,
    pub matrix_rows: usize,
    pub matrix_cols: usize,
    pub rank: usize,
    pub tolerance: f64,
}

/// The `(k+1)×(k+1)` evaluation matrix `M[r][j] = h_j(π/3 + rπ/(3k))`, where
/// `h_j` is the support function of the unit Reuleaux triangle rotated by
/// `jπ/(3k)` about the origin.
pub fn support_family_matrix(k: usize) -> Result<Vec<Vec<f64>>> {
    if k < 1 {
        return Err(Error::invalid("family size k must be at least 1"));
    }
    let base = reuleaux_triangle(1.0)?;
    let step = std::f64::consts::PI / (3.0 * k as f64);
    let bodies: Vec<Body> = (0..=k)
        .map(|j| base.clone().rotate(j as f64 * step))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(k + 1);
    for r in 0..=k {
        let theta = std::f64::consts::PI / 3.0 + r as f64 * step;
        let u = Direction::from_angle(theta);
        let row = bodies.iter().map(|b| b.support(&u)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// Numerical rank of the support-family evaluation matrix: the number of
/// singular values above `tol` times the largest one.
pub fn support_family_rank(k: usize, tol: f64) -> Result<RankReport> {
    if tol <= 0.0 {
        return Err(Error::invalid("rank tolerance must be positive"));
    }
    let rows = support_family_matrix(k)?;
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |r, c| rows[r][c]);
    let svd = m.svd(false, false);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let rank = if sigma_max == 0.0 {
        0
    } else {
        svd.singular_values.iter().filter(|&&s| s > tol * sigma_max).count()
    };
    Ok(RankReport { k, matrix_rows: n, matrix_cols: n, rank, tolerance: tol })
}
