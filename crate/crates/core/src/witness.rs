//! Numerical witnesses for the projection obstruction: boundary lifts,
//! diameter orthogonality, and the coplanarity residual.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::body::Body;
use crate::error::{Error, Result};
use crate::exec;
use crate::grid::DirectionGrid;
use crate::reuleaux::{is_constant_width, reuleaux_polygon, reuleaux_simplex};
use crate::sweep::{support_profile, width_report, WidthReport};
use crate::vec::{self, Dim, Direction, Point};

/// Support points of a spatial body over planar directions, i.e. points of
/// the body lying above the boundary of its planar projection.
pub fn boundary_lift_points(body3d: &Body, directions: &[Direction]) -> Result<Vec<Point>> {
    if body3d.dim() != Dim::Three {
        return Err(Error::invalid("boundary lift requires a spatial body"));
    }
    if directions.is_empty() {
        return Err(Error::invalid("boundary lift requires at least one direction"));
    }
    directions
        .iter()
        .map(|u| {
            if u.dim() != Dim::Two {
                return Err(Error::invalid("boundary lift directions must be planar"));
            }
            body3d.support_point(&u.embed3())
        })
        .collect()
}

/// How far a point set is from lying in a common plane.
///
/// For exactly 4 points this is the absolute scalar triple product of the
/// three edge vectors from the first point; for larger sets it is the
/// smallest singular value of the centered coordinate matrix. Zero means
/// coplanar (up to arithmetic).
pub fn coplanarity_residual(points: &[Point]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::invalid("coplanarity needs at least 3 points"));
    }
    if points.iter().any(|p| p.dim() != Dim::Three) {
        return Err(Error::invalid("coplanarity is defined for spatial points"));
    }
    match points.len() {
        3 => Ok(0.0),
        4 => {
            let a = vec::sub(points[1].raw(), points[0].raw());
            let b = vec::sub(points[2].raw(), points[0].raw());
            let c = vec::sub(points[3].raw(), points[0].raw());
            Ok(vec::dot(a, vec::cross(b, c)).abs())
        }
        n => {
            let inv = 1.0 / n as f64;
            let mut centroid = [0.0; 3];
            for p in points {
                centroid = vec::add(centroid, vec::scale(p.raw(), inv));
            }
            let m = DMatrix::from_fn(n, 3, |r, c| points[r].raw()[c] - centroid[c]);
            let svd = m.svd(false, false);
            Ok(svd.singular_values.iter().cloned().fold(f64::INFINITY, f64::min))
        }
    }
}

/// Checks the diameter property of a constant-width body: for every grid
/// direction, the chord between opposite support points equals `width·u`.
/// Returns the maximal chord residual `‖(p⁺ − p⁻) − w·u‖` over the grid.
///
/// Fails with [`Error::NotConstantWidth`] (carrying the width report) when
/// the body does not pass the constant-width check at `tol` first.
pub fn diameter_orthogonality_check(
    body: &Body,
    grid: &DirectionGrid,
    tol: f64,
) -> Result<f64> {
    let verdict = is_constant_width(body, grid, tol)?;
    if !verdict.is_constant {
        return Err(Error::NotConstantWidth { report: Box::new(verdict.report) });
    }
    let residuals = exec::map_indexed(grid.resolution(), |j| {
        let u = grid.get(j);
        let (h_plus, p_plus) = body.support_with_point(u)?;
        let (h_minus, p_minus) = body.support_with_point(&u.negate())?;
        let w = h_plus + h_minus;
        let chord = vec::sub(p_plus.raw(), p_minus.raw());
        Ok::<f64, Error>(vec::norm(vec::sub(chord, vec::scale(u.raw(), w))))
    })?;
    Ok(residuals.into_iter().fold(0.0, f64::max))
}

/// Evidence assembled around the Reuleaux simplex and its planar projection.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    /// Width extrema of the Reuleaux simplex.
    #[serde(rename = "width_report_L")]
    pub width_report_l: WidthReport,
    /// Sup over the planar grid of `|h_{pr(L)}(u) − 1|`.
    pub projection_deviation: f64,
    /// Support points of the simplex in directions `+e₁, −e₁, +e₂, −e₂`.
    pub witness_points: Vec<Point>,
    /// Coplanarity residual of the witness points (4√2 for the simplex).
    pub coplanarity: f64,
    /// Max diameter-orthogonality residual per Reuleaux polygon `i = 1..i_max`.
    pub diameter_residuals: Vec<f64>,
}

/// Assembles the witness report: the simplex width spread, the deviation of
/// its projection from the unit disc, the four boundary-lift points with
/// their coplanarity residual, and the diameter residuals of the polygon
/// family that any constant-width lift would have to respect.
pub fn nonopenness_report(i_max: u32, m_planar: usize, m_spatial: usize) -> Result<WitnessReport> {
    if i_max < 1 {
        return Err(Error::invalid("witness report needs i_max ≥ 1"));
    }
    let grid2 = DirectionGrid::new(Dim::Two, m_planar)?;
    let grid3 = DirectionGrid::new(Dim::Three, m_spatial)?;

    let simplex = reuleaux_simplex()?;
    let width_report_l = width_report(&simplex, &grid3)?;

    let projected = simplex.clone().project()?;
    let profile = support_profile(&projected, &grid2)?;
    let projection_deviation =
        profile.values().iter().map(|h| (h - 1.0).abs()).fold(0.0, f64::max);

    let axes = [
        Direction::new(&[1.0, 0.0])?,
        Direction::new(&[-1.0, 0.0])?,
        Direction::new(&[0.0, 1.0])?,
        Direction::new(&[0.0, -1.0])?,
    ];
    let witness_points = boundary_lift_points(&simplex, &axes)?;
    let coplanarity = coplanarity_residual(&witness_points)?;

    let mut diameter_residuals = Vec::with_capacity(i_max as usize);
    for i in 1..=i_max {
        let body = reuleaux_polygon(i)?;
        diameter_residuals.push(diameter_orthogonality_check(&body, &grid2, 1e-6)?);
    }

    Ok(WitnessReport {
        width_report_l,
        projection_deviation,
        witness_points,
        coplanarity,
        diameter_residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_equator_lift() {
        let b = Body::ball(Point::new3(0.0, 0.0, 0.0), 1.0).unwrap();
        let dirs = [
            Direction::new(&[1.0, 0.0]).unwrap(),
            Direction::new(&[-1.0, 0.0]).unwrap(),
            Direction::new(&[0.0, 1.0]).unwrap(),
            Direction::new(&[0.0, -1.0]).unwrap(),
        ];
        let pts = boundary_lift_points(&b, &dirs).unwrap();
        let expect = [
            Point::new3(1.0, 0.0, 0.0),
            Point::new3(-1.0, 0.0, 0.0),
            Point::new3(0.0, 1.0, 0.0),
            Point::new3(0.0, -1.0, 0.0),
        ];
        for (p, e) in pts.iter().zip(expect) {
            assert!(p.dist(&e) < 1e-9, "{p:?} vs {e:?}");
        }
    }

    #[test]
    fn simplex_lift_points_match_construction() {
        let l = reuleaux_simplex().unwrap();
        let e2 = Direction::new(&[0.0, 1.0]).unwrap();
        let p = boundary_lift_points(&l, &[e2]).unwrap()[0];
        assert!(p.dist(&Point::new3(0.0, 1.0, 0.0)) < 1e-9);
    }

    #[test]
    fn coplanar_sets_have_zero_residual() {
        let tri = [
            Point::new3(0.0, 0.0, 0.0),
            Point::new3(1.0, 0.0, 0.0),
            Point::new3(0.0, 1.0, 0.0),
        ];
        assert_eq!(coplanarity_residual(&tri).unwrap(), 0.0);

        let square = [
            Point::new3(0.0, 0.0, 1.0),
            Point::new3(1.0, 0.0, 1.0),
            Point::new3(1.0, 1.0, 1.0),
            Point::new3(0.0, 1.0, 1.0),
        ];
        assert!(coplanarity_residual(&square).unwrap() < 1e-15);

        let too_few = [Point::new3(0.0, 0.0, 0.0), Point::new3(1.0, 0.0, 0.0)];
        assert!(coplanarity_residual(&too_few).is_err());
    }

    #[test]
    fn five_point_residual_uses_singular_value() {
        let coplanar5 = [
            Point::new3(0.0, 0.0, 2.0),
            Point::new3(1.0, 0.0, 2.0),
            Point::new3(0.0, 1.0, 2.0),
            Point::new3(-1.0, 0.5, 2.0),
            Point::new3(0.3, -0.7, 2.0),
        ];
        assert!(coplanarity_residual(&coplanar5).unwrap() < 1e-12);

        let bent: Vec<Point> = coplanar5
            .iter()
            .enumerate()
            .map(|(i, p)| Point::new3(p.x(), p.y(), if i == 4 { 3.0 } else { 2.0 }))
            .collect();
        assert!(coplanarity_residual(&bent).unwrap() > 0.1);
    }

    #[test]
    fn ball_diameters_are_exact() {
        let b = Body::ball(Point::new2(0.0, 0.0), 1.5).unwrap();
        let g = DirectionGrid::new(Dim::Two, 128).unwrap();
        let r = diameter_orthogonality_check(&b, &g, 1e-6).unwrap();
        assert!(r < 1e-12);
    }

    #[test]
    fn non_constant_width_body_rejected() {
        let l = reuleaux_simplex().unwrap();
        let g = DirectionGrid::new(Dim::Three, 256).unwrap();
        match diameter_orthogonality_check(&l, &g, 1e-6) {
            Err(Error::NotConstantWidth { report }) => {
                assert!(report.max_width > report.min_width);
            }
            other => panic!("expected NotConstantWidth, got {other:?}"),
        }
    }
}
