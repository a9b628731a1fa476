//! Deterministic direction grids on S¹ and S².

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vec::{Dim, Direction};

/// A deterministic sampling of the unit circle or sphere.
///
/// Planar grids place `m` directions at angles `θ_j = 2πj/m`. Spatial grids
/// use the golden-angle spiral: `z = 1 − (2i+1)/m`, azimuth `i·π(3−√5)`.
/// Identical `(dim, m)` inputs always produce bit-identical grids.
#[derive(Clone, Debug, Serialize)]
pub struct DirectionGrid {
    #[serde(serialize_with = "serialize_dim")]
    dim: Dim,
    resolution: usize,
    #[serde(skip)]
    directions: Vec<Direction>,
}

fn serialize_dim<S: serde::Serializer>(dim: &Dim, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u8(dim.len() as u8)
}

impl DirectionGrid {
    /// Builds the grid; planar grids need `m ≥ 3`, spatial grids `m ≥ 16`.
    pub fn new(dim: Dim, m: usize) -> Result<DirectionGrid> {
        let min = match dim {
            Dim::Two => 3,
            Dim::Three => 16,
        };
        if m < min {
            return Err(Error::invalid(format!(
                "grid resolution {m} below the minimum {min} for dimension {dim}"
            )));
        }
        let directions = match dim {
            Dim::Two => (0..m)
                .map(|j| Direction::from_angle(2.0 * std::f64::consts::PI * j as f64 / m as f64))
                .collect(),
            Dim::Three => {
                let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
                (0..m)
                    .map(|i| {
                        let z = 1.0 - (2.0 * i as f64 + 1.0) / m as f64;
                        let rho = (1.0 - z * z).max(0.0).sqrt();
                        let a = i as f64 * golden;
                        Direction::from_unit([rho * a.cos(), rho * a.sin(), z], Dim::Three)
                    })
                    .collect()
            }
        };
        Ok(DirectionGrid { dim, resolution: m, directions })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn get(&self, j: usize) -> &Direction {
        &self.directions[j]
    }

    /// Whether `-u` is on the grid at a known index for every grid `u`.
    pub(crate) fn antipode_index(&self, j: usize) -> Option<usize> {
        if self.dim == Dim::Two && self.resolution.is_multiple_of(2) {
            Some((j + self.resolution / 2) % self.resolution)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_grid_angles() {
        let g = DirectionGrid::new(Dim::Two, 4).unwrap();
        let expect = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for (d, (x, y)) in g.directions().iter().zip(expect) {
            assert!((d.x() - x).abs() < 1e-15 && (d.y() - y).abs() < 1e-15);
        }

        let g3 = DirectionGrid::new(Dim::Two, 3).unwrap();
        for (j, d) in g3.directions().iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / 3.0;
            assert!((d.x() - theta.cos()).abs() < 1e-15);
            assert!((d.y() - theta.sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn resolution_minimums_enforced() {
        assert!(DirectionGrid::new(Dim::Two, 2).is_err());
        assert!(DirectionGrid::new(Dim::Three, 15).is_err());
    }

    #[test]
    fn grids_are_reproducible() {
        let a = DirectionGrid::new(Dim::Three, 64).unwrap();
        let b = DirectionGrid::new(Dim::Three, 64).unwrap();
        for (x, y) in a.directions().iter().zip(b.directions()) {
            assert_eq!(x.coords(), y.coords());
        }
    }

    #[test]
    fn planar_antipodes_line_up_for_even_m() {
        let g = DirectionGrid::new(Dim::Two, 8).unwrap();
        for j in 0..8 {
            let k = g.antipode_index(j).unwrap();
            let u = g.get(j);
            let v = g.get(k);
            assert!((u.x() + v.x()).abs() < 1e-15 && (u.y() + v.y()).abs() < 1e-15);
        }
        let odd = DirectionGrid::new(Dim::Two, 9).unwrap();
        assert!(odd.antipode_index(0).is_none());
    }
}
