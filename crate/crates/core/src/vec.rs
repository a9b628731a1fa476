use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Ambient dimension of a body, point, or direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }

    pub fn from_len(n: usize) -> Option<Dim> {
        match n {
            2 => Some(Dim::Two),
            3 => Some(Dim::Three),
            _ => None,
        }
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.len())
    }
}

// Plain [f64; 3] arithmetic; 2D values keep z = 0 so the same formulas apply.
pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn add(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub(crate) fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn scale(a: [f64; 3], t: f64) -> [f64; 3] {
    [a[0] * t, a[1] * t, a[2] * t]
}

pub(crate) fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Rotate the xy components counterclockwise by `alpha`, leaving z unchanged.
pub(crate) fn rot2(v: [f64; 3], alpha: f64) -> [f64; 3] {
    let (s, c) = alpha.sin_cos();
    [c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]]
}

/// Lexicographic order on coordinate tuples, used to break support-point ties.
pub(crate) fn lex_less(a: [f64; 3], b: [f64; 3]) -> bool {
    for k in 0..3 {
        if a[k] < b[k] {
            return true;
        }
        if a[k] > b[k] {
            return false;
        }
    }
    false
}

fn check_coords(coords: &[f64]) -> Result<Dim> {
    let dim = Dim::from_len(coords.len())
        .ok_or_else(|| Error::invalid(format!("expected 2 or 3 coordinates, got {}", coords.len())))?;
    if coords.iter().any(|c| !c.is_finite()) {
        return Err(Error::invalid("coordinates must be finite"));
    }
    Ok(dim)
}

fn raw_from(coords: &[f64]) -> [f64; 3] {
    let mut v = [0.0; 3];
    v[..coords.len()].copy_from_slice(coords);
    v
}

/// A point of the ambient space (2 or 3 Euclidean coordinates).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    v: [f64; 3],
    dim: Dim,
}

impl Point {
    pub fn new(coords: &[f64]) -> Result<Point> {
        let dim = check_coords(coords)?;
        Ok(Point { v: raw_from(coords), dim })
    }

    pub fn new2(x: f64, y: f64) -> Point {
        Point { v: [x, y, 0.0], dim: Dim::Two }
    }

    pub fn new3(x: f64, y: f64, z: f64) -> Point {
        Point { v: [x, y, z], dim: Dim::Three }
    }

    pub fn origin(dim: Dim) -> Point {
        Point { v: [0.0; 3], dim }
    }

    pub(crate) fn from_raw(v: [f64; 3], dim: Dim) -> Point {
        debug_assert!(dim == Dim::Three || v[2] == 0.0);
        Point { v, dim }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn coords(&self) -> &[f64] {
        &self.v[..self.dim.len()]
    }

    pub fn x(&self) -> f64 {
        self.v[0]
    }

    pub fn y(&self) -> f64 {
        self.v[1]
    }

    pub fn z(&self) -> f64 {
        self.v[2]
    }

    pub(crate) fn raw(&self) -> [f64; 3] {
        self.v
    }

    pub fn dist(&self, other: &Point) -> f64 {
        norm(sub(self.v, other.v))
    }

    pub fn norm(&self) -> f64 {
        norm(self.v)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim.len()))?;
        for c in self.coords() {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// A unit vector of the ambient space; the argument of every support query.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction {
    v: [f64; 3],
    dim: Dim,
}

impl Direction {
    /// Builds a unit direction from arbitrary nonzero coordinates, normalizing them.
    pub fn new(coords: &[f64]) -> Result<Direction> {
        let dim = check_coords(coords)?;
        let v = raw_from(coords);
        let n = norm(v);
        if n < 1e-12 {
            return Err(Error::invalid("direction must be nonzero"));
        }
        Ok(Direction { v: scale(v, 1.0 / n), dim })
    }

    /// The planar direction (cos θ, sin θ).
    pub fn from_angle(theta: f64) -> Direction {
        let (s, c) = theta.sin_cos();
        Direction { v: [c, s, 0.0], dim: Dim::Two }
    }

    pub(crate) fn from_unit(v: [f64; 3], dim: Dim) -> Direction {
        debug_assert!((norm(v) - 1.0).abs() < 1e-9);
        Direction { v, dim }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn coords(&self) -> &[f64] {
        &self.v[..self.dim.len()]
    }

    pub fn x(&self) -> f64 {
        self.v[0]
    }

    pub fn y(&self) -> f64 {
        self.v[1]
    }

    pub fn z(&self) -> f64 {
        self.v[2]
    }

    pub(crate) fn raw(&self) -> [f64; 3] {
        self.v
    }

    pub fn negate(&self) -> Direction {
        Direction { v: [-self.v[0], -self.v[1], -self.v[2]], dim: self.dim }
    }

    /// Planar rotation by `alpha` (counterclockwise).
    pub(crate) fn rotated(&self, alpha: f64) -> Direction {
        debug_assert_eq!(self.dim, Dim::Two);
        Direction { v: rot2(self.v, alpha), dim: Dim::Two }
    }

    /// Embeds a planar direction as (u₁, u₂, 0) in space.
    pub fn embed3(&self) -> Direction {
        debug_assert_eq!(self.dim, Dim::Two);
        Direction { v: self.v, dim: Dim::Three }
    }

    pub fn dot(&self, p: &Point) -> f64 {
        dot(self.v, p.raw())
    }

    /// Angle to another direction, in radians.
    pub fn angle_to(&self, other: &Direction) -> f64 {
        dot(self.v, other.v).clamp(-1.0, 1.0).acos()
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim.len()))?;
        for c in self.coords() {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}
