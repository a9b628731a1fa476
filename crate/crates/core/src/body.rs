//! Bodies as ball intersections composed through support-algebra operators.

use crate::error::{Error, Result};
use crate::solver;
use crate::vec::{self, Dim, Direction, Point};

/// A closed ball; zero radius is legal and denotes a point body.
#[derive(Clone, Debug, PartialEq)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Result<Ball> {
        if !radius.is_finite() || radius < 0.0 {
            return Err(Error::invalid("ball radius must be finite and nonnegative"));
        }
        Ok(Ball { center, radius })
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Node {
    Balls { dim: Dim, balls: Vec<Ball> },
    Scale { t: f64, inner: Box<Node> },
    Negate { inner: Box<Node> },
    Sum { left: Box<Node>, right: Box<Node> },
    Rotate { alpha: f64, inner: Box<Node> },
    Project { inner: Box<Node> },
}

/// A convex body with an exact support oracle.
///
/// Leaves are nonempty ball intersections (certified at construction); inner
/// nodes are scaling, reflection, Minkowski sum, planar rotation about the
/// origin, and orthogonal projection to the first two coordinates.
#[derive(Clone, Debug)]
pub struct Body {
    node: Node,
}

impl Body {
    /// Intersection of closed balls. Fails with [`Error::EmptyBody`] when the
    /// balls have no common point (decided by a cyclic-projection certificate).
    pub fn ball_intersection(dim: Dim, balls: Vec<Ball>) -> Result<Body> {
        if balls.is_empty() {
            return Err(Error::invalid("ball intersection needs at least one ball"));
        }
        if balls.iter().any(|b| b.center.dim() != dim) {
            return Err(Error::invalid("ball centers must match the ambient dimension"));
        }
        let (_, residual) = solver::feasible_point(&balls, 10_000);
        if residual > 1e-8 {
            return Err(Error::EmptyBody { residual });
        }
        Ok(Body { node: Node::Balls { dim, balls } })
    }

    /// A single closed ball.
    pub fn ball(center: Point, radius: f64) -> Result<Body> {
        let dim = center.dim();
        Body::ball_intersection(dim, vec![Ball::new(center, radius)?])
    }

    /// Scaling `t·K` for `t ≥ 0`; `t = 0` yields the origin point body.
    pub fn scale(self, t: f64) -> Result<Body> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::invalid("scale factor must be finite and nonnegative"));
        }
        Ok(Body { node: Node::Scale { t, inner: Box::new(self.node) } })
    }

    /// Reflection `−K` through the origin.
    pub fn negate(self) -> Body {
        Body { node: Node::Negate { inner: Box::new(self.node) } }
    }

    /// Minkowski sum `A + B`; support functions add pointwise.
    pub fn sum(a: Body, b: Body) -> Result<Body> {
        if a.dim() != b.dim() {
            return Err(Error::invalid("minkowski sum requires equal dimensions"));
        }
        Ok(Body { node: Node::Sum { left: Box::new(a.node), right: Box::new(b.node) } })
    }

    /// Counterclockwise rotation of a planar body by `alpha` about the origin.
    pub fn rotate(self, alpha: f64) -> Result<Body> {
        if self.dim() != Dim::Two {
            return Err(Error::invalid("rotation is defined for planar bodies only"));
        }
        if !alpha.is_finite() {
            return Err(Error::invalid("rotation angle must be finite"));
        }
        Ok(Body { node: Node::Rotate { alpha, inner: Box::new(self.node) } })
    }

    /// Orthogonal projection of a spatial body to the xy-plane.
    pub fn project(self) -> Result<Body> {
        if self.dim() != Dim::Three {
            return Err(Error::invalid("projection is defined for spatial bodies only"));
        }
        Ok(Body { node: Node::Project { inner: Box::new(self.node) } })
    }

    pub fn dim(&self) -> Dim {
        self.node.dim()
    }

    pub(crate) fn node(&self) -> &Node {
        &self.node
    }

    /// Support value `h_K(u) = max{⟨x,u⟩ : x ∈ K}`.
    pub fn support(&self, u: &Direction) -> Result<f64> {
        Ok(self.support_with_point(u)?.0)
    }

    /// A point of the body attaining the support value in direction `u`.
    pub fn support_point(&self, u: &Direction) -> Result<Point> {
        Ok(self.support_with_point(u)?.1)
    }

    /// Support value and an attaining point, computed in one pass.
    pub fn support_with_point(&self, u: &Direction) -> Result<(f64, Point)> {
        if u.dim() != self.dim() {
            return Err(Error::invalid("direction dimension does not match the body"));
        }
        self.node.support_rec(u)
    }

    /// Width in direction `u`: the distance `h(u) + h(−u)` between the two
    /// supporting hyperplanes orthogonal to `u`.
    pub fn width(&self, u: &Direction) -> Result<f64> {
        Ok(self.support(u)? + self.support(&u.negate())?)
    }

    /// Membership within `tol`, for trees whose nodes invert down to the ball
    /// constraints (rotation, reflection, positive scaling). Sum, projection,
    /// and zero scaling do not invert and report [`Error::UnsupportedQuery`].
    pub fn contains(&self, p: &Point, tol: f64) -> Result<bool> {
        if tol <= 0.0 {
            return Err(Error::invalid("membership tolerance must be positive"));
        }
        if p.dim() != self.dim() {
            return Err(Error::invalid("point dimension does not match the body"));
        }
        self.node.contains_rec(p.raw(), tol)
    }
}

impl Node {
    fn dim(&self) -> Dim {
        match self {
            Node::Balls { dim, .. } => *dim,
            Node::Scale { inner, .. } | Node::Negate { inner } | Node::Rotate { inner, .. } => {
                inner.dim()
            }
            Node::Sum { left, .. } => left.dim(),
            Node::Project { .. } => Dim::Two,
        }
    }

    fn support_rec(&self, u: &Direction) -> Result<(f64, Point)> {
        match self {
            Node::Balls { balls, .. } => solver::max_linear_over_balls(balls, u),
            Node::Scale { t, inner } => {
                let (v, p) = inner.support_rec(u)?;
                Ok((t * v, Point::from_raw(vec::scale(p.raw(), *t), p.dim())))
            }
            Node::Negate { inner } => {
                let (v, p) = inner.support_rec(&u.negate())?;
                Ok((v, Point::from_raw(vec::scale(p.raw(), -1.0), p.dim())))
            }
            Node::Sum { left, right } => {
                let (va, pa) = left.support_rec(u)?;
                let (vb, pb) = right.support_rec(u)?;
                Ok((va + vb, Point::from_raw(vec::add(pa.raw(), pb.raw()), pa.dim())))
            }
            Node::Rotate { alpha, inner } => {
                let (v, p) = inner.support_rec(&u.rotated(-alpha))?;
                Ok((v, Point::from_raw(vec::rot2(p.raw(), *alpha), Dim::Two)))
            }
            Node::Project { inner } => {
                let (v, p) = inner.support_rec(&u.embed3())?;
                let mut x = p.raw();
                x[2] = 0.0;
                Ok((v, Point::from_raw(x, Dim::Two)))
            }
        }
    }

    fn contains_rec(&self, x: [f64; 3], tol: f64) -> Result<bool> {
        match self {
            Node::Balls { balls, .. } => Ok(balls
                .iter()
                .all(|b| vec::norm(vec::sub(x, b.center.raw())) <= b.radius + tol)),
            Node::Scale { t, inner } => {
                if *t <= 0.0 {
                    return Err(Error::UnsupportedQuery { node: "scale(0)" });
                }
                inner.contains_rec(vec::scale(x, 1.0 / t), tol)
            }
            Node::Negate { inner } => inner.contains_rec(vec::scale(x, -1.0), tol),
            Node::Rotate { alpha, inner } => inner.contains_rec(vec::rot2(x, -alpha), tol),
            Node::Sum { .. } => Err(Error::UnsupportedQuery { node: "sum" }),
            Node::Project { .. } => Err(Error::UnsupportedQuery { node: "project" }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_ball2() -> Body {
        Body::ball(Point::new2(0.0, 0.0), 1.0).unwrap()
    }

    #[test]
    fn unit_ball_support_is_one() {
        let b = unit_ball2();
        for k in 0..16 {
            let u = Direction::from_angle(k as f64 * 0.39);
            assert!((b.support(&u).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn ball_support_point_formula() {
        let c = Point::new2(0.5, -1.5);
        let b = Body::ball(c, 2.0).unwrap();
        let u = Direction::new(&[1.0, 1.0]).unwrap();
        let p = b.support_point(&u).unwrap();
        assert!((p.x() - (0.5 + 2.0 * u.x())).abs() < 1e-12);
        assert!((p.y() - (-1.5 + 2.0 * u.y())).abs() < 1e-12);
    }

    #[test]
    fn empty_intersection_rejected_at_construction() {
        let balls = vec![
            Ball::new(Point::new2(0.0, 0.0), 1.0).unwrap(),
            Ball::new(Point::new2(3.0, 0.0), 1.0).unwrap(),
        ];
        match Body::ball_intersection(Dim::Two, balls) {
            Err(Error::EmptyBody { .. }) => {}
            other => panic!("expected EmptyBody, got {other:?}"),
        }
    }

    #[test]
    fn scale_zero_is_origin_point() {
        let b = unit_ball2().scale(0.0).unwrap();
        let u = Direction::from_angle(1.0);
        assert_eq!(b.support(&u).unwrap(), 0.0);
        assert_eq!(b.support_point(&u).unwrap(), Point::new2(0.0, 0.0));
    }

    #[test]
    fn negative_scale_rejected() {
        assert!(unit_ball2().scale(-0.5).is_err());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = unit_ball2();
        let b = Body::ball(Point::new3(0.0, 0.0, 0.0), 1.0).unwrap();
        assert!(Body::sum(a.clone(), b.clone()).is_err());
        assert!(b.clone().rotate(0.1).is_err());
        assert!(a.clone().project().is_err());
        let u3 = Direction::new(&[0.0, 0.0, 1.0]).unwrap();
        assert!(a.support(&u3).is_err());
    }

    #[test]
    fn width_is_symmetric() {
        let b = unit_ball2();
        let u = Direction::from_angle(0.7);
        assert_eq!(b.width(&u).unwrap(), b.width(&u.negate()).unwrap());
        assert!((b.width(&u).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn contains_inverts_motions() {
        let tri = crate::reuleaux::reuleaux_triangle(1.0).unwrap();
        let p = Point::new2(0.5, 3f64.sqrt() / 6.0);
        assert!(tri.contains(&p, 1e-12).unwrap());
        assert!(!tri.contains(&Point::new2(2.0, 0.0), 1e-12).unwrap());

        let moved = tri.clone().rotate(0.9).unwrap().scale(2.0).unwrap();
        let q = Point::from_raw(vec::scale(vec::rot2(p.raw(), 0.9), 2.0), Dim::Two);
        assert!(moved.contains(&q, 1e-9).unwrap());

        let s = Body::sum(tri.clone(), tri.clone().negate()).unwrap();
        match s.contains(&p, 1e-9) {
            Err(Error::UnsupportedQuery { node }) => assert_eq!(node, "sum"),
            other => panic!("expected UnsupportedQuery, got {other:?}"),
        }
    }
}
