//! Linear maximization over intersections of closed balls.
//!
//! Two routes compute `max ⟨x,u⟩` over `K = ∩ B(cᵢ, rᵢ)`:
//!
//! * an exact active-set enumeration for systems of at most
//!   [`EXACT_BALL_LIMIT`] balls — candidates come from single-ball tangency
//!   points, circle–circle (2D) or sphere–sphere (3D) intersections, and
//!   triple sphere intersections, filtered by feasibility;
//! * a certified iterative fallback for larger systems — bisection on the
//!   level value combined with cyclic projection onto the sets
//!   `B(cᵢ,rᵢ) ∩ {⟨x,u⟩ ≥ c}`, tightened by exact enumeration over the
//!   near-active subsystem, which supplies sound upper bounds.
//!
//! Both return a value together with a maximizer that is feasible within the
//! certificate tolerance. Ties between candidates within `1e-12` of the best
//! value are broken toward the lexicographically smallest point.

use crate::body::Ball;
use crate::error::{Error, Result};
use crate::vec::{self, Dim, Direction, Point};

/// Ball count up to which the exact active-set enumeration is used.
pub const EXACT_BALL_LIMIT: usize = 8;

const TIE_TOL: f64 = 1e-12;

/// Tolerances and budgets for the iterative fallback.
#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    /// Maximum constraint violation accepted in a feasibility certificate.
    pub feasibility_tol: f64,
    /// Maximum gap between the certified lower and upper level bounds.
    pub gap_tol: f64,
    /// Cyclic-projection passes allowed per bisection level.
    pub projection_budget: usize,
    /// Bisection levels allowed before giving up.
    pub bisection_budget: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            feasibility_tol: 1e-10,
            gap_tol: 1e-10,
            projection_budget: 600,
            bisection_budget: 200,
        }
    }
}

fn ball_violation(balls: &[Ball], x: [f64; 3]) -> f64 {
    balls
        .iter()
        .map(|b| (vec::norm(vec::sub(x, b.center.raw())) - b.radius).max(0.0))
        .fold(0.0, f64::max)
}

fn is_feasible(balls: &[Ball], x: [f64; 3], tol: f64) -> bool {
    balls
        .iter()
        .all(|b| vec::norm(vec::sub(x, b.center.raw())) <= b.radius + tol)
}

/// Cyclic projection onto the balls, starting from the centroid of centers.
///
/// Returns a point together with its final constraint violation; the caller
/// decides whether the residual certifies nonemptiness.
pub fn feasible_point(balls: &[Ball], budget: usize) -> (Point, f64) {
    let dim = balls[0].center.dim();
    let inv = 1.0 / balls.len() as f64;
    let mut x = [0.0; 3];
    for b in balls {
        x = vec::add(x, vec::scale(b.center.raw(), inv));
    }
    let mut res = ball_violation(balls, x);
    let mut last = f64::INFINITY;
    for pass in 0..budget {
        if res <= 1e-13 {
            break;
        }
        for b in balls {
            let d = vec::sub(x, b.center.raw());
            let n = vec::norm(d);
            if n > b.radius {
                x = vec::add(b.center.raw(), vec::scale(d, b.radius / n));
            }
        }
        res = ball_violation(balls, x);
        // A limit cycle (empty intersection) stops making progress.
        if pass % 16 == 15 {
            if res > 0.999_999 * last {
                break;
            }
            last = res;
        }
    }
    (Point::from_raw(x, dim), res)
}

/// Projection onto `B(c,r) ∩ {⟨x,u⟩ ≥ level}`.
///
/// The nearest point lies in the interior, on the sphere, on the plane, or on
/// the rim circle where both are active; all four candidates have closed
/// forms and the closest feasible one is the projection.
fn project_cap(p: [f64; 3], ball: &Ball, u: [f64; 3], level: f64, dim: Dim) -> [f64; 3] {
    let c = ball.center.raw();
    let r = ball.radius;
    let in_ball = |x: [f64; 3]| vec::norm(vec::sub(x, c)) <= r + 1e-13;
    let in_half = |x: [f64; 3]| vec::dot(x, u) >= level - 1e-13;

    if in_ball(p) && in_half(p) {
        return p;
    }

    let mut best: Option<([f64; 3], f64)> = None;
    let mut consider = |x: [f64; 3]| {
        let d = vec::norm(vec::sub(x, p));
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((x, d));
        }
    };

    // Sphere face.
    let dp = vec::sub(p, c);
    let n = vec::norm(dp);
    if n > 0.0 {
        let q = vec::add(c, vec::scale(dp, r / n));
        if in_half(q) {
            consider(q);
        }
    }
    // Plane face.
    let q = vec::add(p, vec::scale(u, level - vec::dot(p, u)));
    if in_ball(q) {
        consider(q);
    }
    // Rim: sphere ∩ plane.
    let off = level - vec::dot(c, u);
    let rho2 = r * r - off * off;
    if rho2 >= 0.0 {
        let rho = rho2.sqrt();
        let plane_c = vec::add(c, vec::scale(u, off));
        let mut w = vec::sub(p, plane_c);
        let w_u = vec::dot(w, u);
        w = vec::sub(w, vec::scale(u, w_u));
        if dim == Dim::Two {
            w[2] = 0.0;
        }
        let wn = vec::norm(w);
        let t = if wn > 1e-14 {
            vec::scale(w, 1.0 / wn)
        } else {
            orthogonal_unit(u, dim)
        };
        consider(vec::add(plane_c, vec::scale(t, rho)));
    }

    match best {
        Some((x, _)) => x,
        // Empty cap: fall back to the plane foot so the caller sees a residual.
        None => q,
    }
}

/// A deterministic unit vector orthogonal to `u`.
fn orthogonal_unit(u: [f64; 3], dim: Dim) -> [f64; 3] {
    if dim == Dim::Two {
        return [-u[1], u[0], 0.0];
    }
    let k = (0..3).min_by(|&a, &b| u[a].abs().partial_cmp(&u[b].abs()).unwrap()).unwrap();
    let mut e = [0.0; 3];
    e[k] = 1.0;
    let w = vec::sub(e, vec::scale(u, vec::dot(e, u)));
    vec::scale(w, 1.0 / vec::norm(w))
}

struct Candidates {
    best: Option<(f64, [f64; 3])>,
    u: [f64; 3],
}

impl Candidates {
    fn new(u: [f64; 3]) -> Self {
        Candidates { best: None, u }
    }

    fn offer(&mut self, balls: &[Ball], x: [f64; 3], tol: f64) {
        if !is_feasible(balls, x, tol) {
            return;
        }
        let value = vec::dot(x, self.u);
        match self.best {
            None => self.best = Some((value, x)),
            Some((bv, bx)) => {
                let wins = value > bv + TIE_TOL
                    || (value > bv - TIE_TOL && vec::lex_less(x, bx));
                if wins {
                    self.best = Some((value, x));
                }
            }
        }
    }
}

/// Exact support maximization by active-set enumeration (≤ 8 balls).
pub fn max_linear_over_balls_exact(balls: &[Ball], u: &Direction) -> Result<(f64, Point)> {
    check_system(balls, u)?;
    let dim = u.dim();
    let uv = u.raw();
    let tol = 1e-10;
    let mut cand = Candidates::new(uv);

    // Single active ball: x = c + r·u.
    for b in balls {
        cand.offer(balls, vec::add(b.center.raw(), vec::scale(uv, b.radius)), tol);
    }

    // Pairs: circle–circle points in the plane, max over the sphere–sphere
    // circle in space.
    for i in 0..balls.len() {
        for j in i + 1..balls.len() {
            let (a, b) = (&balls[i], &balls[j]);
            let axis = vec::sub(b.center.raw(), a.center.raw());
            let d = vec::norm(axis);
            if d < 1e-15 {
                continue;
            }
            let off = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
            let rho2 = a.radius * a.radius - off * off;
            if rho2 < -1e-14 {
                continue;
            }
            let rho = rho2.max(0.0).sqrt();
            let n = vec::scale(axis, 1.0 / d);
            let base = vec::add(a.center.raw(), vec::scale(n, off));
            if dim == Dim::Two {
                let t = [-n[1], n[0], 0.0];
                cand.offer(balls, vec::add(base, vec::scale(t, rho)), tol);
                cand.offer(balls, vec::sub(base, vec::scale(t, rho)), tol);
            } else {
                let mut ut = vec::sub(uv, vec::scale(n, vec::dot(uv, n)));
                let un = vec::norm(ut);
                if un > 1e-14 {
                    ut = vec::scale(ut, 1.0 / un);
                } else {
                    ut = orthogonal_unit(n, dim);
                }
                cand.offer(balls, vec::add(base, vec::scale(ut, rho)), tol);
            }
        }
    }

    // Triples (3D): intersection points of three spheres.
    if dim == Dim::Three {
        for i in 0..balls.len() {
            for j in i + 1..balls.len() {
                for k in j + 1..balls.len() {
                    for x in triple_points(&balls[i], &balls[j], &balls[k]) {
                        cand.offer(balls, x, tol);
                    }
                }
            }
        }
    }

    match cand.best {
        Some((value, x)) => Ok((value, Point::from_raw(finish_point(x, dim), dim))),
        None => Err(Error::SolverFailure {
            gap: f64::INFINITY,
            residual: ball_violation(balls, feasible_point(balls, 2000).0.raw()),
        }),
    }
}

/// Intersection points of three sphere boundaries (0, 1, or 2 points).
fn triple_points(a: &Ball, b: &Ball, c: &Ball) -> Vec<[f64; 3]> {
    let ca = a.center.raw();
    // Planes of pairwise power differences: 2⟨x, cⱼ−cᵢ⟩ = ‖cⱼ‖²−‖cᵢ‖²+rᵢ²−rⱼ².
    let n1 = vec::sub(b.center.raw(), ca);
    let n2 = vec::sub(c.center.raw(), ca);
    let b1 = 0.5
        * (vec::dot(b.center.raw(), b.center.raw()) - vec::dot(ca, ca) + a.radius * a.radius
            - b.radius * b.radius);
    let b2 = 0.5
        * (vec::dot(c.center.raw(), c.center.raw()) - vec::dot(ca, ca) + a.radius * a.radius
            - c.radius * c.radius);
    let dir = vec::cross(n1, n2);
    let dn = vec::dot(dir, dir);
    if dn < 1e-18 {
        return Vec::new();
    }
    // Line point solving both plane equations via the Gram system.
    let g11 = vec::dot(n1, n1);
    let g12 = vec::dot(n1, n2);
    let g22 = vec::dot(n2, n2);
    let det = g11 * g22 - g12 * g12;
    if det.abs() < 1e-18 {
        return Vec::new();
    }
    let alpha = (b1 * g22 - b2 * g12) / det;
    let beta = (b2 * g11 - b1 * g12) / det;
    let x0 = vec::add(vec::scale(n1, alpha), vec::scale(n2, beta));
    // Intersect the line x0 + t·dir with sphere a.
    let w = vec::sub(x0, ca);
    let qa = dn;
    let qb = 2.0 * vec::dot(w, dir);
    let qc = vec::dot(w, w) - a.radius * a.radius;
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < -1e-14 {
        return Vec::new();
    }
    let sq = disc.max(0.0).sqrt();
    let t1 = (-qb + sq) / (2.0 * qa);
    let t2 = (-qb - sq) / (2.0 * qa);
    let p1 = vec::add(x0, vec::scale(dir, t1));
    let p2 = vec::add(x0, vec::scale(dir, t2));
    if disc <= 1e-14 {
        vec![p1]
    } else {
        vec![p1, p2]
    }
}

fn finish_point(mut x: [f64; 3], dim: Dim) -> [f64; 3] {
    if dim == Dim::Two {
        x[2] = 0.0;
    }
    x
}

fn check_system(balls: &[Ball], u: &Direction) -> Result<()> {
    if balls.is_empty() {
        return Err(Error::invalid("ball system must be nonempty"));
    }
    if balls.iter().any(|b| b.center.dim() != u.dim()) {
        return Err(Error::invalid("ball system and direction dimensions differ"));
    }
    Ok(())
}

/// Certified iterative support maximization (any ball count).
///
/// Bisection on the level value `c`, with cyclic projection onto the sets
/// `B(cᵢ,rᵢ) ∩ {⟨x,u⟩ ≥ c}` deciding feasibility of each level. After every
/// level the near-active subsystem is solved exactly; its optimum is an upper
/// bound for the full system (a subset relaxation), and its maximizer closes
/// the gap exactly whenever it is feasible. Success requires a feasible point
/// within `feasibility_tol` and a sound upper bound within `gap_tol`.
pub fn max_linear_over_balls_iterative(
    balls: &[Ball],
    u: &Direction,
    cfg: &SolverConfig,
) -> Result<(f64, Point)> {
    check_system(balls, u)?;
    let dim = u.dim();
    let uv = u.raw();

    let (start, res) = feasible_point(balls, 4000);
    if res > 1e-8 {
        return Err(Error::EmptyBody { residual: res });
    }
    let mut best = start.raw();
    let mut lo = vec::dot(best, uv);
    // Single-ball supports give a sound initial upper bound.
    let mut hi_sound = balls
        .iter()
        .map(|b| vec::dot(b.center.raw(), uv) + b.radius)
        .fold(f64::INFINITY, f64::min);
    let mut hi_search = hi_sound;

    let polish = |x: [f64; 3], lo: &mut f64, best: &mut [f64; 3], hi_sound: &mut f64| {
        // Rank balls by slack at x and enumerate the tightest few exactly.
        let mut slack: Vec<(f64, usize)> = balls
            .iter()
            .enumerate()
            .map(|(i, b)| (b.radius - vec::norm(vec::sub(x, b.center.raw())), i))
            .collect();
        slack.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let take = slack.len().min(4);
        let subset: Vec<Ball> = slack[..take].iter().map(|&(_, i)| balls[i].clone()).collect();
        for len in 1..=take {
            if let Ok((v, p)) = max_linear_over_balls_exact(&subset[..len], u) {
                if v < *hi_sound {
                    *hi_sound = v;
                }
                if is_feasible(balls, p.raw(), 1e-10) {
                    let value = vec::dot(p.raw(), uv);
                    if value > *lo {
                        *lo = value;
                        *best = p.raw();
                    }
                }
            }
        }
    };

    polish(best, &mut lo, &mut best, &mut hi_sound);

    for _ in 0..cfg.bisection_budget {
        if hi_sound - lo <= cfg.gap_tol {
            break;
        }
        if hi_search - lo <= f64::EPSILON * (1.0 + lo.abs()) {
            // Search bracket exhausted without a sound certificate; one more
            // polish from the current iterate is the only remaining move.
            polish(best, &mut lo, &mut best, &mut hi_sound);
            break;
        }
        let level = 0.5 * (lo + hi_search.min(hi_sound));
        let mut x = best;
        let mut feasible = false;
        let mut prev = f64::INFINITY;
        for pass in 0..cfg.projection_budget {
            for b in balls {
                x = project_cap(x, b, uv, level, dim);
            }
            let r = ball_violation(balls, x).max(level - vec::dot(x, uv));
            if r <= 1e-12 {
                feasible = true;
                break;
            }
            // Declare the level infeasible once the residual stalls.
            if pass % 8 == 7 {
                if r > 0.9 * prev {
                    break;
                }
                prev = r;
            }
        }
        if feasible {
            let value = vec::dot(x, uv);
            if value > lo {
                lo = value;
                best = x;
            } else {
                lo = level;
            }
            polish(x, &mut lo, &mut best, &mut hi_sound);
        } else {
            hi_search = level;
            polish(x, &mut lo, &mut best, &mut hi_sound);
        }
    }

    let residual = ball_violation(balls, best);
    let gap = hi_sound - lo;
    if gap <= cfg.gap_tol && residual <= cfg.feasibility_tol {
        Ok((lo, Point::from_raw(finish_point(best, dim), dim)))
    } else {
        Err(Error::SolverFailure { gap, residual })
    }
}

/// Support maximization over a ball intersection, dispatching on ball count:
/// exact active-set enumeration up to [`EXACT_BALL_LIMIT`] balls, certified
/// iterative fallback beyond.
pub fn max_linear_over_balls(balls: &[Ball], u: &Direction) -> Result<(f64, Point)> {
    if balls.len() <= EXACT_BALL_LIMIT {
        max_linear_over_balls_exact(balls, u)
    } else {
        max_linear_over_balls_iterative(balls, u, &SolverConfig::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ball2(x: f64, y: f64, r: f64) -> Ball {
        Ball::new(Point::new2(x, y), r).unwrap()
    }

    #[test]
    fn single_ball_support() {
        let balls = vec![ball2(0.0, 0.0, 1.0)];
        let u = Direction::new(&[1.0, 0.0]).unwrap();
        let (v, p) = max_linear_over_balls(&balls, &u).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        assert!((p.x() - 1.0).abs() < 1e-12 && p.y().abs() < 1e-12);
    }

    #[test]
    fn two_circle_corner() {
        let balls = vec![ball2(0.0, 0.0, 1.0), ball2(1.0, 0.0, 1.0)];
        let u = Direction::new(&[0.0, 1.0]).unwrap();
        let (v, p) = max_linear_over_balls(&balls, &u).unwrap();
        assert!((v - 0.75f64.sqrt()).abs() < 1e-12);
        assert!((p.x() - 0.5).abs() < 1e-12);
        assert!((p.y() - 0.75f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn zero_radius_ball_is_a_point() {
        let balls = vec![ball2(0.25, -0.5, 0.0)];
        let u = Direction::new(&[0.6, 0.8]).unwrap();
        let (v, p) = max_linear_over_balls(&balls, &u).unwrap();
        assert!((v - (0.25 * 0.6 - 0.5 * 0.8)).abs() < 1e-12);
        assert_eq!(p, Point::new2(0.25, -0.5));
    }

    #[test]
    fn empty_intersection_detected() {
        let balls = vec![ball2(0.0, 0.0, 1.0), ball2(5.0, 0.0, 1.0)];
        let (_, res) = feasible_point(&balls, 4000);
        assert!(res > 1e-2);
        let u = Direction::new(&[1.0, 0.0]).unwrap();
        match max_linear_over_balls_iterative(&balls, &u, &SolverConfig::default()) {
            Err(Error::EmptyBody { residual }) => assert!(residual > 1e-2),
            other => panic!("expected EmptyBody, got {other:?}"),
        }
    }

    #[test]
    fn iterative_matches_exact_on_corner() {
        let balls = vec![ball2(0.0, 0.0, 1.0), ball2(1.0, 0.0, 1.0)];
        let u = Direction::new(&[0.3, 1.0]).unwrap();
        let (ve, _) = max_linear_over_balls_exact(&balls, &u).unwrap();
        let (vi, pi) =
            max_linear_over_balls_iterative(&balls, &u, &SolverConfig::default()).unwrap();
        assert!((ve - vi).abs() < 1e-9, "exact {ve} vs iterative {vi}");
        assert!(is_feasible(&balls, pi.raw(), 1e-9));
    }
}
