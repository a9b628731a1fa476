//! Shared test oracles, all independent of the library's solver path.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use rand::Rng;

use cwlab_core::{Ball, Dim, Point};

/// Closed-form support function of the unit Reuleaux triangle with centers
/// (0,0), (1,0), (1/2, √3/2): piecewise arcs and vertex cones read off the
/// boundary structure by hand.
pub fn triangle_support_oracle(theta: f64) -> f64 {
    let t = theta.rem_euclid(2.0 * std::f64::consts::PI);
    let pi = std::f64::consts::PI;
    if t <= pi / 3.0 {
        1.0
    } else if t <= 2.0 * pi / 3.0 {
        (t - pi / 3.0).cos()
    } else if t <= pi {
        1.0 + t.cos()
    } else if t <= 4.0 * pi / 3.0 {
        0.0
    } else if t <= 5.0 * pi / 3.0 {
        1.0 + (t - pi / 3.0).cos()
    } else {
        t.cos()
    }
}

/// Constant width of the Reuleaux polygon on `2i+1` unit-circle vertices.
pub fn polygon_width_oracle(i: u32) -> f64 {
    2.0 * (std::f64::consts::PI * i as f64 / (2.0 * i as f64 + 1.0)).sin()
}

/// Hausdorff distance between that polygon and the closed unit disc.
pub fn polygon_disc_hausdorff_oracle(i: u32) -> f64 {
    2.0 - 2.0 * (std::f64::consts::PI / (2.0 * (2.0 * i as f64 + 1.0))).cos()
}

/// Least-squares ball fit by explicit normal equations and Gaussian
/// elimination — a deliberately separate route from the library's SVD fit.
/// Returns (center coords, radius, sup residual).
pub fn lstsq_ball_oracle(dirs: &[Vec<f64>], values: &[f64]) -> (Vec<f64>, f64, f64) {
    let dim = dirs[0].len();
    let n = dim + 1;
    let row = |j: usize, c: usize| if c < dim { dirs[j][c] } else { 1.0 };
    let mut ata = vec![vec![0.0; n]; n];
    let mut atb = vec![0.0; n];
    for j in 0..dirs.len() {
        for a in 0..n {
            for b in 0..n {
                ata[a][b] += row(j, a) * row(j, b);
            }
            atb[a] += row(j, a) * values[j];
        }
    }
    let sol = gauss_solve(&mut ata, &mut atb);
    let residual = (0..dirs.len())
        .map(|j| {
            let fit: f64 = (0..n).map(|c| row(j, c) * sol[c]).sum();
            (values[j] - fit).abs()
        })
        .fold(0.0, f64::max);
    (sol[..dim].to_vec(), sol[dim], residual)
}

fn gauss_solve(a: &mut [Vec<f64>], b: &mut [f64]) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        let d = a[col][col];
        assert!(d.abs() > 1e-14, "singular normal equations");
        for r in col + 1..n {
            let f = a[r][col] / d;
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let mut s = b[r];
        for c in r + 1..n {
            s -= a[r][c] * x[c];
        }
        x[r] = s / a[r][r];
    }
    x
}

/// Matrix rank by Gaussian elimination with full pivoting — independent of
/// the library's SVD rank.
pub fn rank_oracle(rows: &[Vec<f64>], tol: f64) -> usize {
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m[0].len();
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, &v| acc.max(v.abs()))
        .max(1e-300);
    let mut rank = 0;
    for _ in 0..nrows.min(ncols) {
        let mut best = (rank, rank, 0.0);
        for r in rank..nrows {
            for c in rank..ncols {
                if m[r][c].abs() > best.2 {
                    best = (r, c, m[r][c].abs());
                }
            }
        }
        if best.2 <= tol * scale {
            break;
        }
        let (pr, pc, _) = best;
        m.swap(rank, pr);
        for row in m.iter_mut() {
            row.swap(rank, pc);
        }
        let d = m[rank][rank];
        for r in rank + 1..nrows {
            let f = m[r][rank] / d;
            for c in rank..ncols {
                m[r][c] -= f * m[rank][c];
            }
        }
        rank += 1;
    }
    rank
}

/// A random ball system with a guaranteed common interior point.
pub fn random_feasible_system<R: Rng>(rng: &mut R, dim: Dim, n_balls: usize) -> Vec<Ball> {
    let anchor: Vec<f64> = (0..dim.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    (0..n_balls)
        .map(|_| {
            let offset: Vec<f64> = (0..dim.len()).map(|_| rng.gen_range(-1.5..1.5)).collect();
            let center: Vec<f64> = anchor.iter().zip(&offset).map(|(a, o)| a + o).collect();
            let dist = offset.iter().map(|o| o * o).sum::<f64>().sqrt();
            let radius = dist + rng.gen_range(0.05..1.0);
            Ball::new(Point::new(&center).unwrap(), radius).unwrap()
        })
        .collect()
}

/// A random unit direction.
pub fn random_direction<R: Rng>(rng: &mut R, dim: Dim) -> cwlab_core::Direction {
    loop {
        let v: Vec<f64> = (0..dim.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 {
            return cwlab_core::Direction::new(&v).unwrap();
        }
    }
}

/// Uniform sample inside a ball (for rejection sampling of feasible points).
pub fn random_point_in_ball<R: Rng>(rng: &mut R, ball: &Ball) -> Point {
    let dim = ball.center.dim();
    loop {
        let v: Vec<f64> = (0..dim.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n2 = v.iter().map(|x| x * x).sum::<f64>();
        if n2 <= 1.0 {
            let coords: Vec<f64> = ball
                .center
                .coords()
                .iter()
                .zip(&v)
                .map(|(c, x)| c + ball.radius * x)
                .collect();
            return Point::new(&coords).unwrap();
        }
    }
}

pub fn feasible(balls: &[Ball], p: &Point, tol: f64) -> bool {
    balls.iter().all(|b| p.dist(&b.center) <= b.radius + tol)
}
