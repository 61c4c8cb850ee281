//! Minimum enclosing balls by randomized incremental construction
//! (Welzl's algorithm unrolled over support-set sizes).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Dim, Vector};

#[derive(Clone, Copy, Debug)]
pub struct Ball {
    pub center: Vector,
    pub radius: f64,
}

impl Ball {
    fn point(p: Vector) -> Ball {
        Ball { center: p, radius: 0.0 }
    }

    fn diameter(a: Vector, b: Vector) -> Ball {
        let center = (a + b) * 0.5;
        Ball { center, radius: center.dist(a) }
    }

    fn contains(&self, p: Vector, eps: f64) -> bool {
        self.center.dist(p) <= self.radius + eps
    }
}

/// Smallest ball enclosing all points. The shuffle seed is fixed so results
/// are reproducible.
pub fn min_enclosing_ball(points: &[Vector], dim: Dim) -> Ball {
    match points {
        [] => Ball { center: Vector::ZERO, radius: 0.0 },
        [p] => Ball::point(*p),
        _ => {
            let scale = points.iter().map(|p| p.norm()).fold(1.0f64, f64::max);
            let eps = scale * 1e-10;
            let mut order: Vec<usize> = (0..points.len()).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(0x6d45_4233);
            order.shuffle(&mut rng);

            let mut ball = Ball::diameter(points[order[0]], points[order[1]]);
            for i in 2..order.len() {
                let p = points[order[i]];
                if !ball.contains(p, eps) {
                    ball = with_one(points, &order[..i], p, dim, eps);
                }
            }
            ball
        }
    }
}

fn with_one(points: &[Vector], prefix: &[usize], p: Vector, dim: Dim, eps: f64) -> Ball {
    let mut ball = Ball::point(p);
    for (j, &je) in prefix.iter().enumerate() {
        let q = points[je];
        if !ball.contains(q, eps) {
            ball = with_two(points, &prefix[..j], p, q, dim, eps);
        }
    }
    ball
}

fn with_two(points: &[Vector], prefix: &[usize], p: Vector, q: Vector, dim: Dim, eps: f64) -> Ball {
    let mut ball = Ball::diameter(p, q);
    for (k, &ke) in prefix.iter().enumerate() {
        let r = points[ke];
        if !ball.contains(r, eps) {
            ball = with_three(points, &prefix[..k], p, q, r, dim, eps);
        }
    }
    ball
}

fn with_three(
    points: &[Vector],
    prefix: &[usize],
    p: Vector,
    q: Vector,
    r: Vector,
    dim: Dim,
    eps: f64,
) -> Ball {
    let mut ball = circumball_three(p, q, r);
    if dim == Dim::Two {
        return ball;
    }
    for &le in prefix.iter() {
        let s = points[le];
        if !ball.contains(s, eps) {
            if let Some(b) = circumsphere(p, q, r, s) {
                ball = b;
            }
        }
    }
    ball
}

/// Ball of the circle through three points (valid in 2D and 3D).
fn circumball_three(a: Vector, b: Vector, c: Vector) -> Ball {
    let u = b - a;
    let v = c - a;
    let uu = u.dot(u);
    let vv = v.dot(v);
    let uv = u.dot(v);
    let det = uu * vv - uv * uv;
    if det.abs() < 1e-18 * uu.max(vv).max(1e-300).powi(2) {
        // collinear: widest diameter ball
        let mut best = Ball::diameter(a, b);
        for (x, y) in [(a, c), (b, c)] {
            let cand = Ball::diameter(x, y);
            if cand.radius > best.radius {
                best = cand;
            }
        }
        return best;
    }
    let alpha = 0.5 * (uu * vv - vv * uv) / det;
    let beta = 0.5 * (uu * vv - uu * uv) / det;
    let center = a + u * alpha + v * beta;
    let radius = center.dist(a).max(center.dist(b)).max(center.dist(c));
    Ball { center, radius }
}

fn circumsphere(a: Vector, b: Vector, c: Vector, d: Vector) -> Option<Ball> {
    // 2 <x, b-a> = |b|^2-|a|^2 and cyclic: a 3x3 linear system.
    let rows = [b - a, c - a, d - a];
    let rhs = [
        0.5 * (b.norm_sq() - a.norm_sq()),
        0.5 * (c.norm_sq() - a.norm_sq()),
        0.5 * (d.norm_sq() - a.norm_sq()),
    ];
    let det = rows[0].dot(rows[1].cross(rows[2]));
    let scale = rows.iter().map(|r| r.norm()).fold(1e-300f64, f64::max);
    if det.abs() < 1e-14 * scale.powi(3) {
        return None;
    }
    let x = Vector::new3(rhs[0], rows[0].y, rows[0].z);
    let _ = x; // Cramer below, written out componentwise
    let col = |i: usize| match i {
        0 => Vector::new3(rows[0].x, rows[1].x, rows[2].x),
        1 => Vector::new3(rows[0].y, rows[1].y, rows[2].y),
        _ => Vector::new3(rows[0].z, rows[1].z, rows[2].z),
    };
    let rhs_v = Vector::new3(rhs[0], rhs[1], rhs[2]);
    let cx = rhs_v.dot(col(1).cross(col(2))) / det;
    let cy = col(0).dot(rhs_v.cross(col(2))) / det;
    let cz = col(0).dot(col(1).cross(rhs_v)) / det;
    let center = Vector::new3(cx, cy, cz);
    let radius = center
        .dist(a)
        .max(center.dist(b))
        .max(center.dist(c))
        .max(center.dist(d));
    Some(Ball { center, radius })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn square_corners() {
        let pts = vec![
            Vector::new2(0.0, 0.0),
            Vector::new2(1.0, 0.0),
            Vector::new2(1.0, 1.0),
            Vector::new2(0.0, 1.0),
        ];
        let b = min_enclosing_ball(&pts, Dim::Two);
        assert!(b.center.dist(Vector::new2(0.5, 0.5)) < 1e-12);
        assert!((b.radius - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn cube_corners() {
        let mut pts = Vec::new();
        for x in [0.0, 1.0] {
            for y in [0.0, 1.0] {
                for z in [0.0, 1.0] {
                    pts.push(Vector::new3(x, y, z));
                }
            }
        }
        let b = min_enclosing_ball(&pts, Dim::Three);
        assert!(b.center.dist(Vector::new3(0.5, 0.5, 0.5)) < 1e-12);
        assert!((b.radius - 0.75f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn two_point_and_collinear_sets() {
        let pts = vec![Vector::new2(-2.0, 0.0), Vector::new2(4.0, 0.0), Vector::new2(1.0, 0.0)];
        let b = min_enclosing_ball(&pts, Dim::Two);
        assert!((b.radius - 3.0).abs() < 1e-12);
        assert!(b.center.dist(Vector::new2(1.0, 0.0)) < 1e-12);
    }

    // Oracle: try the circumballs of all support subsets of size <= dim+1,
    // keep those containing everything, take the smallest.
    fn brute_force_radius(pts: &[Vector], dim: Dim) -> f64 {
        let n = pts.len();
        let eps = 1e-9;
        let mut best = f64::INFINITY;
        let mut consider = |ball: Ball| {
            if pts.iter().all(|&p| ball.contains(p, eps)) {
                best = best.min(ball.radius);
            }
        };
        for i in 0..n {
            consider(Ball::point(pts[i]));
            for j in (i + 1)..n {
                consider(Ball::diameter(pts[i], pts[j]));
                for k in (j + 1)..n {
                    consider(circumball_three(pts[i], pts[j], pts[k]));
                    if dim == Dim::Three {
                        for l in (k + 1)..n {
                            if let Some(b) = circumsphere(pts[i], pts[j], pts[k], pts[l]) {
                                consider(b);
                            }
                        }
                    }
                }
            }
        }
        best
    }

    #[test]
    fn matches_subset_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for case in 0..60 {
            let dim = if case % 2 == 0 { Dim::Two } else { Dim::Three };
            let n = rng.random_range(3..8usize);
            let pts: Vec<Vector> = (0..n)
                .map(|_| {
                    let z = if dim == Dim::Three { rng.random_range(-1.0..1.0) } else { 0.0 };
                    Vector::new3(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), z)
                })
                .collect();
            let fast = min_enclosing_ball(&pts, dim);
            let slow = brute_force_radius(&pts, dim);
            assert!(
                (fast.radius - slow).abs() < 1e-7,
                "case {case}: welzl {} vs oracle {}",
                fast.radius,
                slow
            );
            for &p in &pts {
                assert!(fast.contains(p, 1e-9));
            }
        }
    }
}
