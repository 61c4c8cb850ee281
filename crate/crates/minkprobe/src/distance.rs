//! Distances between discrete spherical measures: exact total variation,
//! exact bounded-Lipschitz via linear programming, and a certified
//! lower/upper sandwich for the convex-dual distance
//! `d_C(mu, nu) = sup { |integral of h_M d(mu - nu)| : M convex, M in B(0,1) }`.
//!
//! The lower bound evaluates explicit probe bodies (the unit ball, origin
//! segments over a refining direction net, user bodies rescaled into the
//! unit ball). The upper bound is the bounded-Lipschitz distance, optionally
//! sharpened by a heuristic packing of convex bodies; the net path carries
//! no covering guarantee and is flagged as heuristic.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Dim, Direction, Vector};
use crate::halfspace::polytope_from_points;
use crate::hausdorff::hausdorff;
use crate::lp::{LinearProgram, Relation};
use crate::measure::{DiscreteSphericalMeasure, MERGE_TOL};
use crate::polytope::Polytope;
use crate::sphere::{angle_net, icosphere};

/// A convex body contained in the unit ball, used as a test function in the
/// convex-dual distance.
#[derive(Clone, Debug)]
pub enum ProbeBody {
    /// Segment from the origin to `y`: `h(v) = max(<v, y>, 0)`.
    Segment(Direction),
    /// The unit ball: `h = 1`.
    UnitBall,
    /// A polytope, rescaled into the unit ball on construction.
    Body(Polytope),
}

impl ProbeBody {
    /// Wraps a polytope, rescaling it by `1/max |v|` so it sits inside the
    /// unit ball.
    pub fn body(p: Polytope) -> ProbeBody {
        let r = p.max_vertex_norm();
        if r > 1.0 {
            ProbeBody::Body(p.scale(1.0 / r))
        } else {
            ProbeBody::Body(p)
        }
    }

    pub fn support(&self, v: Direction) -> f64 {
        match self {
            ProbeBody::Segment(y) => y.dot(v.vector()).max(0.0),
            ProbeBody::UnitBall => 1.0,
            ProbeBody::Body(p) => p.support(v),
        }
    }
}

impl fmt::Display for ProbeBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeBody::Segment(y) => {
                let v = y.vector();
                if v.z == 0.0 {
                    write!(f, "segment y=[{},{}]", v.x, v.y)
                } else {
                    write!(f, "segment y=[{},{},{}]", v.x, v.y, v.z)
                }
            }
            ProbeBody::UnitBall => write!(f, "unit ball"),
            ProbeBody::Body(p) => write!(f, "body with {} vertices", p.vertices().len()),
        }
    }
}

/// How a convex-dual upper bound was produced.
#[derive(Clone, Debug, PartialEq)]
pub enum UpperCertificate {
    /// `d_C <= d_bL`: always sound.
    BoundedLipschitz,
    /// Net evaluation plus slack; sound only up to the heuristic net's
    /// coverage.
    HeuristicNet { net_epsilon: f64 },
}

impl fmt::Display for UpperCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperCertificate::BoundedLipschitz => write!(f, "bounded-Lipschitz bound"),
            UpperCertificate::HeuristicNet { net_epsilon } => {
                write!(f, "heuristic net bound (epsilon = {net_epsilon})")
            }
        }
    }
}

/// Certified interval for a convex-dual distance value.
#[derive(Clone, Debug)]
pub struct DistanceSandwich {
    pub lower: f64,
    pub upper: f64,
    pub lower_witness: ProbeBody,
    pub upper_certificate: UpperCertificate,
}

/// Atoms of `mu - nu` over the merged direction set.
pub fn signed_difference(
    a: &DiscreteSphericalMeasure,
    b: &DiscreteSphericalMeasure,
) -> Vec<(Direction, f64)> {
    assert_eq!(a.dim(), b.dim(), "measures must share a dimension");
    let mut entries: Vec<(Direction, f64)> = a
        .atoms()
        .iter()
        .map(|at| (at.direction, at.weight))
        .chain(b.atoms().iter().map(|at| (at.direction, -at.weight)))
        .collect();
    entries.sort_by(|x, y| {
        let (u, v) = (x.0.vector(), y.0.vector());
        u.x.total_cmp(&v.x).then(u.y.total_cmp(&v.y)).then(u.z.total_cmp(&v.z))
    });
    let mut merged: Vec<(Direction, f64)> = Vec::with_capacity(entries.len());
    for (d, w) in entries {
        match merged.last_mut() {
            Some((last, lw)) if last.chordal(d) < MERGE_TOL => *lw += w,
            _ => merged.push((d, w)),
        }
    }
    merged.retain(|&(_, w)| w != 0.0);
    merged
}

/// Total variation distance: the larger of the positive and negative part
/// masses of `mu - nu`.
pub fn d_tv(a: &DiscreteSphericalMeasure, b: &DiscreteSphericalMeasure) -> f64 {
    let diff = signed_difference(a, b);
    let pos: f64 = diff.iter().map(|&(_, c)| c.max(0.0)).sum();
    let neg: f64 = diff.iter().map(|&(_, c)| (-c).max(0.0)).sum();
    pos.max(neg)
}

/// Atom cap for the exact bounded-Lipschitz program; larger inputs are
/// coarsened by angular binning and the induced error bound is added to the
/// returned value (keeping it a sound upper bound for the sandwich).
pub const BL_ATOM_CAP: usize = 2000;

/// Bounded-Lipschitz distance: the exact maximum of
/// `sum c_j f_j` over `|f_j| <= 1` and `|f_j - f_k| <= |v_j - v_k|`
/// (chordal), solved with lazily generated pair constraints. Any feasible
/// `f` on the atoms extends to the sphere (McShane extension clipped to
/// [-1, 1]), so the finite program equals the supremum over BL functions.
pub fn d_bl(a: &DiscreteSphericalMeasure, b: &DiscreteSphericalMeasure) -> f64 {
    let (a, tol_a) = coarsen(a, BL_ATOM_CAP);
    let (b, tol_b) = coarsen(b, BL_ATOM_CAP);
    let diff = signed_difference(&a, &b);
    if diff.is_empty() {
        return 0.0;
    }
    bl_program(&diff) + tol_a + tol_b
}

fn bl_program(diff: &[(Direction, f64)]) -> f64 {
    let m = diff.len();
    let weights: Vec<f64> = diff.iter().map(|&(_, c)| c).collect();
    let offset: f64 = weights.iter().sum();

    // substitute g_j = f_j + 1 in [0, 2]; maximize sum c_j g_j
    let mut pairs: Vec<(usize, usize, f64)> = Vec::new();
    let mut solve = |pairs: &[(usize, usize, f64)]| -> Option<Vec<f64>> {
        let mut lp = LinearProgram::new(m);
        for (j, &c) in weights.iter().enumerate() {
            lp.set_objective(j, -c);
        }
        for j in 0..m {
            lp.add_row(vec![(j, 1.0)], Relation::Le, 2.0);
        }
        for &(j, k, dist) in pairs {
            lp.add_row(vec![(j, 1.0), (k, -1.0)], Relation::Le, dist);
            lp.add_row(vec![(j, -1.0), (k, 1.0)], Relation::Le, dist);
        }
        lp.solve().ok().map(|s| s.x)
    };

    let mut g = match solve(&pairs) {
        Some(g) => g,
        None => return 0.0,
    };
    for _round in 0..200 {
        let mut violated: Vec<(usize, usize, f64, f64)> = Vec::new();
        for j in 0..m {
            for k in (j + 1)..m {
                let dist = diff[j].0.chordal(diff[k].0);
                let gap = (g[j] - g[k]).abs() - dist;
                if gap > 1e-9 {
                    violated.push((j, k, dist, gap));
                }
            }
        }
        if violated.is_empty() {
            break;
        }
        violated.sort_by(|x, y| y.3.total_cmp(&x.3));
        let take = violated.len().min((m / 2).max(64));
        for &(j, k, dist, _) in violated.iter().take(take) {
            pairs.push((j, k, dist));
        }
        g = match solve(&pairs) {
            Some(g) => g,
            None => break,
        };
    }
    let value: f64 = weights.iter().zip(&g).map(|(c, gj)| c * gj).sum::<f64>() - offset;
    value.max(0.0)
}

/// Reduces a measure to at most `cap` atoms by snapping directions to an
/// angular net, returning the coarsened measure and a bound on the induced
/// bounded-Lipschitz error (`max move * mass`).
fn coarsen(m: &DiscreteSphericalMeasure, cap: usize) -> (DiscreteSphericalMeasure, f64) {
    if m.atoms().len() <= cap {
        return (m.clone(), 0.0);
    }
    match m.dim() {
        Dim::Two => {
            let bins = cap;
            let step = std::f64::consts::TAU / bins as f64;
            let snapped = m.atoms().iter().map(|a| {
                let theta = (a.direction.angle().rem_euclid(std::f64::consts::TAU) / step).round()
                    * step;
                (Direction::from_angle(theta), a.weight)
            });
            let coarse = DiscreteSphericalMeasure::new(m.dim(), snapped).canonical();
            (coarse, step * m.total_mass())
        }
        Dim::Three => {
            // finest icosphere level under the cap
            let level = (0..=5).rev().find(|&l| icosphere(l).vertices.len() <= cap).unwrap_or(0);
            let mesh = icosphere(level);
            let snapped = m.atoms().iter().map(|a| {
                let best = mesh
                    .vertices
                    .iter()
                    .min_by(|x, y| x.chordal(a.direction).total_cmp(&y.chordal(a.direction)))
                    .unwrap();
                (*best, a.weight)
            });
            let coarse = DiscreteSphericalMeasure::new(m.dim(), snapped).canonical();
            (coarse, mesh.max_edge() * m.total_mass())
        }
    }
}

/// Convex-dual lower bound over an explicit probe list: the best
/// `|integral of h_P d(mu - nu)|` and the index of the winning probe.
pub fn d_c_lower_with_probes(
    a: &DiscreteSphericalMeasure,
    b: &DiscreteSphericalMeasure,
    probes: &[ProbeBody],
) -> (f64, usize) {
    let diff = signed_difference(a, b);
    let mut best = (0.0f64, 0usize);
    for (i, p) in probes.iter().enumerate() {
        let v = probe_value(&diff, p);
        if v > best.0 {
            best = (v, i);
        }
    }
    best
}

fn probe_value(diff: &[(Direction, f64)], p: &ProbeBody) -> f64 {
    diff.iter().map(|&(v, c)| c * p.support(v)).sum::<f64>().abs()
}

fn segment_net_best(diff: &[(Direction, f64)], dirs: &[Direction]) -> (f64, Direction) {
    let mut best_val = -1.0;
    let mut best_dir = dirs[0];
    for &y in dirs {
        let v = diff
            .iter()
            .map(|&(n, c)| c * y.dot(n.vector()).max(0.0))
            .sum::<f64>()
            .abs();
        if v > best_val {
            best_val = v;
            best_dir = y;
        }
    }
    (best_val, best_dir)
}

/// Convex-dual lower bound over the default probe family: the unit ball,
/// origin segments on a refining direction net (density doubles until the
/// bound moves by less than 1e-4, at most four doublings), plus any
/// user-supplied bodies rescaled into the unit ball.
pub fn d_c_lower(
    a: &DiscreteSphericalMeasure,
    b: &DiscreteSphericalMeasure,
    extra: &[ProbeBody],
) -> (f64, ProbeBody) {
    let diff = signed_difference(a, b);
    let mut best_val = probe_value(&diff, &ProbeBody::UnitBall);
    let mut best_probe = ProbeBody::UnitBall;
    if diff.is_empty() {
        return (0.0, best_probe);
    }

    match a.dim() {
        Dim::Two => {
            let mut n = 1024;
            let mut prev = -1.0;
            loop {
                let (v, y) = segment_net_best(&diff, &angle_net(n));
                if v > best_val {
                    best_val = v;
                    best_probe = ProbeBody::Segment(y);
                }
                if n >= 16384 || (prev >= 0.0 && v - prev < 1e-4) {
                    break;
                }
                prev = v;
                n *= 2;
            }
        }
        Dim::Three => {
            let mut prev = -1.0;
            for level in 4..=6 {
                let (v, y) = segment_net_best(&diff, &icosphere(level).vertices);
                if v > best_val {
                    best_val = v;
                    best_probe = ProbeBody::Segment(y);
                }
                if prev >= 0.0 && v - prev < 1e-4 {
                    break;
                }
                prev = v;
            }
        }
    }

    for p in extra {
        let rescaled = match p {
            ProbeBody::Body(poly) => ProbeBody::body(poly.clone()),
            other => other.clone(),
        };
        let v = probe_value(&diff, &rescaled);
        if v > best_val {
            best_val = v;
            best_probe = rescaled;
        }
    }
    (best_val, best_probe)
}

/// Convex-dual upper bound: the bounded-Lipschitz distance, optionally
/// sharpened by the heuristic net (`max_P |integral| + eps (mass_a +
/// mass_b)`, flagged as heuristic since the net carries no covering
/// guarantee).
pub fn d_c_upper(
    a: &DiscreteSphericalMeasure,
    b: &DiscreteSphericalMeasure,
    net_epsilon: f64,
) -> (f64, UpperCertificate) {
    let bl = d_bl(a, b);
    let diff = signed_difference(a, b);
    let net = bronshtein_net(a.dim(), net_epsilon, NET_SEED);
    let mut net_best = 0.0f64;
    for p in &net {
        net_best = net_best.max(probe_value(&diff, p));
    }
    let slack = net_epsilon * (a.total_mass() + b.total_mass());
    let net_bound = net_best + slack;
    if net_bound < bl {
        (net_bound, UpperCertificate::HeuristicNet { net_epsilon })
    } else {
        (bl, UpperCertificate::BoundedLipschitz)
    }
}

/// Certified sandwich `lower <= d_C <= upper`. A heuristic net bound that
/// falls below the certified lower bound is discarded in favor of the
/// bounded-Lipschitz bound.
pub fn sandwich(
    a: &DiscreteSphericalMeasure,
    b: &DiscreteSphericalMeasure,
    net_epsilon: f64,
) -> DistanceSandwich {
    let (lower, lower_witness) = d_c_lower(a, b, &[]);
    let (mut upper, mut upper_certificate) = d_c_upper(a, b, net_epsilon);
    if upper < lower {
        upper = d_bl(a, b).max(lower);
        upper_certificate = UpperCertificate::BoundedLipschitz;
    }
    DistanceSandwich { lower, upper, lower_witness, upper_certificate }
}

const NET_SEED: u64 = 0x62726f6e;

/// Heuristic packing of convex bodies inside the unit ball at Hausdorff
/// separation `epsilon`: convex hulls of random subsets of an
/// `epsilon`-pitch grid, thinned by greedy farthest-point selection. No
/// covering guarantee is asserted; the cardinality is what callers compare
/// against the theoretical covering-number growth.
pub fn bronshtein_net(dim: Dim, epsilon: f64, seed: u64) -> Vec<ProbeBody> {
    assert!(epsilon > 0.0 && epsilon <= 1.0, "net epsilon must lie in (0, 1]");
    let mut net: Vec<ProbeBody> = vec![ProbeBody::UnitBall];
    if epsilon >= 1.0 {
        return net;
    }
    // Candidate bodies are hulls of random subsets of the outer grid band:
    // for inscribed bodies, only angular gaps of order sqrt(epsilon) move
    // the Hausdorff distance by epsilon (the sagitta), which is what makes
    // the packing cardinality scale like the covering-number exponent.
    let grid = ball_grid(dim, epsilon);
    let band: Vec<Vector> = grid
        .iter()
        .copied()
        .filter(|p| p.norm() >= 1.0 - epsilon)
        .collect();
    if band.len() < dim.as_usize() + 1 {
        return net;
    }
    let include_prob = match dim {
        Dim::Two => (0.7 * epsilon.sqrt()).clamp(0.05, 0.9),
        Dim::Three => (0.5 * epsilon).clamp(0.05, 0.9),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool_size = match dim {
        Dim::Two => 3000,
        Dim::Three => 600,
    };
    let mut pool: Vec<Polytope> = Vec::with_capacity(pool_size);
    let mut attempts = 0;
    while pool.len() < pool_size && attempts < pool_size * 8 {
        attempts += 1;
        let pts: Vec<Vector> = band
            .iter()
            .copied()
            .filter(|_| rng.random_range(0.0..1.0) < include_prob)
            .collect();
        if pts.len() < dim.as_usize() + 1 {
            continue;
        }
        if let Ok(p) = polytope_from_points(dim, &pts) {
            pool.push(p);
        }
    }
    if pool.is_empty() {
        return net;
    }

    // greedy farthest-point packing under an inexpensive Hausdorff estimate
    let dirs: Vec<Direction> = match dim {
        Dim::Two => angle_net(64),
        Dim::Three => icosphere(2).vertices.clone(),
    };
    let est = |a: &Polytope, b: &Polytope| -> f64 {
        dirs.iter()
            .map(|&u| (a.support(u) - b.support(u)).abs())
            .fold(0.0f64, f64::max)
    };
    let ball_dist = |p: &Polytope| -> f64 {
        dirs.iter().map(|&u| (1.0 - p.support(u)).abs()).fold(0.0f64, f64::max)
    };

    let mut min_dist: Vec<f64> = pool.iter().map(ball_dist).collect();
    loop {
        let (idx, &dist) = min_dist
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.total_cmp(y.1))
            .unwrap();
        if dist < epsilon {
            break;
        }
        let chosen = pool[idx].clone();
        for (i, p) in pool.iter().enumerate() {
            min_dist[i] = min_dist[i].min(est(p, &chosen));
        }
        net.push(ProbeBody::Body(chosen));
    }
    net
}

fn ball_grid(dim: Dim, pitch: f64) -> Vec<Vector> {
    let steps = (1.0 / pitch).floor() as i64;
    let mut out = Vec::new();
    match dim {
        Dim::Two => {
            for i in -steps..=steps {
                for j in -steps..=steps {
                    let v = Vector::new2(i as f64 * pitch, j as f64 * pitch);
                    if v.norm() <= 1.0 {
                        out.push(v);
                    }
                }
            }
        }
        Dim::Three => {
            for i in -steps..=steps {
                for j in -steps..=steps {
                    for k in -steps..=steps {
                        let v = Vector::new3(i as f64 * pitch, j as f64 * pitch, k as f64 * pitch);
                        if v.norm() <= 1.0 {
                            out.push(v);
                        }
                    }
                }
            }
        }
    }
    out
}
