//! Seeded random convex bodies and measures for experiments and tests.
//! Every generator is a pure function of its seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Dim, Direction, Vector};
use crate::halfspace::polytope_from_points;
use crate::measure::{random_direction, DiscreteSphericalMeasure};
use crate::polytope::Polytope;

/// Random convex polygon with an edge count in `[min_edges, max_edges]`
/// and the given circumradius (largest vertex norm).
pub fn random_polygon(seed: u64, min_edges: usize, max_edges: usize, circumradius: f64) -> Polytope {
    assert!(min_edges >= 3 && max_edges >= min_edges);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.random_range(min_edges..=max_edges);
    for _attempt in 0..40 {
        let mut angles: Vec<f64> = (0..target)
            .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Vector> = angles
            .iter()
            .map(|&t| {
                let r = rng.random_range(0.55..1.0);
                Vector::new2(r * t.cos(), r * t.sin())
            })
            .collect();
        if let Ok(p) = Polytope::polygon_hull(&pts) {
            if p.vertices().len() >= min_edges && p.vertices().len() <= max_edges {
                return p.scale(circumradius / p.max_vertex_norm());
            }
        }
    }
    // points on the circle itself are always in convex position
    let mut angles: Vec<f64> = (0..target)
        .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
        .collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    let pts: Vec<Vector> = angles
        .iter()
        .map(|&t| Vector::new2(t.cos(), t.sin()))
        .collect();
    Polytope::polygon_hull(&pts)
        .expect("circle points are in convex position")
        .scale(circumradius)
}

/// Random 3D polytope with a facet count in `[min_facets, max_facets]` and
/// the given circumradius.
pub fn random_polytope_3d(
    seed: u64,
    min_facets: usize,
    max_facets: usize,
    circumradius: f64,
) -> Polytope {
    assert!(min_facets >= 4 && max_facets >= min_facets);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // vertices on a sphere give 2m - 4 triangular facets in general position
    let target_facets = rng.random_range(min_facets..=max_facets);
    let m = ((target_facets + 4) / 2).max(4);
    for jitter in [true, false] {
        for _attempt in 0..40 {
            let pts: Vec<Vector> = (0..m)
                .map(|_| {
                    let r = if jitter { rng.random_range(0.75..1.0) } else { 1.0 };
                    random_direction(&mut rng, Dim::Three).vector() * r
                })
                .collect();
            if let Ok(p) = polytope_from_points(Dim::Three, &pts) {
                let f = p.facets().len();
                if f >= min_facets && f <= max_facets {
                    return p.scale(circumradius / p.max_vertex_norm());
                }
            }
        }
    }
    panic!("failed to draw a random polytope with {min_facets}..={max_facets} facets");
}

/// Random discrete measure with `atoms` atoms, uniform directions and
/// weights in `[0.05, 1)`.
pub fn random_measure(seed: u64, dim: Dim, atoms: usize) -> DiscreteSphericalMeasure {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DiscreteSphericalMeasure::new(
        dim,
        (0..atoms).map(|_| (random_direction(&mut rng, dim), rng.random_range(0.05..1.0))),
    )
}

/// Random probability measure (random measure rescaled to unit mass).
pub fn random_probability_measure(seed: u64, dim: Dim, atoms: usize) -> DiscreteSphericalMeasure {
    let m = random_measure(seed, dim, atoms);
    let mass = m.total_mass();
    m.scale_weights(1.0 / mass)
}
