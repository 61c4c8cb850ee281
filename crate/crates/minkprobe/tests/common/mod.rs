//! Shared oracles for the integration suites, independent of the library's
//! direction-net implementations: exact point-to-polytope distances give an
//! exact Hausdorff distance for polytopes.

use minkprobe::geometry::{Dim, Vector};
use minkprobe::polytope::Polytope;

/// Exact distance from a point to a convex polytope (zero inside).
pub fn point_to_body(p: Vector, body: &Polytope) -> f64 {
    match body.dim() {
        Dim::Two => {
            let verts = body.vertices();
            let n = verts.len();
            let mut inside = true;
            let mut best = f64::INFINITY;
            for i in 0..n {
                let a = verts[i];
                let b = verts[(i + 1) % n];
                let e = b - a;
                // outward side test for CCW polygons
                let cross = e.x * (p.y - a.y) - e.y * (p.x - a.x);
                if cross < 0.0 {
                    inside = false;
                }
                best = best.min(point_to_segment(p, a, b));
            }
            if inside {
                0.0
            } else {
                best
            }
        }
        Dim::Three => {
            let verts = body.vertices();
            let mut inside = true;
            let mut best = f64::INFINITY;
            for cycle in body.facets() {
                let base = cycle.iter().fold(Vector::ZERO, |acc, &i| acc + verts[i])
                    / cycle.len() as f64;
                let mut area_vec = Vector::ZERO;
                for k in 0..cycle.len() {
                    let a = verts[cycle[k]] - base;
                    let b = verts[cycle[(k + 1) % cycle.len()]] - base;
                    area_vec += a.cross(b);
                }
                let normal = area_vec / area_vec.norm();
                let dist = (p - base).dot(normal);
                if dist > 0.0 {
                    inside = false;
                }
                best = best.min(point_to_facet(p, verts, cycle, normal));
            }
            if inside {
                0.0
            } else {
                best
            }
        }
    }
}

fn point_to_segment(p: Vector, a: Vector, b: Vector) -> f64 {
    let e = b - a;
    let t = ((p - a).dot(e) / e.norm_sq()).clamp(0.0, 1.0);
    p.dist(a + e * t)
}

fn point_to_facet(p: Vector, verts: &[Vector], cycle: &[usize], normal: Vector) -> f64 {
    // projection onto the facet plane, then containment test edge by edge
    let base = verts[cycle[0]];
    let offset = (p - base).dot(normal);
    let proj = p - normal * offset;
    let mut inside = true;
    let mut best = f64::INFINITY;
    for k in 0..cycle.len() {
        let a = verts[cycle[k]];
        let b = verts[cycle[(k + 1) % cycle.len()]];
        let edge_out = (b - a).cross(normal);
        if (proj - a).dot(edge_out) > 0.0 {
            inside = false;
        }
        best = best.min(point_to_segment(p, a, b));
    }
    if inside {
        offset.abs()
    } else {
        best
    }
}

/// Exact Hausdorff distance between convex polytopes: the distance map of a
/// convex body is convex, so its maximum over the other body sits at a
/// vertex.
pub fn exact_hausdorff(k: &Polytope, l: &Polytope) -> f64 {
    let a = k
        .vertices()
        .iter()
        .map(|&v| point_to_body(v, l))
        .fold(0.0f64, f64::max);
    let b = l
        .vertices()
        .iter()
        .map(|&v| point_to_body(v, k))
        .fold(0.0f64, f64::max);
    a.max(b)
}
