//! Halfspace intersection via polar duality, Chebyshev centers, and the
//! positive-span test.
//!
//! The intersection `P(h) = {x : <x, n_i> <= h_i}` is computed by moving an
//! interior point to the origin, mapping each halfspace to the dual point
//! `n_i / h_i`, taking the convex hull of the duals, and reading primal
//! vertices off the hull facets. One hull primitive therefore powers both
//! the public operation and the volume-solver evaluations.

use std::fmt;

use crate::geometry::{Dim, Direction, Vector};
use crate::hull::{convex_hull_2d, convex_hull_3d, HullError};
use crate::lp::{LinearProgram, LpError, Relation};
use crate::polytope::{HalfspaceRep, Polytope, PolytopeError};

/// Facets thinner than this never make it into the output polytope.
pub const INACTIVE_AREA_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalfspaceError {
    /// The normals do not positively span the space.
    Unbounded,
    /// The offsets admit no interior point.
    Empty,
}

impl fmt::Display for HalfspaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfspaceError::Unbounded => {
                write!(f, "Unbounded: halfspace normals do not positively span the space")
            }
            HalfspaceError::Empty => {
                write!(f, "Empty: halfspace offsets admit no interior point")
            }
        }
    }
}

impl std::error::Error for HalfspaceError {}

/// Result of a halfspace intersection: the polytope plus the facet area
/// contributed by every input constraint (zero when inactive).
#[derive(Clone, Debug)]
pub struct Intersection {
    pub polytope: Polytope,
    pub facet_areas: Vec<f64>,
}

/// Intersects halfspaces into a polytope.
pub fn intersect(rep: &HalfspaceRep) -> Result<Intersection, HalfspaceError> {
    let d = rep.dim.as_usize();
    if rep.normals.len() < d + 1 || !positively_spans(rep.dim, &rep.normals) {
        return Err(HalfspaceError::Unbounded);
    }
    let (center, radius) = chebyshev_center(rep)?;
    let scale = rep.offsets.iter().fold(1.0f64, |m, h| m.max(h.abs()));
    if radius <= 1e-12 * scale {
        return Err(HalfspaceError::Empty);
    }
    let eval = dual_eval(rep, center).map_err(|_| HalfspaceError::Empty)?;
    let polytope = match rep.dim {
        Dim::Two => polygon_from_eval(&eval, center),
        Dim::Three => solid_from_eval(rep, &eval, center),
    }
    .map_err(|_| HalfspaceError::Empty)?;
    Ok(Intersection { polytope, facet_areas: eval.areas })
}

/// Exact (d-1)-areas of the facets of `P(h)`, the volume, and the vertex
/// centroid, evaluated around a known interior point. This is the light
/// path used inside the reconstruction solver; no polytope is built.
pub(crate) struct DualEval {
    pub areas: Vec<f64>,
    pub volume: f64,
    pub vertex_centroid: Vector,
    /// Diagonal of the area Jacobian, `dA_i/dh_i = -sum_j l_ij cot(theta_ij)`
    /// over the facet's edges (3D; zero for inactive facets and in 2D).
    /// Used as a Jacobi metric by the reconstruction solver.
    pub diag_curvature: Vec<f64>,
    /// Per input constraint, the primal facet cycle as positions (3D), or
    /// the two edge endpoints (2D). Used when a polytope must be assembled.
    cycles: Vec<Vec<Vector>>,
}

#[derive(Debug)]
pub(crate) enum DualEvalError {
    BadInterior,
    Degenerate,
}

pub(crate) fn dual_eval(rep: &HalfspaceRep, interior: Vector) -> Result<DualEval, DualEvalError> {
    let n = rep.normals.len();
    let mut shifted = Vec::with_capacity(n);
    for i in 0..n {
        let o = rep.offsets[i] - rep.normals[i].dot(interior);
        if o <= 0.0 || !o.is_finite() {
            return Err(DualEvalError::BadInterior);
        }
        shifted.push(o);
    }
    let duals: Vec<Vector> = (0..n).map(|i| rep.normals[i].vector() / shifted[i]).collect();

    match rep.dim {
        Dim::Two => {
            let hull = convex_hull_2d(&duals).map_err(|_| DualEvalError::Degenerate)?;
            let m = hull.len();
            // primal vertex for each adjacent dual pair
            let mut verts = Vec::with_capacity(m);
            for k in 0..m {
                let i = hull[k];
                let j = hull[(k + 1) % m];
                verts.push(intersect_lines(
                    rep.normals[i].vector(),
                    shifted[i],
                    rep.normals[j].vector(),
                    shifted[j],
                )
                .ok_or(DualEvalError::Degenerate)?);
            }
            let mut areas = vec![0.0; n];
            let mut cycles = vec![Vec::new(); n];
            let mut volume = 0.0;
            let mut centroid = Vector::ZERO;
            for k in 0..m {
                let i = hull[k];
                let prev = verts[(k + m - 1) % m];
                let cur = verts[k];
                areas[i] = prev.dist(cur);
                cycles[i] = vec![prev, cur];
                volume += shifted[i] * areas[i];
                centroid += cur;
            }
            Ok(DualEval {
                areas,
                volume: volume / 2.0,
                vertex_centroid: centroid / m as f64 + interior,
                diag_curvature: vec![0.0; n],
                cycles,
            })
        }
        Dim::Three => {
            let tris = convex_hull_3d(&duals).map_err(|_| DualEvalError::Degenerate)?;
            // primal vertex per hull triangle
            let mut primal: Vec<Vector> = Vec::with_capacity(tris.len());
            for &[a, b, c] in &tris {
                let normal = (duals[b] - duals[a]).cross(duals[c] - duals[a]);
                let off = normal.dot(duals[a]);
                if off.abs() < 1e-300 {
                    return Err(DualEvalError::Degenerate);
                }
                primal.push(normal / off);
            }
            // fan of triangles around each hull vertex, in rotation order:
            // out_edges[u] lists (v, t) for directed edges (u, v) of t
            let mut out_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
            for (t, &[a, b, c]) in tris.iter().enumerate() {
                out_edges[a].push((b, t));
                out_edges[b].push((c, t));
                out_edges[c].push((a, t));
            }

            let mut areas = vec![0.0; n];
            let mut diag_curvature = vec![0.0; n];
            let mut cycles: Vec<Vec<Vector>> = vec![Vec::new(); n];
            let mut volume = 0.0;
            let mut centroid_acc = Vector::ZERO;
            let mut centroid_count = 0usize;
            for i in 0..n {
                let Some(&(first, _)) = out_edges[i].first() else {
                    continue; // inactive constraint: dual point not on hull
                };
                let mut cycle = Vec::new();
                let mut fan_neighbors: Vec<usize> = Vec::new();
                let mut v = first;
                loop {
                    let Some(&(_, t)) = out_edges[i].iter().find(|&&(to, _)| to == v) else {
                        return Err(DualEvalError::Degenerate);
                    };
                    cycle.push(primal[t]);
                    fan_neighbors.push(v);
                    // advance: the edge (i, w) of triangle t where w follows i
                    let verts = tris[t];
                    let pos = verts.iter().position(|&x| x == i).unwrap();
                    let w = verts[(pos + 2) % 3];
                    v = w;
                    if v == first {
                        break;
                    }
                    if cycle.len() > tris.len() {
                        return Err(DualEvalError::Degenerate);
                    }
                }
                // facet-edge lengths against normal angles give the exact
                // diagonal of the area Jacobian
                let fan_len = cycle.len();
                for e in 0..fan_len {
                    let j = fan_neighbors[(e + 1) % fan_len];
                    let length = cycle[e].dist(cycle[(e + 1) % fan_len]);
                    let cos = rep.normals[i].dot(rep.normals[j].vector()).clamp(-1.0, 1.0);
                    let sin = (1.0 - cos * cos).sqrt().max(1e-12);
                    diag_curvature[i] += length * cos / sin;
                }
                // orient the cycle so its normal matches n_i
                let area_vec = newell(&cycle);
                let mut cycle = cycle;
                let mut area_vec = area_vec;
                if area_vec.dot(rep.normals[i].vector()) < 0.0 {
                    cycle.reverse();
                    area_vec = -area_vec;
                }
                let area = area_vec.norm();
                areas[i] = area;
                volume += shifted[i] * area;
                for p in &cycle {
                    centroid_acc += *p;
                    centroid_count += 1;
                }
                cycles[i] = cycle;
            }
            if centroid_count == 0 {
                return Err(DualEvalError::Degenerate);
            }
            Ok(DualEval {
                areas,
                volume: volume / 3.0,
                vertex_centroid: centroid_acc / centroid_count as f64 + interior,
                diag_curvature,
                cycles,
            })
        }
    }
}

fn newell(cycle: &[Vector]) -> Vector {
    let base = cycle.iter().fold(Vector::ZERO, |a, &v| a + v) / cycle.len() as f64;
    let mut acc = Vector::ZERO;
    for k in 0..cycle.len() {
        let a = cycle[k] - base;
        let b = cycle[(k + 1) % cycle.len()] - base;
        acc += a.cross(b);
    }
    acc * 0.5
}

fn intersect_lines(n1: Vector, h1: f64, n2: Vector, h2: f64) -> Option<Vector> {
    let det = n1.x * n2.y - n1.y * n2.x;
    if det.abs() < 1e-300 {
        return None;
    }
    Some(Vector::new2((h1 * n2.y - h2 * n1.y) / det, (n1.x * h2 - n2.x * h1) / det))
}

fn polygon_from_eval(eval: &DualEval, interior: Vector) -> Result<Polytope, PolytopeError> {
    // walk active edges in hull order; endpoints were stored per cycle
    let mut verts: Vec<Vector> = Vec::new();
    for cyc in eval.cycles.iter().filter(|c| !c.is_empty()) {
        verts.push(cyc[1] + interior);
    }
    let scale = verts.iter().map(|v| v.norm()).fold(1e-300f64, f64::max);
    let mut ordered: Vec<Vector> = Vec::new();
    // preserve rotation order: sort by the polar angle around the centroid
    let c = verts.iter().fold(Vector::ZERO, |a, &v| a + v) / verts.len() as f64;
    ordered.extend(verts.iter().copied());
    ordered.sort_by(|a, b| (*a - c).angle().total_cmp(&(*b - c).angle()));
    ordered.dedup_by(|a, b| a.dist(*b) <= 3e-10 * scale);
    if ordered.len() >= 2 && ordered[0].dist(*ordered.last().unwrap()) <= 3e-10 * scale {
        ordered.pop();
    }
    Polytope::polygon(ordered)
}

fn solid_from_eval(
    rep: &HalfspaceRep,
    eval: &DualEval,
    interior: Vector,
) -> Result<Polytope, PolytopeError> {
    let scale = eval
        .cycles
        .iter()
        .flatten()
        .map(|v| v.norm())
        .fold(1e-300f64, f64::max);
    let merge_tol = 3e-10 * scale;

    let mut vertices: Vec<Vector> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (i, cyc) in eval.cycles.iter().enumerate() {
        if cyc.is_empty() || eval.areas[i] < INACTIVE_AREA_TOL {
            continue;
        }
        let mut cycle_idx: Vec<usize> = Vec::with_capacity(cyc.len());
        for &p in cyc {
            let idx = match vertices.iter().position(|v| v.dist(p) <= merge_tol) {
                Some(j) => {
                    // running average keeps merged vertices centered
                    let k = counts[j] as f64;
                    vertices[j] = (vertices[j] * k + p) / (k + 1.0);
                    counts[j] += 1;
                    j
                }
                None => {
                    vertices.push(p);
                    counts.push(1);
                    vertices.len() - 1
                }
            };
            cycle_idx.push(idx);
        }
        cycle_idx.dedup();
        while cycle_idx.len() > 1 && cycle_idx[0] == *cycle_idx.last().unwrap() {
            cycle_idx.pop();
        }
        if cycle_idx.len() >= 3 {
            facets.push(cycle_idx);
        }
    }
    let vertices: Vec<Vector> = vertices.into_iter().map(|v| v + interior).collect();
    let _ = rep;
    Polytope::from_parts(Dim::Three, vertices, facets)
}

/// Chebyshev center and inradius of the intersection, from the dual program
/// `min h·λ  s.t.  Σ λ_i n_i = 0, Σ λ_i = 1, λ >= 0` whose value equals the
/// largest inscribed-ball radius.
pub fn chebyshev_center(rep: &HalfspaceRep) -> Result<(Vector, f64), HalfspaceError> {
    let n = rep.normals.len();
    let d = rep.dim.as_usize();
    let mut lp = LinearProgram::new(n);
    for i in 0..n {
        lp.set_objective(i, rep.offsets[i]);
    }
    for axis in 0..d {
        let coeffs: Vec<(usize, f64)> = (0..n)
            .map(|i| {
                let v = rep.normals[i].vector();
                (i, match axis {
                    0 => v.x,
                    1 => v.y,
                    _ => v.z,
                })
            })
            .collect();
        lp.add_row(coeffs, Relation::Eq, 0.0);
    }
    lp.add_row((0..n).map(|i| (i, 1.0)).collect(), Relation::Eq, 1.0);

    let sol = match lp.solve() {
        Ok(sol) => sol,
        // dual infeasible: 0 is outside the convex hull of the normals, so
        // the inradius is unbounded
        Err(LpError::Infeasible) => return Err(HalfspaceError::Unbounded),
        Err(_) => return Err(HalfspaceError::Empty),
    };
    let radius = sol.objective;

    // recover the center from the active constraints (complementary slack)
    let mut rows: Vec<[f64; 4]> = Vec::new();
    let mut rhs: Vec<f64> = Vec::new();
    for i in 0..n {
        if sol.x[i] > 1e-9 {
            let v = rep.normals[i].vector();
            rows.push([v.x, v.y, v.z, 1.0]);
            rhs.push(rep.offsets[i]);
        }
    }
    let center = solve_center(&rows, &rhs, d).unwrap_or(Vector::ZERO);
    // the certified radius at this center
    let attained = (0..n)
        .map(|i| rep.offsets[i] - rep.normals[i].dot(center))
        .fold(f64::INFINITY, f64::min);
    if attained >= radius - 1e-7 * (1.0 + radius.abs()) {
        Ok((center, attained.min(radius)))
    } else {
        // degenerate active set; fall back to the primal formulation
        chebyshev_center_primal(rep)
    }
}

fn solve_center(rows: &[[f64; 4]], rhs: &[f64], d: usize) -> Option<Vector> {
    // least-squares via normal equations, sized (d+1) x (d+1)
    let k = d + 1;
    let mut ata = vec![vec![0.0; k]; k];
    let mut atb = vec![0.0; k];
    let pick = |row: &[f64; 4], j: usize| if j < d { row[j] } else { row[3] };
    for (row, &b) in rows.iter().zip(rhs) {
        for i in 0..k {
            for j in 0..k {
                ata[i][j] += pick(row, i) * pick(row, j);
            }
            atb[i] += pick(row, i) * b;
        }
    }
    for i in 0..k {
        ata[i][i] += 1e-12;
    }
    let x = crate::lp::solve_small(&mut ata, &mut atb)?;
    Some(match d {
        2 => Vector::new2(x[0], x[1]),
        _ => Vector::new3(x[0], x[1], x[2]),
    })
}

fn chebyshev_center_primal(rep: &HalfspaceRep) -> Result<(Vector, f64), HalfspaceError> {
    // vars: c split into +/- parts, then t split; maximize t
    let n = rep.normals.len();
    let d = rep.dim.as_usize();
    let nv = 2 * d + 2;
    let mut lp = LinearProgram::new(nv);
    lp.set_objective(nv - 2, -1.0);
    lp.set_objective(nv - 1, 1.0);
    for i in 0..n {
        let v = rep.normals[i].vector();
        let comps = [v.x, v.y, v.z];
        let mut coeffs = Vec::with_capacity(nv);
        for j in 0..d {
            coeffs.push((2 * j, comps[j]));
            coeffs.push((2 * j + 1, -comps[j]));
        }
        coeffs.push((nv - 2, 1.0));
        coeffs.push((nv - 1, -1.0));
        lp.add_row(coeffs, Relation::Le, rep.offsets[i]);
    }
    match lp.solve() {
        Ok(sol) => {
            let comp = |j: usize| sol.x[2 * j] - sol.x[2 * j + 1];
            let center = match d {
                2 => Vector::new2(comp(0), comp(1)),
                _ => Vector::new3(comp(0), comp(1), comp(2)),
            };
            Ok((center, sol.x[nv - 2] - sol.x[nv - 1]))
        }
        Err(LpError::Unbounded) => Err(HalfspaceError::Unbounded),
        Err(_) => Err(HalfspaceError::Empty),
    }
}

/// Whether the directions positively span the whole space, i.e. every
/// vector is a nonnegative combination of them. Tested by expressing
/// `±e_j` as nonnegative combinations (2d feasibility programs).
pub fn positively_spans(dim: Dim, normals: &[Direction]) -> bool {
    let d = dim.as_usize();
    let n = normals.len();
    if n < d + 1 {
        return false;
    }
    for axis in 0..d {
        for sign in [1.0, -1.0] {
            let mut lp = LinearProgram::new(n);
            for row in 0..d {
                let coeffs: Vec<(usize, f64)> = (0..n)
                    .map(|i| {
                        let v = normals[i].vector();
                        (i, match row {
                            0 => v.x,
                            1 => v.y,
                            _ => v.z,
                        })
                    })
                    .collect();
                let target = if row == axis { sign } else { 0.0 };
                lp.add_row(coeffs, Relation::Eq, target);
            }
            if lp.solve().is_err() {
                return false;
            }
        }
    }
    true
}

/// Inradius of a polytope (Chebyshev radius of its halfspace form).
pub fn inradius(p: &Polytope) -> f64 {
    chebyshev_center(&p.to_halfspace_rep()).map(|(_, r)| r).unwrap_or(0.0)
}

/// Convex hull of a 3D point cloud as a polytope with merged coplanar
/// facets: hull triangle planes are deduplicated and re-intersected, so the
/// facet structure comes out clean.
pub fn polytope_from_points(dim: Dim, points: &[Vector]) -> Result<Polytope, PolytopeError> {
    match dim {
        Dim::Two => Polytope::polygon_hull(points),
        Dim::Three => {
            let tris = convex_hull_3d(points).map_err(|e| match e {
                HullError::Degenerate => PolytopeError::DegeneratePoints,
            })?;
            let scale = points.iter().map(|p| p.norm()).fold(1e-300f64, f64::max);
            let mut normals: Vec<Direction> = Vec::new();
            let mut offsets: Vec<f64> = Vec::new();
            for &[a, b, c] in &tris {
                let raw = (points[b] - points[a]).cross(points[c] - points[a]);
                let Some(dir) = Direction::normalize(raw) else { continue };
                let off = (dir.dot(points[a]) + dir.dot(points[b]) + dir.dot(points[c])) / 3.0;
                let dup = normals.iter().zip(&offsets).any(|(n, h)| {
                    n.chordal(dir) < 1e-9 && (h - off).abs() < 1e-9 * scale.max(1.0)
                });
                if !dup {
                    normals.push(dir);
                    offsets.push(off);
                }
            }
            let rep = HalfspaceRep { dim, normals, offsets };
            intersect(&rep)
                .map(|ix| ix.polytope)
                .map_err(|_| PolytopeError::DegeneratePoints)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir(x: f64, y: f64, z: f64) -> Direction {
        Direction::normalize(Vector::new3(x, y, z)).unwrap()
    }

    fn square_rep(offset: f64) -> HalfspaceRep {
        HalfspaceRep {
            dim: Dim::Two,
            normals: vec![
                dir(1.0, 0.0, 0.0),
                dir(0.0, 1.0, 0.0),
                dir(-1.0, 0.0, 0.0),
                dir(0.0, -1.0, 0.0),
            ],
            offsets: vec![offset; 4],
        }
    }

    #[test]
    fn unit_offsets_give_symmetric_square() {
        let ix = intersect(&square_rep(1.0)).unwrap();
        let p = &ix.polytope;
        assert_eq!(p.vertices().len(), 4);
        assert!((p.volume() - 4.0).abs() < 1e-9);
        for &a in &ix.facet_areas {
            assert!((a - 2.0).abs() < 1e-9);
        }
    }

    #[test]
    fn cube_from_halfspaces() {
        let rep = HalfspaceRep {
            dim: Dim::Three,
            normals: vec![
                dir(1.0, 0.0, 0.0),
                dir(-1.0, 0.0, 0.0),
                dir(0.0, 1.0, 0.0),
                dir(0.0, -1.0, 0.0),
                dir(0.0, 0.0, 1.0),
                dir(0.0, 0.0, -1.0),
            ],
            offsets: vec![0.5; 6],
        };
        let ix = intersect(&rep).unwrap();
        assert!((ix.polytope.volume() - 1.0).abs() < 1e-9);
        assert_eq!(ix.polytope.vertices().len(), 8);
        assert_eq!(ix.polytope.facets().len(), 6);
        for &a in &ix.facet_areas {
            assert!((a - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn redundant_halfspace_is_inactive() {
        let mut rep = square_rep(1.0);
        rep.normals.push(dir(1.0, 1.0, 0.0));
        rep.offsets.push(2.0);
        let ix = intersect(&rep).unwrap();
        assert_eq!(ix.polytope.vertices().len(), 4);
        assert_eq!(ix.facet_areas[4], 0.0);
        assert!((ix.polytope.volume() - 4.0).abs() < 1e-9);
    }

    #[test]
    fn touching_halfspace_has_negligible_area() {
        // fifth constraint passes exactly through the corner (1,1)
        let mut rep = square_rep(1.0);
        rep.normals.push(dir(1.0, 1.0, 0.0));
        rep.offsets.push(2.0f64.sqrt());
        let ix = intersect(&rep).unwrap();
        assert!(ix.facet_areas[4] < 1e-7, "corner-touching area {}", ix.facet_areas[4]);
    }

    #[test]
    fn unbounded_and_empty_cases() {
        // normals in a halfplane: slab, unbounded
        let rep = HalfspaceRep {
            dim: Dim::Two,
            normals: vec![dir(1.0, 0.0, 0.0), dir(-1.0, 0.0, 0.0), dir(0.0, 1.0, 0.0)],
            offsets: vec![1.0; 3],
        };
        assert_eq!(intersect(&rep).unwrap_err(), HalfspaceError::Unbounded);

        // contradictory slabs: empty
        let rep = HalfspaceRep {
            dim: Dim::Two,
            normals: vec![
                dir(1.0, 0.0, 0.0),
                dir(-1.0, 0.0, 0.0),
                dir(0.0, 1.0, 0.0),
                dir(0.0, -1.0, 0.0),
            ],
            offsets: vec![1.0, -2.0, 1.0, 1.0],
        };
        assert_eq!(intersect(&rep).unwrap_err(), HalfspaceError::Empty);
    }

    #[test]
    fn chebyshev_center_of_translated_square() {
        let mut rep = square_rep(1.0);
        // translate by (3, 4): h_i' = h_i + <n_i, t>
        let t = Vector::new2(3.0, 4.0);
        for i in 0..4 {
            rep.offsets[i] += rep.normals[i].dot(t);
        }
        let (c, r) = chebyshev_center(&rep).unwrap();
        assert!(c.dist(t) < 1e-7, "center {c:?}");
        assert!((r - 1.0).abs() < 1e-9);
    }

    #[test]
    fn chebyshev_radius_of_triangle() {
        // inradius of the 3-4-5 right triangle is 1
        let pts = vec![Vector::new2(0.0, 0.0), Vector::new2(4.0, 0.0), Vector::new2(0.0, 3.0)];
        let p = Polytope::polygon(pts).unwrap();
        assert!((inradius(&p) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn positive_span_detection() {
        let spanning = vec![
            dir(1.0, 0.0, 0.0),
            dir(0.0, 1.0, 0.0),
            dir(-1.0, -1.0, 0.0),
        ];
        assert!(positively_spans(Dim::Two, &spanning));
        let halfplane = vec![dir(1.0, 0.0, 0.0), dir(0.0, 1.0, 0.0), dir(1.0, 1.0, 0.0)];
        assert!(!positively_spans(Dim::Two, &halfplane));
        // 3D: all normals in the z = 0 plane
        let planar = vec![
            dir(1.0, 0.0, 0.0),
            dir(0.0, 1.0, 0.0),
            dir(-1.0, -1.0, 0.0),
            dir(0.0, -1.0, 0.0),
        ];
        assert!(!positively_spans(Dim::Three, &planar));
        let octa = vec![
            dir(1.0, 0.0, 0.0),
            dir(-1.0, 0.0, 0.0),
            dir(0.0, 1.0, 0.0),
            dir(0.0, -1.0, 0.0),
            dir(0.0, 0.0, 1.0),
            dir(0.0, 0.0, -1.0),
        ];
        assert!(positively_spans(Dim::Three, &octa));
    }

    #[test]
    fn round_trip_polytope_to_halfspaces_and_back() {
        for p in [Polytope::cube(), Polytope::tetrahedron(), Polytope::icosphere_body(1)] {
            let ix = intersect(&p.to_halfspace_rep()).unwrap();
            let q = ix.polytope;
            assert_eq!(q.vertices().len(), p.vertices().len());
            let scale = p.max_vertex_norm();
            for v in p.vertices() {
                let near = q.vertices().iter().any(|w| w.dist(*v) <= 1e-9 * scale.max(1.0));
                assert!(near, "vertex {v:?} lost in round trip");
            }
            assert!((q.volume() - p.volume()).abs() < 1e-9 * p.volume());
        }
    }

    #[test]
    fn point_cloud_with_coplanar_facets() {
        // cube corners plus face centers and an interior point
        let mut pts: Vec<Vector> = Polytope::cube().vertices().to_vec();
        pts.push(Vector::new3(0.5, 0.5, 0.0));
        pts.push(Vector::new3(0.5, 0.5, 1.0));
        pts.push(Vector::new3(0.5, 0.5, 0.5));
        let p = polytope_from_points(Dim::Three, &pts).unwrap();
        assert_eq!(p.vertices().len(), 8, "face centers must not become vertices");
        assert_eq!(p.facets().len(), 6, "coplanar triangles must merge");
        assert!((p.volume() - 1.0).abs() < 1e-9);
    }
}
