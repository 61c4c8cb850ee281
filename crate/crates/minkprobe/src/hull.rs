//! Convex hulls: monotone chain in the plane, quickhull in space.
//!
//! The 3D hull is the single geometric primitive behind halfspace
//! intersection (via polar duality) and therefore behind the volume solver,
//! so it sits on the hot path of every reconstruction: faces carry explicit
//! neighbor links so expansions never rebuild global edge maps.

use crate::geometry::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HullError {
    /// Points span less than the full dimension.
    Degenerate,
}

impl std::fmt::Display for HullError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HullError::Degenerate => write!(f, "Degenerate: points do not span the space"),
        }
    }
}

impl std::error::Error for HullError {}

/// Indices of the extreme points in counterclockwise order.
///
/// Collinear points on the boundary are dropped, so the result is a strictly
/// convex polygon whenever the input spans the plane.
pub fn convex_hull_2d(points: &[Vector]) -> Result<Vec<usize>, HullError> {
    let scale = points
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(0.0f64, f64::max)
        .max(1e-300);
    let eps = scale * scale * 1e-14;

    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[a]
            .x
            .total_cmp(&points[b].x)
            .then(points[a].y.total_cmp(&points[b].y))
    });
    order.dedup_by(|&mut a, &mut b| points[a].dist(points[b]) == 0.0);
    if order.len() < 3 {
        return Err(HullError::Degenerate);
    }

    let cross = |o: usize, a: usize, b: usize| -> f64 {
        let u = points[a] - points[o];
        let v = points[b] - points[o];
        u.x * v.y - u.y * v.x
    };

    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], i) <= eps {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], i) <= eps {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(HullError::Degenerate);
    }
    Ok(lower)
}

/// Outward-oriented triangles of the 3D convex hull, as indices into the
/// input slice. The triangulation may place extra vertices on faces when
/// the input has points lying exactly on a facet; downstream consumers only
/// rely on the triangle planes and the vertex set.
pub fn convex_hull_3d(points: &[Vector]) -> Result<Vec<[usize; 3]>, HullError> {
    QuickHull::run(points)
}

struct Face {
    verts: [usize; 3],
    /// `neighbors[e]` is the face across edge `(verts[e], verts[e+1])`.
    neighbors: [usize; 3],
    normal: Vector,
    offset: f64,
    outside: Vec<usize>,
    alive: bool,
}

impl Face {
    fn edge_slot(&self, a: usize, b: usize) -> usize {
        for e in 0..3 {
            if self.verts[e] == a && self.verts[(e + 1) % 3] == b {
                return e;
            }
        }
        unreachable!("edge ({a},{b}) not on face");
    }
}

struct QuickHull<'a> {
    points: &'a [Vector],
    faces: Vec<Face>,
    eps: f64,
}

impl<'a> QuickHull<'a> {
    fn run(points: &'a [Vector]) -> Result<Vec<[usize; 3]>, HullError> {
        let scale = points
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()).max(p.z.abs()))
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let eps = scale * 1e-10;

        let (i0, i1, i2, i3) = initial_simplex(points, eps)?;
        let interior = (points[i0] + points[i1] + points[i2] + points[i3]) * 0.25;

        let mut hull = QuickHull { points, faces: Vec::new(), eps };
        for tri in [[i0, i1, i2], [i0, i1, i3], [i0, i2, i3], [i1, i2, i3]] {
            hull.push_face(tri, interior);
        }
        // link the initial tetrahedron by brute force
        for f in 0..4 {
            for e in 0..3 {
                let a = hull.faces[f].verts[e];
                let b = hull.faces[f].verts[(e + 1) % 3];
                for g in 0..4 {
                    if g != f {
                        let gv = hull.faces[g].verts;
                        if gv.contains(&a) && gv.contains(&b) {
                            hull.faces[f].neighbors[e] = g;
                            break;
                        }
                    }
                }
            }
        }

        let mut unassigned: Vec<usize> = (0..points.len())
            .filter(|&i| i != i0 && i != i1 && i != i2 && i != i3)
            .collect();
        hull.assign(&mut unassigned, None);

        let mut cursor = 0usize;
        loop {
            // faces are only appended, so a monotone cursor visits each once
            while cursor < hull.faces.len()
                && !(hull.faces[cursor].alive && !hull.faces[cursor].outside.is_empty())
            {
                cursor += 1;
            }
            if cursor == hull.faces.len() {
                break;
            }
            hull.expand(cursor)?;
        }

        Ok(hull
            .faces
            .iter()
            .filter(|f| f.alive)
            .map(|f| f.verts)
            .collect())
    }

    fn push_face(&mut self, mut verts: [usize; 3], interior: Vector) -> usize {
        let (a, b, c) = (self.points[verts[0]], self.points[verts[1]], self.points[verts[2]]);
        let mut normal = (b - a).cross(c - a);
        let n = normal.norm();
        if n > 0.0 {
            normal = normal / n;
        }
        let mut offset = normal.dot(a);
        if normal.dot(interior) > offset {
            verts.swap(1, 2);
            normal = -normal;
            offset = -offset;
        }
        self.faces.push(Face {
            verts,
            neighbors: [usize::MAX; 3],
            normal,
            offset,
            outside: Vec::new(),
            alive: true,
        });
        self.faces.len() - 1
    }

    fn dist(&self, face: usize, p: usize) -> f64 {
        let f = &self.faces[face];
        f.normal.dot(self.points[p]) - f.offset
    }

    /// Assigns each point to the face that sees it farthest, if any.
    fn assign(&mut self, points: &mut Vec<usize>, restrict: Option<&[usize]>) {
        for &p in points.iter() {
            let mut best: Option<(usize, f64)> = None;
            let mut scan = |faces: &mut dyn Iterator<Item = usize>, hull: &QuickHull| {
                let mut best: Option<(usize, f64)> = None;
                for fi in faces {
                    if !hull.faces[fi].alive {
                        continue;
                    }
                    let d = hull.dist(fi, p);
                    if d > hull.eps && best.map_or(true, |(_, bd)| d > bd) {
                        best = Some((fi, d));
                    }
                }
                best
            };
            match restrict {
                Some(faces) => {
                    best = scan(&mut faces.iter().copied(), self);
                    // Orphans of a killed face may still be outside a
                    // surviving face; fall back to a full scan before
                    // declaring them interior.
                    if best.is_none() {
                        best = scan(&mut (0..self.faces.len()), self);
                    }
                }
                None => best = scan(&mut (0..self.faces.len()), self),
            }
            if let Some((fi, _)) = best {
                self.faces[fi].outside.push(p);
            }
        }
        points.clear();
    }

    fn expand(&mut self, seed: usize) -> Result<(), HullError> {
        let apex = {
            let f = &self.faces[seed];
            *f.outside
                .iter()
                .max_by(|&&a, &&b| self.dist(seed, a).total_cmp(&self.dist(seed, b)).then(b.cmp(&a)))
                .unwrap()
        };

        // visible region: BFS over neighbor links
        let mut visible: Vec<usize> = vec![seed];
        let mut is_visible = vec![false; self.faces.len()];
        is_visible[seed] = true;
        let mut stack = vec![seed];
        while let Some(fi) = stack.pop() {
            for e in 0..3 {
                let g = self.faces[fi].neighbors[e];
                if !is_visible[g] && self.dist(g, apex) > self.eps {
                    is_visible[g] = true;
                    visible.push(g);
                    stack.push(g);
                }
            }
        }

        // horizon: directed edges of visible faces whose neighbor survives
        let mut horizon: Vec<(usize, usize, usize)> = Vec::new(); // (a, b, outside face)
        for &fi in &visible {
            for e in 0..3 {
                let g = self.faces[fi].neighbors[e];
                if !is_visible[g] {
                    let a = self.faces[fi].verts[e];
                    let b = self.faces[fi].verts[(e + 1) % 3];
                    horizon.push((a, b, g));
                }
            }
        }
        if horizon.is_empty() {
            return Err(HullError::Degenerate);
        }

        // order the horizon into closed loops
        let mut orphans: Vec<usize> = Vec::new();
        for &fi in &visible {
            let f = &mut self.faces[fi];
            f.alive = false;
            orphans.extend(f.outside.drain(..).filter(|&p| p != apex));
        }
        let mut fresh: Vec<usize> = Vec::with_capacity(horizon.len());
        let mut used = vec![false; horizon.len()];
        let mut loops: Vec<Vec<usize>> = Vec::new();
        for start in 0..horizon.len() {
            if used[start] {
                continue;
            }
            let mut cycle = vec![start];
            used[start] = true;
            let mut tail = horizon[start].1;
            while tail != horizon[start].0 {
                let Some(next) = (0..horizon.len()).find(|&j| !used[j] && horizon[j].0 == tail)
                else {
                    return Err(HullError::Degenerate);
                };
                used[next] = true;
                cycle.push(next);
                tail = horizon[next].1;
            }
            loops.push(cycle);
        }

        for cycle in &loops {
            let base = fresh.len();
            for (pos, &j) in cycle.iter().enumerate() {
                let (a, b, outside) = horizon[j];
                // the new face keeps the horizon edge direction, which
                // preserves outward orientation across the surviving face
                let idx = self.faces.len();
                let (pa, pb, pp) = (self.points[a], self.points[b], self.points[apex]);
                let mut normal = (pb - pa).cross(pp - pa);
                let n = normal.norm();
                if n > 0.0 {
                    normal = normal / n;
                }
                let offset = normal.dot(pa);
                self.faces.push(Face {
                    verts: [a, b, apex],
                    neighbors: [usize::MAX; 3],
                    normal,
                    offset,
                    outside: Vec::new(),
                    alive: true,
                });
                // across the horizon edge
                let slot = self.faces[outside].edge_slot(b, a);
                self.faces[outside].neighbors[slot] = idx;
                self.faces[idx].neighbors[0] = outside;
                let _ = pos;
                fresh.push(idx);
            }
            // link consecutive new faces around the apex
            let m = cycle.len();
            for pos in 0..m {
                let cur = fresh[base + pos];
                let next = fresh[base + (pos + 1) % m];
                self.faces[cur].neighbors[1] = next; // edge (b, apex)
                self.faces[next].neighbors[2] = cur; // edge (apex, a)
            }
        }

        self.assign(&mut orphans, Some(&fresh));
        Ok(())
    }
}

fn initial_simplex(points: &[Vector], eps: f64) -> Result<(usize, usize, usize, usize), HullError> {
    if points.len() < 4 {
        return Err(HullError::Degenerate);
    }
    // farthest pair among the six axis extremes
    let mut extremes: Vec<usize> = Vec::new();
    for axis in 0..3 {
        let coord = |p: &Vector| match axis {
            0 => p.x,
            1 => p.y,
            _ => p.z,
        };
        let lo = (0..points.len()).min_by(|&a, &b| coord(&points[a]).total_cmp(&coord(&points[b]))).unwrap();
        let hi = (0..points.len()).max_by(|&a, &b| coord(&points[a]).total_cmp(&coord(&points[b]))).unwrap();
        extremes.push(lo);
        extremes.push(hi);
    }
    let mut i0 = extremes[0];
    let mut i1 = extremes[1];
    let mut best = 0.0f64;
    for &a in &extremes {
        for &b in &extremes {
            let d = points[a].dist(points[b]);
            if d > best {
                best = d;
                i0 = a;
                i1 = b;
            }
        }
    }
    if best <= eps {
        return Err(HullError::Degenerate);
    }

    let dir = (points[i1] - points[i0]) / best;
    let line_dist = |p: Vector| {
        let rel = p - points[i0];
        (rel - dir * rel.dot(dir)).norm()
    };
    let i2 = (0..points.len())
        .max_by(|&a, &b| line_dist(points[a]).total_cmp(&line_dist(points[b])))
        .unwrap();
    if line_dist(points[i2]) <= eps {
        return Err(HullError::Degenerate);
    }

    let normal = (points[i1] - points[i0]).cross(points[i2] - points[i0]);
    let normal = normal / normal.norm();
    let plane_dist = |p: Vector| (p - points[i0]).dot(normal).abs();
    let i3 = (0..points.len())
        .max_by(|&a, &b| plane_dist(points[a]).total_cmp(&plane_dist(points[b])))
        .unwrap();
    if plane_dist(points[i3]) <= eps {
        return Err(HullError::Degenerate);
    }
    Ok((i0, i1, i2, i3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn hull_2d_square_with_interior_points() {
        let pts = vec![
            Vector::new2(0.0, 0.0),
            Vector::new2(1.0, 0.0),
            Vector::new2(1.0, 1.0),
            Vector::new2(0.0, 1.0),
            Vector::new2(0.5, 0.5),
            Vector::new2(0.5, 0.0), // collinear on the bottom edge
        ];
        let hull = convex_hull_2d(&pts).unwrap();
        assert_eq!(hull.len(), 4);
        assert!(!hull.contains(&4));
        assert!(!hull.contains(&5));
        // counterclockwise: positive shoelace area
        let area: f64 = hull
            .iter()
            .zip(hull.iter().cycle().skip(1))
            .map(|(&a, &b)| pts[a].x * pts[b].y - pts[b].x * pts[a].y)
            .sum();
        assert!(area > 0.0);
    }

    #[test]
    fn hull_2d_rejects_collinear_input() {
        let pts: Vec<Vector> = (0..5).map(|i| Vector::new2(i as f64, 2.0 * i as f64)).collect();
        assert_eq!(convex_hull_2d(&pts), Err(HullError::Degenerate));
    }

    fn hull_volume(points: &[Vector], tris: &[[usize; 3]]) -> f64 {
        tris.iter()
            .map(|&[a, b, c]| points[a].dot(points[b].cross(points[c])) / 6.0)
            .sum()
    }

    fn assert_consistent(points: &[Vector], tris: &[[usize; 3]]) {
        // closed orientable surface: each undirected edge used once per
        // direction; all points inside every face plane
        let mut edges = std::collections::HashMap::new();
        for t in tris {
            for (u, v) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                *edges.entry((u.min(v), u.max(v))).or_insert(0i32) += if u < v { 1 } else { -1 };
            }
        }
        assert!(edges.values().all(|&c| c == 0), "unmatched directed edges");
        for &[a, b, c] in tris {
            let n = (points[b] - points[a]).cross(points[c] - points[a]);
            for p in points {
                assert!(
                    (*p - points[a]).dot(n) <= 1e-9 * n.norm().max(1.0),
                    "point outside hull face"
                );
            }
        }
    }

    #[test]
    fn hull_3d_cube_corners() {
        let mut pts = Vec::new();
        for x in [0.0, 1.0] {
            for y in [0.0, 1.0] {
                for z in [0.0, 1.0] {
                    pts.push(Vector::new3(x, y, z));
                }
            }
        }
        let tris = convex_hull_3d(&pts).unwrap();
        assert_eq!(tris.len(), 12);
        assert!((hull_volume(&pts, &tris) - 1.0).abs() < 1e-12);
        assert_consistent(&pts, &tris);
    }

    #[test]
    fn hull_3d_grid_with_face_and_interior_points() {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    pts.push(Vector::new3(x as f64, y as f64, z as f64));
                }
            }
        }
        let tris = convex_hull_3d(&pts).unwrap();
        assert!((hull_volume(&pts, &tris) - 8.0).abs() < 1e-9);
        assert_consistent(&pts, &tris);
    }

    #[test]
    fn hull_3d_octahedron() {
        let pts = vec![
            Vector::new3(1.0, 0.0, 0.0),
            Vector::new3(-1.0, 0.0, 0.0),
            Vector::new3(0.0, 1.0, 0.0),
            Vector::new3(0.0, -1.0, 0.0),
            Vector::new3(0.0, 0.0, 1.0),
            Vector::new3(0.0, 0.0, -1.0),
        ];
        let tris = convex_hull_3d(&pts).unwrap();
        assert_eq!(tris.len(), 8);
        assert!((hull_volume(&pts, &tris) - 4.0 / 3.0).abs() < 1e-12);
        assert_consistent(&pts, &tris);
    }

    #[test]
    fn hull_3d_random_sphere_points_are_all_vertices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.random_range(4..40usize);
            let pts: Vec<Vector> = (0..n)
                .map(|_| {
                    loop {
                        let v = Vector::new3(
                            rng.random_range(-1.0..1.0),
                            rng.random_range(-1.0..1.0),
                            rng.random_range(-1.0..1.0),
                        );
                        let nv = v.norm();
                        if nv > 1e-3 {
                            return v / nv;
                        }
                    }
                })
                .collect();
            let tris = match convex_hull_3d(&pts) {
                Ok(t) => t,
                Err(HullError::Degenerate) => continue,
            };
            let mut seen = vec![false; n];
            for t in &tris {
                for &v in t {
                    seen[v] = true;
                }
            }
            assert!(seen.iter().all(|&s| s), "sphere point swallowed");
            assert_eq!(tris.len(), 2 * n - 4, "Euler count for points in convex position");
            assert_consistent(&pts, &tris);
        }
    }

    #[test]
    fn hull_3d_noisy_directions_cluster() {
        // the solver's dual points: 300 noisy cube normals, rescaled
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let axes = [
            Vector::new3(1.0, 0.0, 0.0),
            Vector::new3(-1.0, 0.0, 0.0),
            Vector::new3(0.0, 1.0, 0.0),
            Vector::new3(0.0, -1.0, 0.0),
            Vector::new3(0.0, 0.0, 1.0),
            Vector::new3(0.0, 0.0, -1.0),
        ];
        let pts: Vec<Vector> = (0..300)
            .map(|i| {
                let base = axes[i % 6];
                let noise = Vector::new3(
                    rng.random_range(-0.05..0.05),
                    rng.random_range(-0.05..0.05),
                    rng.random_range(-0.05..0.05),
                );
                let v = base + noise;
                v / v.norm()
            })
            .collect();
        let tris = convex_hull_3d(&pts).unwrap();
        assert_consistent(&pts, &tris);
    }

    #[test]
    fn hull_3d_rejects_coplanar() {
        let pts: Vec<Vector> = (0..10)
            .map(|i| Vector::new3(i as f64, (i * i % 7) as f64, 0.0))
            .collect();
        assert_eq!(convex_hull_3d(&pts), Err(HullError::Degenerate));
    }
}
