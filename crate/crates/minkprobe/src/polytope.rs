//! Convex polytopes in dimensions 2 and 3.
//!
//! A 2D polytope is a strictly convex polygon with counterclockwise
//! vertices. A 3D polytope stores vertices plus outward-oriented planar
//! facet cycles. Construction validates the representation; all operations
//! afterwards are pure.

use std::fmt;

use crate::ball::{min_enclosing_ball, Ball};
use crate::geometry::{Dim, Direction, Vector};
use crate::hull::convex_hull_2d;

#[derive(Clone, Debug)]
pub enum PolytopeError {
    WrongDim(String),
    TooFewVertices(usize),
    BadFacetIndex(usize),
    NotCounterClockwise,
    NotConvex(String),
    NonPlanarFacet { facet: usize, deviation: f64 },
    NotClosedSurface(String),
    ZeroVolume,
    NotFinite,
    DegeneratePoints,
}

impl fmt::Display for PolytopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeError::WrongDim(msg) => write!(f, "WrongDim: {msg}"),
            PolytopeError::TooFewVertices(n) => write!(f, "TooFewVertices: got {n}"),
            PolytopeError::BadFacetIndex(i) => write!(f, "BadFacetIndex: vertex index {i} out of range"),
            PolytopeError::NotCounterClockwise => write!(f, "NotCounterClockwise: polygon must wind CCW"),
            PolytopeError::NotConvex(msg) => write!(f, "NotConvex: {msg}"),
            PolytopeError::NonPlanarFacet { facet, deviation } => {
                write!(f, "NonPlanarFacet: facet {facet} deviates from its plane by {deviation:.3e}")
            }
            PolytopeError::NotClosedSurface(msg) => write!(f, "NotClosedSurface: {msg}"),
            PolytopeError::ZeroVolume => write!(f, "ZeroVolume: polytope has empty interior"),
            PolytopeError::NotFinite => write!(f, "NotFinite: coordinates must be finite"),
            PolytopeError::DegeneratePoints => write!(f, "DegeneratePoints: points do not span the space"),
        }
    }
}

impl std::error::Error for PolytopeError {}

/// Facet planarity tolerance (scaled by `1 + circumradius`).
pub const PLANARITY_TOL: f64 = 1e-9;

/// A bounded convex body with non-empty interior, stored by its vertices
/// (2D: counterclockwise; 3D: with outward facet cycles).
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope {
    dim: Dim,
    vertices: Vec<Vector>,
    facets: Vec<Vec<usize>>,
}

/// Halfspace form `{x : <x, n_i> <= h_i}`.
#[derive(Clone, Debug)]
pub struct HalfspaceRep {
    pub dim: Dim,
    pub normals: Vec<Direction>,
    pub offsets: Vec<f64>,
}

impl Polytope {
    /// Builds a polygon from vertices already in counterclockwise order.
    pub fn polygon(vertices: Vec<Vector>) -> Result<Polytope, PolytopeError> {
        let p = Polytope { dim: Dim::Two, vertices, facets: Vec::new() };
        p.validate()?;
        Ok(p)
    }

    /// Builds a polygon as the convex hull of a planar point cloud.
    pub fn polygon_hull(points: &[Vector]) -> Result<Polytope, PolytopeError> {
        let hull = convex_hull_2d(points).map_err(|_| PolytopeError::DegeneratePoints)?;
        Polytope::polygon(hull.into_iter().map(|i| points[i]).collect())
    }

    /// Builds a 3D polytope from vertices and outward facet cycles.
    pub fn from_parts(
        dim: Dim,
        vertices: Vec<Vector>,
        facets: Vec<Vec<usize>>,
    ) -> Result<Polytope, PolytopeError> {
        let p = match dim {
            Dim::Two => {
                if !facets.is_empty() {
                    return Err(PolytopeError::WrongDim("2D polytopes carry no facet lists".into()));
                }
                Polytope { dim, vertices, facets }
            }
            Dim::Three => Polytope { dim, vertices, facets },
        };
        p.validate()?;
        Ok(p)
    }

    /// Trusted constructor for internally built, already-consistent data.
    pub(crate) fn from_parts_unchecked(dim: Dim, vertices: Vec<Vector>, facets: Vec<Vec<usize>>) -> Polytope {
        let p = Polytope { dim, vertices, facets };
        debug_assert!(p.validate().is_ok(), "internal polytope failed validation: {:?}", p.validate());
        p
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    /// 3D facet cycles; empty in 2D where edges are implicit.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn validate(&self) -> Result<(), PolytopeError> {
        if !self.vertices.iter().all(|v| v.is_finite()) {
            return Err(PolytopeError::NotFinite);
        }
        match self.dim {
            Dim::Two => self.validate_2d(),
            Dim::Three => self.validate_3d(),
        }
    }

    fn validate_2d(&self) -> Result<(), PolytopeError> {
        let n = self.vertices.len();
        if n < 3 {
            return Err(PolytopeError::TooFewVertices(n));
        }
        if self.vertices.iter().any(|v| v.z != 0.0) {
            return Err(PolytopeError::WrongDim("2D vertices must have z = 0".into()));
        }
        let scale = self.max_vertex_norm().max(1e-300);
        let eps = scale * scale * 1e-12;
        let mut area2 = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            area2 += a.x * b.y - b.x * a.y;
        }
        if area2 < 0.0 {
            return Err(PolytopeError::NotCounterClockwise);
        }
        if area2 <= eps {
            return Err(PolytopeError::ZeroVolume);
        }
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let c = self.vertices[(i + 2) % n];
            let cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
            if cross < -eps {
                return Err(PolytopeError::NotConvex(format!("reflex turn at vertex {}", (i + 1) % n)));
            }
        }
        Ok(())
    }

    fn validate_3d(&self) -> Result<(), PolytopeError> {
        let nv = self.vertices.len();
        if nv < 4 {
            return Err(PolytopeError::TooFewVertices(nv));
        }
        if self.facets.len() < 4 {
            return Err(PolytopeError::NotClosedSurface(format!(
                "only {} facets",
                self.facets.len()
            )));
        }
        let scale = 1.0 + self.max_vertex_norm();
        let planar_tol = PLANARITY_TOL * scale;

        let mut edge_count: std::collections::HashMap<(usize, usize), i32> =
            std::collections::HashMap::new();
        for (fi, cycle) in self.facets.iter().enumerate() {
            if cycle.len() < 3 {
                return Err(PolytopeError::NotClosedSurface(format!("facet {fi} has under 3 vertices")));
            }
            for &i in cycle {
                if i >= nv {
                    return Err(PolytopeError::BadFacetIndex(i));
                }
            }
            let (normal, _area, base) = facet_plane(&self.vertices, cycle);
            for &i in cycle {
                let dev = (self.vertices[i] - base).dot(normal).abs();
                if dev > planar_tol {
                    return Err(PolytopeError::NonPlanarFacet { facet: fi, deviation: dev });
                }
            }
            for k in 0..cycle.len() {
                let a = cycle[k];
                let b = cycle[(k + 1) % cycle.len()];
                *edge_count.entry((a.min(b), a.max(b))).or_insert(0) += match a < b {
                    true => 1,
                    false => -1,
                };
            }
        }
        // A closed orientable surface: every undirected edge is used once in
        // each direction.
        if edge_count.values().any(|&c| c != 0) {
            return Err(PolytopeError::NotClosedSurface(
                "facet cycles are not edge-matched".into(),
            ));
        }
        let vol = self.volume();
        if !(vol > 0.0) {
            return Err(PolytopeError::ZeroVolume);
        }
        // Outward orientation: facets face away from the centroid.
        let c = self.vertex_centroid();
        for (fi, cycle) in self.facets.iter().enumerate() {
            let (normal, area, base) = facet_plane(&self.vertices, cycle);
            if area > 1e-12 && (base - c).dot(normal) <= 0.0 {
                return Err(PolytopeError::NotConvex(format!(
                    "facet {fi} is oriented inward"
                )));
            }
        }
        Ok(())
    }

    /// Support function `h(u) = max_v <v, u>`.
    pub fn support(&self, u: Direction) -> f64 {
        self.vertices
            .iter()
            .map(|v| u.dot(*v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// The vertex attaining the support value in direction `u`.
    pub fn support_point(&self, u: Direction) -> Vector {
        *self
            .vertices
            .iter()
            .max_by(|a, b| u.dot(**a).total_cmp(&u.dot(**b)))
            .expect("polytope has vertices")
    }

    /// d-volume from the vertex representation (shoelace / tetrahedra).
    pub fn volume(&self) -> f64 {
        match self.dim {
            Dim::Two => {
                let n = self.vertices.len();
                let mut area2 = 0.0;
                for i in 0..n {
                    let a = self.vertices[i];
                    let b = self.vertices[(i + 1) % n];
                    area2 += a.x * b.y - b.x * a.y;
                }
                area2 / 2.0
            }
            Dim::Three => {
                let c = self.vertex_centroid();
                let mut vol6 = 0.0;
                for cycle in &self.facets {
                    let v0 = self.vertices[cycle[0]] - c;
                    for k in 1..cycle.len() - 1 {
                        let v1 = self.vertices[cycle[k]] - c;
                        let v2 = self.vertices[cycle[k + 1]] - c;
                        vol6 += v0.dot(v1.cross(v2));
                    }
                }
                vol6 / 6.0
            }
        }
    }

    /// Outward unit normal and (d-1)-area of every facet (edge, in 2D).
    pub fn facet_data(&self) -> Vec<(Direction, f64)> {
        match self.dim {
            Dim::Two => {
                let n = self.vertices.len();
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let e = self.vertices[(i + 1) % n] - self.vertices[i];
                    let len = e.norm();
                    if len == 0.0 {
                        continue;
                    }
                    let normal = Direction::new(Vector::new2(e.y / len, -e.x / len))
                        .expect("edge normal is unit");
                    out.push((normal, len));
                }
                out
            }
            Dim::Three => self
                .facets
                .iter()
                .map(|cycle| {
                    let (normal, area, _) = facet_plane(&self.vertices, cycle);
                    (Direction::new(normal).expect("facet normal is unit"), area)
                })
                .collect(),
        }
    }

    /// First mixed volume `V1(K, L) = (1/d) * sum h_L(n_i) area_i(K)`.
    pub fn mixed_volume_v1(&self, other: &Polytope) -> f64 {
        assert_eq!(self.dim, other.dim, "mixed volume needs equal dimensions");
        let d = self.dim.as_usize() as f64;
        self.facet_data()
            .iter()
            .map(|&(n, a)| other.support(n) * a)
            .sum::<f64>()
            / d
    }

    /// Surface area (perimeter in 2D).
    pub fn surface_area(&self) -> f64 {
        self.facet_data().iter().map(|&(_, a)| a).sum()
    }

    pub fn translate(&self, t: Vector) -> Polytope {
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|&v| v + t).collect(),
            facets: self.facets.clone(),
        }
    }

    pub fn scale(&self, s: f64) -> Polytope {
        assert!(s > 0.0, "scale factor must be positive");
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|&v| v * s).collect(),
            facets: self.facets.clone(),
        }
    }

    pub fn vertex_centroid(&self) -> Vector {
        let sum = self.vertices.iter().fold(Vector::ZERO, |acc, &v| acc + v);
        sum / self.vertices.len() as f64
    }

    /// Radius of the smallest origin-centered ball containing the body.
    pub fn max_vertex_norm(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Minimum enclosing ball (circumradius and circumcenter).
    pub fn min_ball(&self) -> Ball {
        min_enclosing_ball(&self.vertices, self.dim)
    }

    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                best = best.max(a.dist(*b));
            }
        }
        best
    }

    /// Facet normals and offsets as a halfspace representation.
    pub fn to_halfspace_rep(&self) -> HalfspaceRep {
        let mut normals = Vec::new();
        let mut offsets = Vec::new();
        match self.dim {
            Dim::Two => {
                let n = self.vertices.len();
                for (i, (normal, _)) in self.facet_data().into_iter().enumerate() {
                    let a = self.vertices[i];
                    let b = self.vertices[(i + 1) % n];
                    normals.push(normal);
                    offsets.push(0.5 * (normal.dot(a) + normal.dot(b)));
                }
            }
            Dim::Three => {
                for cycle in &self.facets {
                    let (normal, _, _) = facet_plane(&self.vertices, cycle);
                    let dir = Direction::new(normal).expect("facet normal is unit");
                    let offset = cycle.iter().map(|&i| dir.dot(self.vertices[i])).sum::<f64>()
                        / cycle.len() as f64;
                    normals.push(dir);
                    offsets.push(offset);
                }
            }
        }
        HalfspaceRep { dim: self.dim, normals, offsets }
    }

    // ---- built-in bodies ----

    /// Unit square `[0,1]^2`.
    pub fn square() -> Polytope {
        Polytope::from_parts_unchecked(
            Dim::Two,
            vec![
                Vector::new2(0.0, 0.0),
                Vector::new2(1.0, 0.0),
                Vector::new2(1.0, 1.0),
                Vector::new2(0.0, 1.0),
            ],
            Vec::new(),
        )
    }

    /// Unit cube `[0,1]^3`.
    pub fn cube() -> Polytope {
        let vertices = vec![
            Vector::new3(0.0, 0.0, 0.0),
            Vector::new3(1.0, 0.0, 0.0),
            Vector::new3(1.0, 1.0, 0.0),
            Vector::new3(0.0, 1.0, 0.0),
            Vector::new3(0.0, 0.0, 1.0),
            Vector::new3(1.0, 0.0, 1.0),
            Vector::new3(1.0, 1.0, 1.0),
            Vector::new3(0.0, 1.0, 1.0),
        ];
        let facets = vec![
            vec![0, 3, 2, 1],
            vec![4, 5, 6, 7],
            vec![0, 1, 5, 4],
            vec![2, 3, 7, 6],
            vec![0, 4, 7, 3],
            vec![1, 2, 6, 5],
        ];
        Polytope::from_parts_unchecked(Dim::Three, vertices, facets)
    }

    /// Regular tetrahedron with circumradius `sqrt(3)`.
    pub fn tetrahedron() -> Polytope {
        let vertices = vec![
            Vector::new3(1.0, 1.0, 1.0),
            Vector::new3(1.0, -1.0, -1.0),
            Vector::new3(-1.0, 1.0, -1.0),
            Vector::new3(-1.0, -1.0, 1.0),
        ];
        let facets = orient_outward(
            &vertices,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        );
        Polytope::from_parts_unchecked(Dim::Three, vertices, facets)
    }

    /// Regular `k`-gon inscribed in the unit circle.
    pub fn ngon(k: usize) -> Polytope {
        assert!(k >= 3);
        let vertices = (0..k)
            .map(|j| {
                let theta = std::f64::consts::TAU * j as f64 / k as f64;
                Vector::new2(theta.cos(), theta.sin())
            })
            .collect();
        Polytope::from_parts_unchecked(Dim::Two, vertices, Vec::new())
    }

    /// Icosphere polytope with unit circumradius: the standard polyhedral
    /// stand-in for the 3D ball.
    pub fn icosphere_body(level: usize) -> Polytope {
        let mesh = crate::sphere::icosphere(level);
        let vertices: Vec<Vector> = mesh.vertices.iter().map(|d| d.vector()).collect();
        let facets = orient_outward(
            &vertices,
            mesh.triangles.iter().map(|t| t.to_vec()).collect(),
        );
        Polytope::from_parts_unchecked(Dim::Three, vertices, facets)
    }
}

/// Unit normal (by Newell's formula), area and a base point of a facet
/// cycle. Orientation of the cycle decides the normal sign.
pub(crate) fn facet_plane(vertices: &[Vector], cycle: &[usize]) -> (Vector, f64, Vector) {
    let base = cycle
        .iter()
        .fold(Vector::ZERO, |acc, &i| acc + vertices[i])
        / cycle.len() as f64;
    let mut area_vec = Vector::ZERO;
    for k in 0..cycle.len() {
        let a = vertices[cycle[k]] - base;
        let b = vertices[cycle[(k + 1) % cycle.len()]] - base;
        area_vec += a.cross(b);
    }
    area_vec = area_vec * 0.5;
    let area = area_vec.norm();
    let normal = if area > 0.0 { area_vec / area } else { Vector::new3(0.0, 0.0, 1.0) };
    (normal, area, base)
}

/// Flips facet cycles so their Newell normals point away from the centroid.
pub(crate) fn orient_outward(vertices: &[Vector], mut facets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let centroid = vertices.iter().fold(Vector::ZERO, |acc, &v| acc + v) / vertices.len() as f64;
    for cycle in facets.iter_mut() {
        let (normal, _, base) = facet_plane(vertices, cycle);
        if (base - centroid).dot(normal) < 0.0 {
            cycle.reverse();
        }
    }
    facets
}
