//! Direction nets on the circle and the sphere.
//!
//! 2D nets are uniform angle grids. 3D nets are icosphere meshes (recursively
//! subdivided icosahedra projected to the sphere); vertex counts per level
//! are 12, 42, 162, 642, 2562, 10242, ... Meshes are cached per level since
//! rotundity and probe evaluations rebuild them constantly.

use std::sync::OnceLock;

use crate::geometry::{Direction, Vector};

/// `n` equally spaced planar directions starting at angle zero.
pub fn angle_net(n: usize) -> Vec<Direction> {
    let step = std::f64::consts::TAU / n as f64;
    (0..n).map(|j| Direction::from_angle(j as f64 * step)).collect()
}

/// Triangulated unit-sphere mesh.
#[derive(Clone, Debug)]
pub struct SphereMesh {
    pub vertices: Vec<Direction>,
    pub triangles: Vec<[usize; 3]>,
}

impl SphereMesh {
    /// Longest edge of the mesh (chordal); a conservative net spacing.
    pub fn max_edge(&self) -> f64 {
        let mut best: f64 = 0.0;
        for t in &self.triangles {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                best = best.max(self.vertices[a].chordal(self.vertices[b]));
            }
        }
        best
    }
}

const MAX_CACHED_LEVEL: usize = 8;

/// Icosphere at the given subdivision level, shared through a cache.
pub fn icosphere(level: usize) -> &'static SphereMesh {
    assert!(level <= MAX_CACHED_LEVEL, "icosphere level {level} out of range");
    static CACHE: [OnceLock<SphereMesh>; MAX_CACHED_LEVEL + 1] =
        [const { OnceLock::new() }; MAX_CACHED_LEVEL + 1];
    CACHE[level].get_or_init(|| build_icosphere(level))
}

fn build_icosphere(level: usize) -> SphereMesh {
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    let raw = [
        (-1.0, phi, 0.0),
        (1.0, phi, 0.0),
        (-1.0, -phi, 0.0),
        (1.0, -phi, 0.0),
        (0.0, -1.0, phi),
        (0.0, 1.0, phi),
        (0.0, -1.0, -phi),
        (0.0, 1.0, -phi),
        (phi, 0.0, -1.0),
        (phi, 0.0, 1.0),
        (-phi, 0.0, -1.0),
        (-phi, 0.0, 1.0),
    ];
    let mut vertices: Vec<Direction> = raw
        .iter()
        .map(|&(x, y, z)| Direction::normalize(Vector::new3(x, y, z)).unwrap())
        .collect();
    let mut triangles: Vec<[usize; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];

    for _ in 0..level {
        let mut midpoint_cache: std::collections::HashMap<(usize, usize), usize> =
            std::collections::HashMap::new();
        let mut midpoint = |a: usize, b: usize, vertices: &mut Vec<Direction>| -> usize {
            let key = (a.min(b), a.max(b));
            *midpoint_cache.entry(key).or_insert_with(|| {
                let m = vertices[a].vector() + vertices[b].vector();
                vertices.push(Direction::normalize(m).unwrap());
                vertices.len() - 1
            })
        };
        let mut next = Vec::with_capacity(triangles.len() * 4);
        for [a, b, c] in triangles {
            let ab = midpoint(a, b, &mut vertices);
            let bc = midpoint(b, c, &mut vertices);
            let ca = midpoint(c, a, &mut vertices);
            next.push([a, ab, ca]);
            next.push([b, bc, ab]);
            next.push([c, ca, bc]);
            next.push([ab, bc, ca]);
        }
        triangles = next;
    }

    SphereMesh { vertices, triangles }
}
