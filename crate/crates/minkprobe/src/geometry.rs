//! Ambient vectors, unit directions and the dimension tag shared by the
//! whole crate.
//!
//! Everything lives in fixed `(x, y, z)` coordinates; planar objects keep
//! `z = 0` so that dot products, chordal distances and support evaluations
//! are dimension-agnostic downstream.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// Ambient dimension, restricted to 2 or 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn as_usize(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }

    pub fn from_usize(d: usize) -> Option<Dim> {
        match d {
            2 => Some(Dim::Two),
            3 => Some(Dim::Three),
            _ => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_usize())
    }
}

/// Tolerance under which a vector counts as a unit vector.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// A vector of ℝ² or ℝ³. Planar vectors store `z = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector {
    pub const ZERO: Vector = Vector { x: 0.0, y: 0.0, z: 0.0 };

    pub fn new2(x: f64, y: f64) -> Vector {
        Vector { x, y, z: 0.0 }
    }

    pub fn new3(x: f64, y: f64, z: f64) -> Vector {
        Vector { x, y, z }
    }

    pub fn dot(self, other: Vector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vector) -> Vector {
        Vector {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist(self, other: Vector) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Counterclockwise rotation by 90° in the plane (`z` untouched).
    pub fn rot90_ccw(self) -> Vector {
        Vector { x: -self.y, y: self.x, z: self.z }
    }

    /// Planar polar angle in `(-π, π]`.
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn coords(self, dim: Dim) -> Vec<f64> {
        match dim {
            Dim::Two => vec![self.x, self.y],
            Dim::Three => vec![self.x, self.y, self.z],
        }
    }

    pub fn from_coords(coords: &[f64]) -> Option<Vector> {
        match coords {
            [x, y] => Some(Vector::new2(*x, *y)),
            [x, y, z] => Some(Vector::new3(*x, *y, *z)),
            _ => None,
        }
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, o: Vector) -> Vector {
        Vector { x: self.x + o.x, y: self.y + o.y, z: self.z + o.z }
    }
}

impl AddAssign for Vector {
    fn add_assign(&mut self, o: Vector) {
        *self = *self + o;
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, o: Vector) -> Vector {
        Vector { x: self.x - o.x, y: self.y - o.y, z: self.z - o.z }
    }
}

impl SubAssign for Vector {
    fn sub_assign(&mut self, o: Vector) {
        *self = *self - o;
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { x: -self.x, y: -self.y, z: -self.z }
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, s: f64) -> Vector {
        Vector { x: self.x * s, y: self.y * s, z: self.z * s }
    }
}

impl Div<f64> for Vector {
    type Output = Vector;
    fn div(self, s: f64) -> Vector {
        Vector { x: self.x / s, y: self.y / s, z: self.z / s }
    }
}

/// A unit vector of `S^{d-1}`, enforced to norm one within [`UNIT_NORM_TOL`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction(Vector);

impl Direction {
    /// Wraps a vector that is already unit length within [`UNIT_NORM_TOL`].
    pub fn new(v: Vector) -> Option<Direction> {
        if v.is_finite() && (v.norm() - 1.0).abs() <= UNIT_NORM_TOL {
            Some(Direction(v))
        } else {
            None
        }
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalize(v: Vector) -> Option<Direction> {
        let n = v.norm();
        if n > 0.0 && n.is_finite() {
            Some(Direction(v / n))
        } else {
            None
        }
    }

    /// Planar direction at polar angle `theta`.
    pub fn from_angle(theta: f64) -> Direction {
        Direction(Vector::new2(theta.cos(), theta.sin()))
    }

    pub fn vector(self) -> Vector {
        self.0
    }

    pub fn dot(self, v: Vector) -> f64 {
        self.0.dot(v)
    }

    /// Chordal (Euclidean) distance between two unit vectors.
    pub fn chordal(self, other: Direction) -> f64 {
        (self.0 - other.0).norm()
    }

    pub fn angle(self) -> f64 {
        self.0.angle()
    }

    /// An orthonormal basis of the tangent plane at `self` (3D).
    pub fn tangent_basis(self) -> (Vector, Vector) {
        let n = self.0;
        let pick = if n.x.abs() < 0.9 {
            Vector::new3(1.0, 0.0, 0.0)
        } else {
            Vector::new3(0.0, 1.0, 0.0)
        };
        let t1 = {
            let raw = pick - n * pick.dot(n);
            raw / raw.norm()
        };
        let t2 = n.cross(t1);
        (t1, t2)
    }
}

impl Neg for Direction {
    type Output = Direction;
    fn neg(self) -> Direction {
        Direction(-self.0)
    }
}

impl std::ops::Deref for Direction {
    type Target = Vector;
    fn deref(&self) -> &Vector {
        &self.0
    }
}
