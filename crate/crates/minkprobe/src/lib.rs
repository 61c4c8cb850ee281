//! Convex-body geometry for dimensions 2 and 3: polytopes and their surface
//! area measures, distances between discrete measures on the sphere, and
//! Minkowski/Alexandrov reconstruction of a body from a measure.
//!
//! The crate is organised around one pipeline: sample outer normals from a
//! body, form the empirical measure, project it to zero mean, reconstruct a
//! polytope whose surface area measure matches it, and compare the result to
//! the original body in translation-minimized Hausdorff distance.

pub mod ball;
pub mod distance;
pub mod geometry;
pub mod halfspace;
pub mod hull;
pub mod lp;
pub mod hausdorff;
pub mod measure;
pub mod minkowski;
pub mod polytope;
pub mod random;
pub mod sphere;

pub use geometry::{Dim, Direction, Vector};
pub use halfspace::{intersect, HalfspaceError, Intersection};
pub use polytope::{HalfspaceRep, Polytope, PolytopeError};

/// Library version string, recorded in experiment manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
