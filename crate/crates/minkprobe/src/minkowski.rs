//! Reconstruction of a convex body from a zero-mean, non-degenerate
//! discrete measure on the sphere (the discrete Minkowski/Alexandrov
//! problem): exact edge chaining in 2D, constrained volume maximization
//! in 3D.

use std::fmt;

use crate::geometry::{Dim, Direction, Vector};
use crate::halfspace::{self, HalfspaceError};
use crate::measure::{surface_area_measure, DiscreteSphericalMeasure};
use crate::polytope::{HalfspaceRep, Polytope};

#[derive(Clone, Debug)]
pub enum ReconstructError {
    EmptyMeasure,
    NotZeroMean { mean_norm: f64, mass: f64 },
    DegenerateSupport,
    DimensionMismatch { expected: Dim, got: Dim },
    /// The halfspace machinery failed on the final iterate.
    Geometry(String),
}

impl fmt::Display for ReconstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconstructError::EmptyMeasure => write!(f, "EmptyMeasure: no atoms to reconstruct from"),
            ReconstructError::NotZeroMean { mean_norm, mass } => write!(
                f,
                "NotZeroMean: measure mean norm {mean_norm:.3e} exceeds tolerance for mass {mass:.3e}"
            ),
            ReconstructError::DegenerateSupport => {
                write!(f, "DegenerateSupport: atom directions lie in a closed halfspace")
            }
            ReconstructError::DimensionMismatch { expected, got } => {
                write!(f, "DimensionMismatch: expected dimension {expected}, got {got}")
            }
            ReconstructError::Geometry(msg) => write!(f, "Geometry: {msg}"),
        }
    }
}

impl std::error::Error for ReconstructError {}

/// Result of a reconstruction: the body, the relative L-infinity facet-area
/// residual against the target measure, and solver bookkeeping.
#[derive(Clone, Debug)]
pub struct ReconstructionReport {
    pub body: Polytope,
    pub area_residual_linf: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Tolerance on `|mean| / mass` below which a 2D measure counts as closed.
pub const ZERO_MEAN_TOL_2D: f64 = 1e-9;
/// The 3D solver tolerates slightly larger closure defects.
pub const ZERO_MEAN_TOL_3D: f64 = 1e-7;
/// Atoms closer than this merge before the 3D solve.
pub const ATOM_MERGE_TOL_3D: f64 = 1e-9;

const MAX_ITERATIONS: usize = 10_000;
const MAX_HALVINGS: usize = 60;
const ARMIJO: f64 = 0.5;

/// Dispatches on the measure's dimension (`tol` applies to the 3D solver).
pub fn reconstruct(
    measure: &DiscreteSphericalMeasure,
    tol: f64,
) -> Result<ReconstructionReport, ReconstructError> {
    match measure.dim() {
        Dim::Two => reconstruct_2d(measure),
        Dim::Three => reconstruct_3d(measure, tol),
    }
}

/// Minkowski's construction in the plane: sort atoms by normal angle and
/// chain one edge of length `w_i` per atom, rotated +90° from its normal.
/// Zero mean closes the chain; the residual gap is spread over the
/// vertices.
pub fn reconstruct_2d(
    measure: &DiscreteSphericalMeasure,
) -> Result<ReconstructionReport, ReconstructError> {
    if measure.dim() != Dim::Two {
        return Err(ReconstructError::DimensionMismatch { expected: Dim::Two, got: measure.dim() });
    }
    let measure = measure.canonical();
    if measure.is_empty() {
        return Err(ReconstructError::EmptyMeasure);
    }
    let mass = measure.total_mass();
    let mean = measure.mean();
    if mean.norm() > ZERO_MEAN_TOL_2D * mass {
        return Err(ReconstructError::NotZeroMean { mean_norm: mean.norm(), mass });
    }

    let mut atoms: Vec<(f64, f64)> = measure
        .atoms()
        .iter()
        .map(|a| (a.direction.angle(), a.weight))
        .collect();
    atoms.sort_by(|x, y| x.0.total_cmp(&y.0));
    let n = atoms.len();
    // degenerate support: all normals inside a closed halfplane means some
    // cyclic angular gap reaches pi
    use std::f64::consts::TAU;
    let max_gap = (0..n)
        .map(|i| {
            let next = if i + 1 == n { atoms[0].0 + TAU } else { atoms[i + 1].0 };
            next - atoms[i].0
        })
        .fold(0.0f64, f64::max);
    if n < 3 || max_gap >= std::f64::consts::PI - 1e-12 {
        return Err(ReconstructError::DegenerateSupport);
    }

    let mut vertices = Vec::with_capacity(n);
    let mut cursor = Vector::ZERO;
    for &(theta, w) in &atoms {
        vertices.push(cursor);
        let edge = Direction::from_angle(theta).vector().rot90_ccw() * w;
        cursor += edge;
    }
    // spread the closure gap over the chain
    let gap = cursor;
    for (k, v) in vertices.iter_mut().enumerate() {
        *v -= gap * (k as f64 / n as f64);
    }
    let centroid = vertices.iter().fold(Vector::ZERO, |a, &v| a + v) / n as f64;
    let vertices: Vec<Vector> = vertices.into_iter().map(|v| v - centroid).collect();

    let body = Polytope::polygon(vertices).map_err(|_| ReconstructError::DegenerateSupport)?;
    let area_residual_linf = verify_reconstruction(&measure, &body)?;
    Ok(ReconstructionReport {
        body,
        area_residual_linf,
        iterations: 0,
        converged: area_residual_linf <= 1e-9,
    })
}

/// Alexandrov reconstruction in space, as the concave program
/// `max Vol(P(h))` subject to `sum w_i h_i = 3` over support offsets
/// `h > 0`. The gradient of the volume is the facet-area vector, so ascent
/// follows the areas projected onto the constraint; at the optimum the
/// areas are proportional to the weights and one rescale matches them.
pub fn reconstruct_3d(
    measure: &DiscreteSphericalMeasure,
    tol: f64,
) -> Result<ReconstructionReport, ReconstructError> {
    let (report, _) = solve_3d(measure, tol)?;
    Ok(report)
}

/// Volumes of the accepted iterates, exposed for the ascent-monotonicity
/// contract tests.
pub(crate) fn solve_3d(
    measure: &DiscreteSphericalMeasure,
    tol: f64,
) -> Result<(ReconstructionReport, Vec<f64>), ReconstructError> {
    if measure.dim() != Dim::Three {
        return Err(ReconstructError::DimensionMismatch {
            expected: Dim::Three,
            got: measure.dim(),
        });
    }
    let measure = merge_close_atoms(&measure.canonical(), ATOM_MERGE_TOL_3D);
    if measure.is_empty() {
        return Err(ReconstructError::EmptyMeasure);
    }
    let mass = measure.total_mass();
    let mean = measure.mean();
    if mean.norm() > ZERO_MEAN_TOL_3D * mass {
        return Err(ReconstructError::NotZeroMean { mean_norm: mean.norm(), mass });
    }
    let normals: Vec<Direction> = measure.atoms().iter().map(|a| a.direction).collect();
    let weights: Vec<f64> = measure.atoms().iter().map(|a| a.weight).collect();
    if !halfspace::positively_spans(Dim::Three, &normals) {
        return Err(ReconstructError::DegenerateSupport);
    }

    let k = normals.len();
    let w_norm_sq: f64 = weights.iter().map(|w| w * w).sum();
    let d = 3.0;

    // feasible start: equal offsets scaled onto the constraint
    let mut h = vec![d / mass; k];
    let rep = |h: &[f64]| HalfspaceRep {
        dim: Dim::Three,
        normals: normals.clone(),
        offsets: h.to_vec(),
    };

    // offsets stay positive along the whole run, so the origin is interior
    let eval = |h: &[f64]| halfspace::dual_eval(&rep(h), Vector::ZERO).ok();

    let mut state = eval(&h).ok_or_else(|| {
        ReconstructError::Geometry("initial halfspace intersection failed".into())
    })?;
    let mut volumes = vec![state.volume];
    let mut iterations = 0usize;
    let mut residual = residual_linf(&state.areas, &weights, w_norm_sq);
    let mut prev: Option<(Vec<f64>, Vec<f64>)> = None; // (h, areas) at last accepted point

    while iterations < MAX_ITERATIONS && residual > tol {
        iterations += 1;
        let areas = state.areas.clone();
        // Jacobi metric from the diagonal of the area Jacobian: clusters of
        // near-parallel normals carry huge curvature and would cripple the
        // plain gradient. A zero diagonal (e.g. the cube) reduces to the
        // unpreconditioned direction.
        let dmax = state.diag_curvature.iter().fold(0.0f64, |m, &d| m.max(d));
        let metric: Vec<f64> = if dmax > 0.0 {
            state
                .diag_curvature
                .iter()
                .map(|&d| 1.0 / d.max(1e-3 * dmax))
                .collect()
        } else {
            vec![1.0; k]
        };
        let lambda = {
            let num: f64 = (0..k).map(|i| metric[i] * areas[i] * weights[i]).sum();
            let den: f64 = (0..k).map(|i| metric[i] * weights[i] * weights[i]).sum();
            num / den
        };
        let direction: Vec<f64> = (0..k)
            .map(|i| metric[i] * (areas[i] - lambda * weights[i]))
            .collect();
        // directional derivative of the volume along the move
        let dir_norm_sq: f64 = (0..k).map(|i| areas[i] * direction[i]).sum();
        if dir_norm_sq < 1e-30 {
            break;
        }

        // spectral (Barzilai-Borwein) initial step, clamped; unit fallback
        let mut step = match &prev {
            Some((ph, pa)) => {
                let mut num = 0.0;
                let mut den = 0.0;
                for i in 0..k {
                    let dh = h[i] - ph[i];
                    let dg = areas[i] - pa[i];
                    num += dh * dh;
                    den += dh * (-dg);
                }
                if den > 1e-300 {
                    (num / den).clamp(1e-6, 1e6)
                } else {
                    1.0
                }
            }
            None => 1.0,
        };

        let mut accepted = false;
        for _ in 0..MAX_HALVINGS {
            let trial: Vec<f64> = h.iter().zip(&direction).map(|(hi, g)| hi + step * g).collect();
            if trial.iter().all(|&x| x > 0.0) {
                if let Some(trial_state) = eval(&trial) {
                    // Armijo sufficient increase. Once the required increase
                    // falls below the volume evaluation noise the comparison
                    // carries no signal; there the step is judged by the
                    // directional derivative instead (areas stay accurate),
                    // taking the largest halved step that has not overshot
                    // the 1D maximum.
                    let required = ARMIJO * step * dir_norm_sq;
                    let floor = 1e-13 * (1.0 + state.volume.abs());
                    let armijo_ok = trial_state.volume >= state.volume + required;
                    let noise_zone_ok = required <= floor
                        && trial_state.volume >= state.volume - floor
                        && {
                            let slope: f64 = trial_state
                                .areas
                                .iter()
                                .zip(&direction)
                                .map(|(a, g)| a * g)
                                .sum();
                            slope >= -1e-3 * dir_norm_sq
                        };
                    if armijo_ok || noise_zone_ok {
                        prev = Some((h.clone(), areas.clone()));
                        // recenter on the vertex centroid and pull back onto
                        // the constraint; both transforms act on the state
                        // analytically (translation preserves areas and
                        // volume, scaling is homogeneous)
                        let c = trial_state.vertex_centroid;
                        let centered: Vec<f64> = trial
                            .iter()
                            .zip(&normals)
                            .map(|(hi, n)| hi - n.dot(c))
                            .collect();
                        if centered.iter().all(|&x| x > 0.0) {
                            let scale =
                                d / centered.iter().zip(&weights).map(|(hi, w)| hi * w).sum::<f64>();
                            if scale > 0.0 {
                                h = centered.iter().map(|hi| hi * scale).collect();
                                state = trial_state;
                                let s2 = scale * scale;
                                for a in state.areas.iter_mut() {
                                    *a *= s2;
                                }
                                state.volume *= s2 * scale;
                                state.vertex_centroid = Vector::ZERO;
                            } else {
                                h = trial;
                                state = trial_state;
                            }
                        } else {
                            h = trial;
                            state = trial_state;
                        }
                        volumes.push(state.volume);
                        accepted = true;
                        break;
                    }
                }
            }
            step *= 0.5;
        }
        if !accepted {
            if std::env::var("MINK_DEBUG").is_ok() {
                eprintln!("iter {iterations}: NO STEP, residual {residual:.3e} vol {:.8e} dir_norm_sq {dir_norm_sq:.3e}", state.volume);
            }
            break;
        }
        residual = residual_linf(&state.areas, &weights, w_norm_sq);
        if std::env::var("MINK_DEBUG").is_ok() && iterations % 100 == 0 {
            eprintln!("iter {iterations}: residual {residual:.3e} vol {:.8}", state.volume);
        }
    }

    // rescale so areas match the weights: at a KKT point A = t w, and
    // scaling the body by t^{-1/2} scales areas by 1/t
    let t = state.areas.iter().zip(&weights).map(|(a, w)| a * w).sum::<f64>() / w_norm_sq;
    if !(t > 0.0) {
        return Err(ReconstructError::Geometry("area fit collapsed to zero scale".into()));
    }
    let s = t.powf(-0.5);
    let final_h: Vec<f64> = h.iter().map(|hi| hi * s).collect();
    let body = halfspace::intersect(&rep(&final_h))
        .map_err(|e: HalfspaceError| ReconstructError::Geometry(e.to_string()))?
        .polytope;
    let area_residual_linf = verify_reconstruction(&measure, &body)?;
    Ok((
        ReconstructionReport {
            body,
            area_residual_linf,
            iterations,
            converged: area_residual_linf <= tol,
        },
        volumes,
    ))
}

fn residual_linf(areas: &[f64], weights: &[f64], w_norm_sq: f64) -> f64 {
    let t = areas.iter().zip(weights).map(|(a, w)| a * w).sum::<f64>() / w_norm_sq;
    if !(t > 0.0) {
        return f64::INFINITY;
    }
    areas
        .iter()
        .zip(weights)
        .map(|(a, w)| (a / t - w).abs() / w.max(1e-300))
        .fold(0.0f64, f64::max)
}

fn merge_close_atoms(m: &DiscreteSphericalMeasure, tol: f64) -> DiscreteSphericalMeasure {
    let mut reps: Vec<(Direction, f64)> = Vec::with_capacity(m.atoms().len());
    for a in m.atoms() {
        match reps.iter_mut().find(|(d, _)| d.chordal(a.direction) < tol) {
            Some((_, w)) => *w += a.weight,
            None => reps.push((a.direction, a.weight)),
        }
    }
    DiscreteSphericalMeasure::new(m.dim(), reps)
}

/// Relative L-infinity mismatch between a target measure and the surface
/// area measure of a body: facets are matched to atoms within an angular
/// threshold of 1e-6; unmatched atoms or facets count in full.
pub fn verify_reconstruction(
    measure: &DiscreteSphericalMeasure,
    body: &Polytope,
) -> Result<f64, ReconstructError> {
    if measure.dim() != body.dim() {
        return Err(ReconstructError::DimensionMismatch {
            expected: measure.dim(),
            got: body.dim(),
        });
    }
    let body_measure = surface_area_measure(body);
    let mut consumed = vec![false; body_measure.atoms().len()];
    let mut residual = 0.0f64;
    for atom in measure.atoms() {
        let mut best: Option<(usize, f64)> = None;
        for (i, b) in body_measure.atoms().iter().enumerate() {
            if consumed[i] {
                continue;
            }
            let dist = atom.direction.chordal(b.direction);
            if dist < 1e-6 && best.map_or(true, |(_, bd)| dist < bd) {
                best = Some((i, dist));
            }
        }
        match best {
            Some((i, _)) => {
                consumed[i] = true;
                let b = &body_measure.atoms()[i];
                residual = residual.max((b.weight - atom.weight).abs() / atom.weight.max(1e-300));
            }
            None => residual = residual.max(1.0),
        }
    }
    for (i, b) in body_measure.atoms().iter().enumerate() {
        if !consumed[i] && b.weight >= 1e-12 {
            residual = residual.max(1.0);
        }
    }
    Ok(residual)
}
