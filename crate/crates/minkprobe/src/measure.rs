//! Discrete measures on the unit sphere: surface area measures of
//! polytopes, empirical measures of sampled normals, weak rotundity, and
//! the two zero-mean projections (radial and TV-minimizing).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Dim, Direction, Vector};
use crate::lp::{LinearProgram, Relation};
use crate::polytope::Polytope;
use crate::sphere::{angle_net, icosphere};

#[derive(Clone, Debug)]
pub enum MeasureError {
    EmptyInput,
    NotProbability(f64),
    DegenerateSupport,
}

impl fmt::Display for MeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureError::EmptyInput => write!(f, "EmptyInput: measure has no atoms"),
            MeasureError::NotProbability(mass) => {
                write!(f, "NotProbability: total mass {mass} is not 1")
            }
            MeasureError::DegenerateSupport => {
                write!(f, "DegenerateSupport: atom directions lie in an open halfspace")
            }
        }
    }
}

impl std::error::Error for MeasureError {}

/// One atom: a unit direction carrying positive mass.
#[derive(Clone, Copy, Debug)]
pub struct Atom {
    pub direction: Direction,
    pub weight: f64,
}

/// A finite nonnegative measure on `S^{d-1}`, stored as weighted atoms.
/// Atoms with nonpositive weight are dropped on construction.
#[derive(Clone, Debug)]
pub struct DiscreteSphericalMeasure {
    dim: Dim,
    atoms: Vec<Atom>,
}

/// Directions closer than this merge during canonicalization.
pub const MERGE_TOL: f64 = 1e-12;

impl DiscreteSphericalMeasure {
    pub fn new(dim: Dim, atoms: impl IntoIterator<Item = (Direction, f64)>) -> Self {
        let atoms = atoms
            .into_iter()
            .filter(|&(_, w)| w > 0.0)
            .map(|(direction, weight)| Atom { direction, weight })
            .collect();
        DiscreteSphericalMeasure { dim, atoms }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    /// `mean = sum w_i n_i`, the closure defect of the measure.
    pub fn mean(&self) -> Vector {
        self.atoms
            .iter()
            .fold(Vector::ZERO, |acc, a| acc + a.direction.vector() * a.weight)
    }

    pub fn scale_weights(&self, s: f64) -> Self {
        assert!(s > 0.0);
        DiscreteSphericalMeasure {
            dim: self.dim,
            atoms: self
                .atoms
                .iter()
                .map(|a| Atom { direction: a.direction, weight: a.weight * s })
                .collect(),
        }
    }

    /// Merges atoms whose directions agree within [`MERGE_TOL`] and sorts
    /// them lexicographically, so equal measures compare equal.
    pub fn canonical(&self) -> Self {
        let mut atoms = self.atoms.clone();
        atoms.sort_by(|a, b| {
            let (u, v) = (a.direction.vector(), b.direction.vector());
            u.x.total_cmp(&v.x).then(u.y.total_cmp(&v.y)).then(u.z.total_cmp(&v.z))
        });
        let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
        for atom in atoms {
            match merged.last_mut() {
                Some(last) if last.direction.chordal(atom.direction) < MERGE_TOL => {
                    last.weight += atom.weight;
                }
                _ => merged.push(atom),
            }
        }
        DiscreteSphericalMeasure { dim: self.dim, atoms: merged }
    }
}

/// The surface area measure of a polytope: one atom per facet normal,
/// weighted by facet area. Atoms sharing a direction (e.g. from a
/// triangulated facet) are merged.
pub fn surface_area_measure(body: &Polytope) -> DiscreteSphericalMeasure {
    DiscreteSphericalMeasure::new(body.dim(), body.facet_data()).canonical()
}

#[derive(Clone, Copy, Debug)]
pub struct MeasureSummary {
    pub total_mass: f64,
    pub mean: Vector,
    pub rotundity: f64,
    /// Certified slack of the rotundity value: zero in 2D (exact critical
    /// set), `2 * net spacing * mass` in 3D (Lipschitz bound on the net).
    pub rotundity_tol: f64,
}

/// Total mass, mean, and weak rotundity
/// `rotund = min_y sum w_i max(<y, n_i>, 0)`.
pub fn summarize(measure: &DiscreteSphericalMeasure) -> Result<MeasureSummary, MeasureError> {
    if measure.is_empty() {
        return Err(MeasureError::EmptyInput);
    }
    let total_mass = measure.total_mass();
    let mean = measure.mean();
    let (rotundity, rotundity_tol) = match measure.dim {
        Dim::Two => (rotundity_2d(measure), 0.0),
        Dim::Three => rotundity_3d(measure),
    };
    Ok(MeasureSummary { total_mass, mean, rotundity, rotundity_tol })
}

fn rotundity_value(measure: &DiscreteSphericalMeasure, y: Direction) -> f64 {
    measure
        .atoms
        .iter()
        .map(|a| a.weight * y.dot(a.direction.vector()).max(0.0))
        .sum()
}

/// Exact minimization over the critical angle set: the integrand changes at
/// each atom angle ± 90°, and inside a piece the objective is a single
/// cosine whose interior minimum sits opposite the active resultant.
fn rotundity_2d(measure: &DiscreteSphericalMeasure) -> f64 {
    use std::f64::consts::{FRAC_PI_2, PI, TAU};
    let mut breaks: Vec<f64> = Vec::with_capacity(2 * measure.atoms.len());
    for a in &measure.atoms {
        let t = a.direction.angle();
        breaks.push((t + FRAC_PI_2).rem_euclid(TAU));
        breaks.push((t - FRAC_PI_2).rem_euclid(TAU));
    }
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let eval = |theta: f64| rotundity_value(measure, Direction::from_angle(theta));
    let mut best = f64::INFINITY;
    let m = breaks.len();
    for k in 0..m {
        let lo = breaks[k];
        let hi = if k + 1 == m { breaks[0] + TAU } else { breaks[k + 1] };
        best = best.min(eval(lo));
        // resultant of the atoms active in this piece
        let mid = Direction::from_angle(0.5 * (lo + hi));
        let resultant = measure
            .atoms
            .iter()
            .filter(|a| mid.dot(a.direction.vector()) > 0.0)
            .fold(Vector::ZERO, |acc, a| acc + a.direction.vector() * a.weight);
        if resultant.norm() > 0.0 {
            let opposite = (resultant.angle() + PI).rem_euclid(TAU);
            for cand in [opposite, opposite + TAU, opposite - TAU] {
                if cand > lo && cand < hi {
                    best = best.min(eval(cand));
                }
            }
        } else {
            best = 0.0;
        }
    }
    best.max(0.0)
}

/// Net minimization (icosphere level 5) plus projected subgradient descent
/// from the best seeds. The reported tolerance covers the net only; descent
/// can only improve the value.
fn rotundity_3d(measure: &DiscreteSphericalMeasure) -> (f64, f64) {
    let mesh = icosphere(5);
    let mut scored: Vec<(f64, Direction)> = mesh
        .vertices
        .iter()
        .map(|&y| (rotundity_value(measure, y), y))
        .collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut best = scored[0].0;
    for &(_, seed) in scored.iter().take(8) {
        best = best.min(descend(measure, seed));
    }
    let tol = 2.0 * mesh.max_edge() * measure.total_mass();
    (best.max(0.0), tol)
}

fn descend(measure: &DiscreteSphericalMeasure, start: Direction) -> f64 {
    let mut y = start;
    let mut val = rotundity_value(measure, y);
    let mut step = 0.1;
    for _ in 0..200 {
        let grad = measure
            .atoms
            .iter()
            .filter(|a| y.dot(a.direction.vector()) > 0.0)
            .fold(Vector::ZERO, |acc, a| acc + a.direction.vector() * a.weight);
        let tangent = grad - y.vector() * grad.dot(y.vector());
        if tangent.norm() < 1e-14 {
            break;
        }
        let mut moved = false;
        while step > 1e-10 {
            if let Some(cand) = Direction::normalize(y.vector() - tangent * step) {
                let v = rotundity_value(measure, cand);
                if v < val - 1e-16 {
                    y = cand;
                    val = v;
                    moved = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !moved {
            break;
        }
    }
    val
}

/// Uniform point in the d-ball of radius `r` (rejection sampling).
pub fn random_in_ball(rng: &mut impl Rng, dim: Dim, r: f64) -> Vector {
    loop {
        let v = match dim {
            Dim::Two => Vector::new2(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)),
            Dim::Three => Vector::new3(
                rng.random_range(-1.0..=1.0),
                rng.random_range(-1.0..=1.0),
                rng.random_range(-1.0..=1.0),
            ),
        };
        if v.norm_sq() <= 1.0 {
            return v * r;
        }
    }
}

/// Uniform direction on `S^{d-1}`.
pub fn random_direction(rng: &mut impl Rng, dim: Dim) -> Direction {
    loop {
        let v = random_in_ball(rng, dim, 1.0);
        if v.norm() > 1e-3 {
            return Direction::normalize(v).unwrap();
        }
    }
}

/// I.i.d. outer normals at uniform random boundary points: each draw picks
/// a facet with probability proportional to its area and emits its normal,
/// optionally perturbed by a uniform vector in `B(0, noise_radius)` and
/// renormalized. Deterministic for a fixed `(seed, n)`.
pub fn sample_normals(
    body: &Polytope,
    n: usize,
    seed: u64,
    noise_radius: f64,
) -> Vec<Direction> {
    assert!(noise_radius >= 0.0 && noise_radius < 1.0, "noise radius must be in [0, 1)");
    let facets = body.facet_data();
    let mut cumulative = Vec::with_capacity(facets.len());
    let mut acc = 0.0;
    for &(_, a) in &facets {
        acc += a;
        cumulative.push(acc);
    }
    let total = acc;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let u = rng.random_range(0.0..total);
        let idx = cumulative.partition_point(|&c| c <= u).min(facets.len() - 1);
        let normal = facets[idx].0;
        if noise_radius > 0.0 {
            let noise = random_in_ball(&mut rng, body.dim(), noise_radius);
            out.push(
                Direction::normalize(normal.vector() + noise)
                    .expect("noise radius below 1 keeps the vector nonzero"),
            );
        } else {
            out.push(normal);
        }
    }
    out
}

/// `(1/N) sum of Dirac masses` at the sampled directions; bit-identical
/// directions merge.
pub fn empirical_measure(normals: &[Direction]) -> Result<DiscreteSphericalMeasure, MeasureError> {
    if normals.is_empty() {
        return Err(MeasureError::EmptyInput);
    }
    let dim = if normals.iter().all(|d| d.vector().z == 0.0) { Dim::Two } else { Dim::Three };
    let n = normals.len() as f64;
    let mut counts: std::collections::HashMap<(u64, u64, u64), (Direction, usize)> =
        std::collections::HashMap::new();
    for &d in normals {
        let v = d.vector();
        let key = (v.x.to_bits(), v.y.to_bits(), v.z.to_bits());
        counts.entry(key).or_insert((d, 0)).1 += 1;
    }
    let measure = DiscreteSphericalMeasure::new(
        dim,
        counts.into_values().map(|(d, c)| (d, c as f64 / n)),
    );
    Ok(measure.canonical())
}

/// The uniform probability measure discretized by equal atoms (4096 angles
/// in 2D, the level-5 icosphere vertices in 3D).
pub fn uniform_probability_measure(dim: Dim) -> DiscreteSphericalMeasure {
    match dim {
        Dim::Two => {
            let net = angle_net(4096);
            let w = 1.0 / net.len() as f64;
            DiscreteSphericalMeasure::new(dim, net.into_iter().map(|d| (d, w)))
        }
        Dim::Three => {
            let verts = &icosphere(5).vertices;
            let w = 1.0 / verts.len() as f64;
            DiscreteSphericalMeasure::new(dim, verts.iter().map(|&d| (d, w)))
        }
    }
}

/// Radial zero-mean projection of a probability measure: atoms move along
/// rays through the mean, `m_i = (x_i - m)/|x_i - m|`, and weights are
/// rescaled by `lambda a_i` with `lambda = (sum w_i a_i)^{-1}`, which keeps
/// total mass one and zeroes the mean. A single-atom measure (mean on the
/// sphere) projects to the discretized uniform measure.
pub fn zero_mean_project_radial(
    measure: &DiscreteSphericalMeasure,
) -> Result<DiscreteSphericalMeasure, MeasureError> {
    if measure.is_empty() {
        return Err(MeasureError::EmptyInput);
    }
    let mass = measure.total_mass();
    if (mass - 1.0).abs() > 1e-12 {
        return Err(MeasureError::NotProbability(mass));
    }
    let m = measure.mean();
    if m.norm() >= 1.0 - 1e-12 {
        return Ok(uniform_probability_measure(measure.dim));
    }
    let mut displaced: Vec<(Direction, f64)> = Vec::with_capacity(measure.atoms.len());
    let mut normalizer = 0.0;
    for atom in &measure.atoms {
        let shifted = atom.direction.vector() - m;
        let a = shifted.norm();
        if a == 0.0 {
            continue;
        }
        normalizer += atom.weight * a;
        displaced.push((
            Direction::normalize(shifted).expect("nonzero shifted atom"),
            atom.weight * a,
        ));
    }
    let lambda = 1.0 / normalizer;
    Ok(DiscreteSphericalMeasure::new(
        measure.dim,
        displaced.into_iter().map(|(d, w)| (d, w * lambda)),
    ))
}

/// TV-minimizing zero-mean projection: keeps the atom directions and solves
/// `min sum |w_i - b_i|` subject to `sum b_i n_i = 0`, `b >= 0` as a linear
/// program. Returns the projected measure and the optimal objective.
pub fn zero_mean_project_tv(
    measure: &DiscreteSphericalMeasure,
) -> Result<(DiscreteSphericalMeasure, f64), MeasureError> {
    if measure.is_empty() {
        return Err(MeasureError::EmptyInput);
    }
    let n = measure.atoms.len();
    let d = measure.dim.as_usize();
    // b_i = w_i + p_i - q_i with p, q >= 0 and q_i <= w_i
    let mut lp = LinearProgram::new(2 * n);
    for i in 0..2 * n {
        lp.set_objective(i, 1.0);
    }
    let mean = measure.mean();
    let mean_comp = [mean.x, mean.y, mean.z];
    for axis in 0..d {
        let coeffs: Vec<(usize, f64)> = (0..n)
            .flat_map(|i| {
                let v = measure.atoms[i].direction.vector();
                let c = match axis {
                    0 => v.x,
                    1 => v.y,
                    _ => v.z,
                };
                [(i, c), (n + i, -c)]
            })
            .collect();
        lp.add_row(coeffs, Relation::Eq, -mean_comp[axis]);
    }
    for i in 0..n {
        lp.add_row(vec![(n + i, 1.0)], Relation::Le, measure.atoms[i].weight);
    }
    let sol = lp.solve().map_err(|_| MeasureError::DegenerateSupport)?;
    let weights: Vec<f64> = (0..n)
        .map(|i| (measure.atoms[i].weight + sol.x[i] - sol.x[n + i]).max(0.0))
        .collect();
    let projected = DiscreteSphericalMeasure::new(
        measure.dim,
        measure
            .atoms
            .iter()
            .zip(&weights)
            .map(|(a, &w)| (a.direction, w)),
    );
    if projected.total_mass() <= 1e-12 * measure.total_mass() {
        return Err(MeasureError::DegenerateSupport);
    }
    Ok((projected, sol.objective))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir2(x: f64, y: f64) -> Direction {
        Direction::normalize(Vector::new2(x, y)).unwrap()
    }

    #[test]
    fn surface_measure_of_unit_square_and_cube() {
        let m = surface_area_measure(&Polytope::square());
        assert_eq!(m.atoms().len(), 4);
        assert!((m.total_mass() - 4.0).abs() < 1e-12);
        assert!(m.mean().norm() < 1e-12);

        let c = surface_area_measure(&Polytope::cube());
        assert_eq!(c.atoms().len(), 6);
        assert!((c.total_mass() - 6.0).abs() < 1e-12);
        for a in c.atoms() {
            assert!((a.weight - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn surface_measure_of_right_triangle() {
        let tri = Polytope::polygon(vec![
            Vector::new2(0.0, 0.0),
            Vector::new2(1.0, 0.0),
            Vector::new2(0.0, 1.0),
        ])
        .unwrap();
        let m = surface_area_measure(&tri);
        assert!((m.total_mass() - (2.0 + 2.0f64.sqrt())).abs() < 1e-12);
        assert!(m.mean().norm() < 1e-12);
    }

    #[test]
    fn rotundity_of_square_measure_is_one() {
        // f(theta) = |cos| + |sin| has minimum 1 on the axes
        let m = surface_area_measure(&Polytope::square());
        let s = summarize(&m).unwrap();
        assert!((s.rotundity - 1.0).abs() < 1e-12, "rotundity {}", s.rotundity);
        assert_eq!(s.rotundity_tol, 0.0);
    }

    #[test]
    fn rotundity_of_single_atom_is_zero() {
        let m = DiscreteSphericalMeasure::new(Dim::Two, [(dir2(1.0, 0.0), 1.0)]);
        let s = summarize(&m).unwrap();
        assert!(s.rotundity.abs() < 1e-15);
    }

    #[test]
    fn rotundity_of_uniform_circle_measure() {
        // oracle: (1/2pi) * integral of max(cos, 0) = 1/pi
        let n = 10_000;
        let w = 1.0 / n as f64;
        let m = DiscreteSphericalMeasure::new(
            Dim::Two,
            angle_net(n).into_iter().map(|d| (d, w)),
        );
        let s = summarize(&m).unwrap();
        assert!((s.rotundity - std::f64::consts::FRAC_1_PI).abs() < 1e-3);
    }

    #[test]
    fn rotundity_3d_cube_measure() {
        // f(y) = sum over the six axis atoms = |y1| + |y2| + |y3|, min 1
        let m = surface_area_measure(&Polytope::cube());
        let s = summarize(&m).unwrap();
        assert!(s.rotundity <= 1.0 + 1e-9);
        assert!(s.rotundity >= 1.0 - s.rotundity_tol);
        // descent should land essentially on the exact minimum
        assert!((s.rotundity - 1.0).abs() < 1e-6, "rotundity {}", s.rotundity);
    }

    #[test]
    fn sampling_is_deterministic_and_matches_areas() {
        let sq = Polytope::square();
        let a = sample_normals(&sq, 1000, 7, 0.0);
        let b = sample_normals(&sq, 1000, 7, 0.0);
        assert!(a.iter().zip(&b).all(|(x, y)| x == y));

        let n = 400_000;
        let normals = sample_normals(&sq, n, 1234, 0.0);
        let m = empirical_measure(&normals).unwrap();
        assert_eq!(m.atoms().len(), 4);
        for a in m.atoms() {
            assert!((a.weight - 0.25).abs() < 0.005, "frequency {}", a.weight);
        }
        assert!((m.total_mass() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn noisy_samples_stay_unit_and_off_axis() {
        let cube = Polytope::cube();
        let normals = sample_normals(&cube, 300, 5, 0.05);
        assert_eq!(normals.len(), 300);
        for d in normals {
            assert!((d.vector().norm() - 1.0).abs() < 1e-12);
            let v = d.vector();
            let axis_aligned = [v.x.abs(), v.y.abs(), v.z.abs()]
                .into_iter()
                .any(|c| (c - 1.0).abs() == 0.0);
            assert!(!axis_aligned, "noise left a normal exactly on an axis");
        }
    }

    #[test]
    fn empty_sampling_and_empirical_edge_cases() {
        assert!(sample_normals(&Polytope::square(), 0, 1, 0.0).is_empty());
        assert!(matches!(empirical_measure(&[]), Err(MeasureError::EmptyInput)));
        let m = empirical_measure(&[dir2(1.0, 0.0)]).unwrap();
        assert_eq!(m.atoms().len(), 1);
        assert!((m.atoms()[0].weight - 1.0).abs() < 1e-15);
    }

    #[test]
    fn empirical_measure_merges_repeats() {
        let e1 = dir2(1.0, 0.0);
        let e2 = dir2(0.0, 1.0);
        let m = empirical_measure(&[e1, e1, e2, -e1]).unwrap();
        assert_eq!(m.atoms().len(), 3);
        let w_of = |d: Direction| {
            m.atoms()
                .iter()
                .find(|a| a.direction.chordal(d) < 1e-15)
                .map(|a| a.weight)
                .unwrap()
        };
        assert!((w_of(e1) - 0.5).abs() < 1e-15);
        assert!((w_of(e2) - 0.25).abs() < 1e-15);
        assert!((w_of(-e1) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn radial_projection_identity_and_hand_example() {
        // already zero mean: unchanged
        let m = DiscreteSphericalMeasure::new(
            Dim::Two,
            [(dir2(1.0, 0.0), 0.5), (dir2(-1.0, 0.0), 0.5)],
        );
        let p = zero_mean_project_radial(&m).unwrap();
        assert_eq!(p.atoms().len(), 2);
        for (a, b) in m.atoms().iter().zip(p.atoms()) {
            assert!(a.direction.chordal(b.direction) < 1e-15);
            assert!((a.weight - b.weight).abs() < 1e-15);
        }

        // nu = (1/2) delta_e1 + (1/2) delta_e2: hand evaluation of the
        // formula gives atoms at (1,-1)/sqrt2 and (-1,1)/sqrt2, weight 1/2
        let m = DiscreteSphericalMeasure::new(
            Dim::Two,
            [(dir2(1.0, 0.0), 0.5), (dir2(0.0, 1.0), 0.5)],
        );
        let p = zero_mean_project_radial(&m).unwrap();
        assert_eq!(p.atoms().len(), 2);
        assert!(p.mean().norm() < 1e-12);
        assert!((p.total_mass() - 1.0).abs() < 1e-12);
        let expect = dir2(1.0, -1.0);
        assert!(p
            .atoms()
            .iter()
            .any(|a| a.direction.chordal(expect) < 1e-12 && (a.weight - 0.5).abs() < 1e-12));
    }

    #[test]
    fn radial_projection_degenerate_single_atom() {
        let m = DiscreteSphericalMeasure::new(Dim::Two, [(dir2(1.0, 0.0), 1.0)]);
        let p = zero_mean_project_radial(&m).unwrap();
        assert_eq!(p.atoms().len(), 4096);
        assert!(p.mean().norm() < 1e-12);
        assert!((p.total_mass() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn radial_projection_rejects_non_probability() {
        let m = surface_area_measure(&Polytope::square());
        assert!(matches!(
            zero_mean_project_radial(&m),
            Err(MeasureError::NotProbability(_))
        ));
    }

    #[test]
    fn tv_projection_identity_and_hand_lp() {
        let zero_mean = surface_area_measure(&Polytope::square());
        let (p, obj) = zero_mean_project_tv(&zero_mean).unwrap();
        assert!(obj.abs() < 1e-10);
        assert!((p.total_mass() - 4.0).abs() < 1e-10);

        // weights (1.2, 1, 1, 1) on (e1, e2, -e1, -e2): optimum moves 0.2
        let m = DiscreteSphericalMeasure::new(
            Dim::Two,
            [
                (dir2(1.0, 0.0), 1.2),
                (dir2(0.0, 1.0), 1.0),
                (dir2(-1.0, 0.0), 1.0),
                (dir2(0.0, -1.0), 1.0),
            ],
        );
        let (p, obj) = zero_mean_project_tv(&m).unwrap();
        assert!((obj - 0.2).abs() < 1e-9, "objective {obj}");
        assert!(p.mean().norm() < 1e-10);
    }

    #[test]
    fn tv_projection_degenerate_support() {
        let m = DiscreteSphericalMeasure::new(
            Dim::Two,
            [(dir2(1.0, 0.0), 1.0), (dir2(0.0, 1.0), 1.0)],
        );
        assert!(matches!(
            zero_mean_project_tv(&m),
            Err(MeasureError::DegenerateSupport)
        ));
    }

    #[test]
    fn canonical_merges_duplicate_directions() {
        let m = DiscreteSphericalMeasure::new(
            Dim::Two,
            [(dir2(1.0, 0.0), 0.5), (dir2(1.0, 0.0), 0.25), (dir2(0.0, 1.0), 1.0)],
        )
        .canonical();
        assert_eq!(m.atoms().len(), 2);
        assert!((m.total_mass() - 1.75).abs() < 1e-15);
    }
}
