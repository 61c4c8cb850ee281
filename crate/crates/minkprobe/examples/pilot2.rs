use std::time::Instant;
use minkprobe::measure::{surface_area_measure, sample_normals, empirical_measure, zero_mean_project_radial};
use minkprobe::minkowski::reconstruct_3d;
use minkprobe::polytope::Polytope;

fn main() {
    let cube = Polytope::cube();
    let mass = surface_area_measure(&cube).total_mass();
    let scaled = cube.scale(mass.powf(-0.5));
    let t0 = Instant::now();
    let normals = sample_normals(&scaled, 300, 11, 0.05);
    let emp = empirical_measure(&normals).unwrap();
    let proj = zero_mean_project_radial(&emp).unwrap();
    println!("atoms after projection: {}", proj.atoms().len());
    let rep = reconstruct_3d(&proj, 1e-6).unwrap();
    println!("iters {} residual {:.2e} converged {} in {:.2?}", rep.iterations, rep.area_residual_linf, rep.converged, t0.elapsed());
}
