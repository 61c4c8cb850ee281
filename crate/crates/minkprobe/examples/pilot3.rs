use std::time::Instant;
use minkprobe::measure::{surface_area_measure, sample_normals, empirical_measure, zero_mean_project_radial};
use minkprobe::minkowski::reconstruct_3d;
use minkprobe::hausdorff::min_translate_hausdorff;
use minkprobe::polytope::Polytope;

fn main() {
    let tol: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1e-2);
    let trials: u64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(5);
    let cube = Polytope::cube();
    let mass = surface_area_measure(&cube).total_mass();
    let scaled = cube.scale(mass.powf(-0.5));
    let mut etas = Vec::new();
    let mut converged_count = 0;
    for seed in 0..trials {
        let t0 = Instant::now();
        let normals = sample_normals(&scaled, 300, seed, 0.05);
        let emp = empirical_measure(&normals).unwrap();
        let proj = zero_mean_project_radial(&emp).unwrap();
        let rep = reconstruct_3d(&proj, tol).unwrap();
        let (eta, _) = min_translate_hausdorff(&rep.body, &scaled);
        println!("seed {seed}: iters {} residual {:.2e} conv {} eta {:.4} in {:.2?}",
            rep.iterations, rep.area_residual_linf, rep.converged, eta, t0.elapsed());
        if rep.converged { converged_count += 1; }
        etas.push(eta);
    }
    etas.sort_by(f64::total_cmp);
    println!("tol {tol:.0e}: converged {converged_count}/{trials}, median eta {:.4}", etas[etas.len()/2]);
}
