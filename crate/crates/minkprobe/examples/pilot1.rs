use minkprobe::measure::surface_area_measure;
use minkprobe::minkowski::reconstruct_3d;
use minkprobe::random::random_polytope_3d;
use std::time::Instant;

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let p = random_polytope_3d(seed, 6, 30, 1.0);
    println!("facets {}", p.facets().len());
    let m = surface_area_measure(&p);
    let t0 = Instant::now();
    let rep = reconstruct_3d(&m, 1e-6).unwrap();
    println!("iters {} residual {:.3e} converged {} in {:.2?}", rep.iterations, rep.area_residual_linf, rep.converged, t0.elapsed());
}
