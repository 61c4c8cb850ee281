use minkprobe::geometry::{Dim, Vector, Direction};
use minkprobe::hausdorff::hausdorff;
use minkprobe::random::random_polytope_3d;

fn main() {
    let k = random_polytope_3d(0, 6, 30, 1.2);
    let l = random_polytope_3d(1, 6, 30, 1.2);
    let g = |u: Direction| (k.support(u) - l.support(u)).abs();
    // dense random search + local polish to find the true sup
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let mut best = (0.0f64, Direction::from_angle(0.0));
    for _ in 0..4_000_000 {
        let v = Vector::new3(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        if v.norm() > 1e-3 {
            let d = Direction::normalize(v).unwrap();
            let val = g(d);
            if val > best.0 { best = (val, d); }
        }
    }
    println!("dense search best: {:.10} at {:?}", best.0, best.1.vector());
    // which vertex pair is active there?
    let u = best.1;
    let kv = k.support_point(u);
    let lv = l.support_point(u);
    println!("active K vertex {:?}", kv);
    println!("active L vertex {:?}", lv);
    let pd = (kv - lv).norm();
    let pair_dir = Direction::normalize(kv - lv).unwrap();
    println!("pair dir {:?} chordal to u = {:.3e}, |v-w| = {:.6}", pair_dir.vector(), pair_dir.chordal(u), pd);
    println!("g(pair_dir) = {:.10}", g(pair_dir));
    println!("scheme hausdorff = {:.10}", hausdorff(&k, &l));
    let _ = Dim::Three;
}
