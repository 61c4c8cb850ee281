use minkprobe::hausdorff::{hausdorff, min_translate_hausdorff};
use minkprobe::random::random_polytope_3d;
use std::time::Instant;

fn main() {
    let k = random_polytope_3d(0, 6, 30, 1.2);
    let l = random_polytope_3d(1, 6, 30, 1.2);
    let t0 = Instant::now();
    for _ in 0..10 { std::hint::black_box(hausdorff(&k, &l)); }
    println!("hausdorff: {:.2?}/call", t0.elapsed() / 10);
    let t0 = Instant::now();
    for _ in 0..10 { std::hint::black_box(min_translate_hausdorff(&k, &l)); }
    println!("min_translate: {:.2?}/call", t0.elapsed() / 10);
}
