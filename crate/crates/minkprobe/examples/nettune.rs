use minkprobe::distance::bronshtein_net;
use minkprobe::geometry::Dim;
use std::time::Instant;

fn main() {
    for &eps in &[0.2f64, 0.1, 0.05] {
        let t0 = Instant::now();
        let n = bronshtein_net(Dim::Two, eps, 2024).len();
        println!("eps {eps}: count {n} in {:.2?}", t0.elapsed());
    }
}
