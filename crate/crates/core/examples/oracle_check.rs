//! Greedy merging against the exact shortest superstring on small random
//! instances.

use compactor::compact::OracleLimits;
use compactor::model::TieStrategy;
use compactor::report::oracle_compare;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 1.0;
    let mut suboptimal = 0;
    let trials = 500;
    for _ in 0..trials {
        let n = rng.gen_range(2..=5);
        let rows: Vec<Vec<u8>> = (0..n)
            .map(|_| (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(0..3)).collect())
            .collect();
        let r = oracle_compare(&rows, TieStrategy::First, 0, OracleLimits::default()).unwrap();
        if r.greedy_len > r.optimal_len {
            suboptimal += 1;
            if r.ratio > worst {
                worst = r.ratio;
                println!("{rows:?}: greedy {} vs optimal {}", r.greedy_len, r.optimal_len);
            }
        }
    }
    println!("{suboptimal}/{trials} instances above optimal, worst ratio {worst:.3}");
}
