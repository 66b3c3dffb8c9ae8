//! Greedy phase selection on 2N-dominant matrices. Prints the worst observed
//! ratio against the oracle next to the guaranteed ratios.
//!
//! cargo run --release --example greedy_guarantee

use uqp::bounds::{compute_bounds, dominant_greedy_ratio, greedy_ratio};
use uqp::generate::random_dominant;
use uqp::oracle::grid_oracle;
use uqp::solvers::solve_greedy;

fn main() -> uqp::Result<()> {
    println!("(1 - 1/e) = {:.4}", greedy_ratio());
    for n in 2..=6 {
        let mut worst = f64::INFINITY;
        for seed in 0..100 {
            let r = random_dominant(n, seed, 2.0 * n as f64);
            let b = compute_bounds(&r)?;
            assert!(b.thm1_applicable && b.prop2_applicable);
            let g = solve_greedy(&r).value;
            worst = worst.min(g / grid_oracle(&r, 16)?.value);
        }
        println!("n = {n}: worst greedy/oracle {worst:.4}, guaranteed {:.4}", dominant_greedy_ratio(n));
    }
    Ok(())
}
