//! Row-swap greedy: tries every transposition and keeps the best.
//!
//! cargo run --release --example row_swap

use uqp::generate::random_psd;
use uqp::solvers::{solve_greedy, solve_row_swap_greedy};

fn main() {
    for n in [5, 10, 20] {
        let mut gain = 0.0;
        let mut improved = 0;
        let count = 50;
        for seed in 0..count {
            let r = random_psd(n, seed, 1000.0);
            let g = solve_greedy(&r).value;
            let rs = solve_row_swap_greedy(&r);
            assert!(rs.value >= g);
            if rs.value > g {
                improved += 1;
                gain += rs.value / g - 1.0;
            }
            if seed == 0 {
                println!("n = {n}, seed 0: greedy {g:.3}, row-swap {:.3}, swap {:?}", rs.value, rs.chosen_swap);
            }
        }
        println!("n = {n}: improved {improved}/{count}, mean gain {:.2}%", 100.0 * gain / count as f64);
    }
}
