//! Power method from a random start, printing the monotone objective trace.
//! Works on indefinite matrices through diagonal loading.
//!
//! cargo run --example power_method

use uqp::generate::{random_hermitian, random_unimodular, rng_from_seed};
use uqp::solvers::{solve_greedy, solve_power_method, PowerOptions};

fn main() -> uqp::Result<()> {
    let r = random_hermitian(12, 3);
    let s0 = random_unimodular(12, &mut rng_from_seed(99));
    let rep = solve_power_method(&r, &s0, PowerOptions { max_iters: 200, tol: 1e-12 })?;
    for (k, v) in rep.trace.as_deref().unwrap_or_default().iter().enumerate() {
        println!("iter {k:3}: {v:.10}");
    }
    println!("stopped after {} iterations", rep.iterations);

    // seeding from greedy usually helps
    let g = solve_greedy(&r);
    let refined = solve_power_method(&r, &g.solution, PowerOptions::default())?;
    println!("greedy {:.6} -> refined {:.6}", g.value, refined.value);
    Ok(())
}
