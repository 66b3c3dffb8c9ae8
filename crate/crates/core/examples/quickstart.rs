//! Build a small Hermitian matrix, run every method and compare against the
//! grid oracle.
//!
//! cargo run --example quickstart

use uqp::oracle::grid_oracle;
use uqp::solvers::{solve, Method};
use uqp::{make_hermitian, Complex64};

fn main() -> uqp::Result<()> {
    let c = Complex64::new;
    let r = make_hermitian(&[
        [c(4.0, 0.0), c(1.0, 1.0), c(0.0, -2.0)],
        [c(1.0, -1.0), c(3.0, 0.0), c(0.5, 0.0)],
        [c(0.0, 2.0), c(0.5, 0.0), c(5.0, 0.0)],
    ])?;

    let best = grid_oracle(&r, 64)?;
    println!("grid oracle (64 points per phase): {:.6}", best.value);
    for method in Method::ALL {
        let rep = solve(method, &r, 1)?;
        println!("{:>16}: {:.6}  ({:.1}% of oracle)", method.tag(), rep.value, 100.0 * rep.value / best.value);
    }
    Ok(())
}
