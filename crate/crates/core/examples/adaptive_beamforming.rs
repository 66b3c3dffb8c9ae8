//! Unimodular steering vector for an adaptive array from a sample covariance:
//! maximize c^H M^{-1} c.
//!
//! cargo run --example adaptive_beamforming

use std::f64::consts::PI;

use uqp::applications::build_beamforming_matrix;
use uqp::generate::{complex_gaussian, rng_from_seed};
use uqp::hermitian::HermitianMatrix;
use uqp::solvers::{solve, Method};
use uqp::Complex64;

fn main() -> uqp::Result<()> {
    let elements = 10;
    let snapshots = 200;
    let jammers = [0.3, -0.55];
    let mut rng = rng_from_seed(5);

    // sample covariance of two strong jammers plus white noise
    let mut acc = vec![Complex64::new(0.0, 0.0); elements * elements];
    for _ in 0..snapshots {
        let amps: Vec<Complex64> = jammers.iter().map(|_| 10.0 * complex_gaussian(&mut rng)).collect();
        let x: Vec<Complex64> = (0..elements)
            .map(|k| {
                let jam: Complex64 = jammers
                    .iter()
                    .zip(&amps)
                    .map(|(&u, a)| a * Complex64::from_polar(1.0, PI * u * k as f64))
                    .sum();
                jam + complex_gaussian(&mut rng)
            })
            .collect();
        for i in 0..elements {
            for j in 0..elements {
                acc[i * elements + j] += x[i] * x[j].conj() / snapshots as f64;
            }
        }
    }
    let cov = HermitianMatrix::from_row_major(elements, acc)?;
    let r = build_beamforming_matrix(&cov)?;

    for method in [Method::DominantMatching, Method::Greedy, Method::RowSwapGreedy, Method::Random] {
        let rep = solve(method, &r, 1)?;
        println!("{:>16}: c^H M^-1 c = {:.5}", method.tag(), rep.value);
    }
    Ok(())
}
