//! Dominant-eigenvector matching against its eigenvalue-ratio guarantee on
//! random PSD matrices.
//!
//! cargo run --release --example dominant_matching_bound

use uqp::bounds::dominant_matching_ratio;
use uqp::eigen::eigen_decompose;
use uqp::generate::random_psd;
use uqp::solvers::solve_dominant_matching;

fn main() -> uqp::Result<()> {
    for n in [10, 20, 50] {
        let mut sum = 0.0;
        let mut slack = f64::INFINITY;
        for seed in 0..100 {
            let r = random_psd(n, seed, 1000.0);
            let ed = eigen_decompose(&r)?;
            let normalized = solve_dominant_matching(&r)?.value / (ed.max_eigenvalue() * n as f64);
            let bound = dominant_matching_ratio(ed.min_eigenvalue(), ed.max_eigenvalue(), n);
            sum += normalized;
            slack = slack.min(normalized - bound);
        }
        println!("N = {n}: mean normalized {:.4}, smallest margin above bound {slack:.4}", sum / 100.0);
    }
    Ok(())
}
