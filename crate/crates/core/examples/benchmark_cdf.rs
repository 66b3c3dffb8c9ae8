//! Seeded benchmark over several sizes, written as CSV records plus the
//! empirical CDF of normalized values.
//!
//! cargo run --release --example benchmark_cdf -- /tmp/uqp_bench

use std::path::PathBuf;

use uqp::harness::{emit_cdf, emit_csv, run_experiment, write_cdf_csv, ExperimentConfig};
use uqp::solvers::Method;

fn main() -> uqp::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;

    let cfg = ExperimentConfig::new(
        vec![10, 20],
        100,
        2024,
        vec![Method::DominantMatching, Method::Greedy, Method::PowerMethod, Method::Random],
    );
    let records = run_experiment(&cfg)?;
    emit_csv(&records, dir.join("records.csv"))?;
    write_cdf_csv(&records, std::fs::File::create(dir.join("cdf.csv"))?)?;

    for method in &cfg.methods {
        let cdf = emit_cdf(&records, *method, 20)?;
        let median = cdf.iter().find(|(_, f)| *f >= 0.5).map(|(v, _)| *v).unwrap_or(f64::NAN);
        println!("{:>16}: median normalized value at N = 20: {median:.4}", method.tag());
    }
    println!("wrote {} records to {}", records.len(), dir.display());
    Ok(())
}
