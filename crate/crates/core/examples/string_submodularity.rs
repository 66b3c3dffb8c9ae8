//! The transformed matrix and its string objective: monotone growth along a
//! code string, and the trace condition on a few matrices.
//!
//! cargo run --example string_submodularity

use uqp::generate::{random_dominant, random_psd};
use uqp::hermitian::HermitianMatrix;
use uqp::submodular::{build_rbar, CodeString};
use uqp::solvers::greedy_step;

fn main() -> uqp::Result<()> {
    let r = random_dominant(5, 7, 10.0);
    let t = build_rbar(&r);
    println!("deltas {:?}", t.deltas);
    println!("loads  {:?}", t.loads);
    println!("Tr(R) = {:.4}, Tr(Rbar) = {:.4}, condition {}", t.trace_r, t.trace_rbar, t.theorem1_condition());

    // grow a string greedily and watch F increase
    let mut a = CodeString::empty();
    while a.len() < r.n() {
        let phase = if a.is_empty() { 0.0 } else { greedy_step(&t.rbar, &a)? };
        a = a.appended(phase);
        println!("k = {}: F = {:.4}", a.len(), t.string_objective(&a)?);
    }

    let ce = HermitianMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]])?;
    let psd = random_psd(6, 1, 1000.0);
    for (name, m) in [("[[2,1],[1,2]]", ce), ("random psd", psd)] {
        let t = build_rbar(&m);
        println!("{name}: Tr(Rbar) = {:.3} vs Tr(R) = {:.3}", t.trace_rbar, t.trace_r);
    }
    Ok(())
}
