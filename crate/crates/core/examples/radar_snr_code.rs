//! Phase code design for a target with Doppler shift in exponentially
//! correlated clutter: maximize c^H R c with R = M^{-1} (Hadamard) conj(p p^H).
//!
//! cargo run --example radar_snr_code

use std::f64::consts::PI;

use uqp::applications::build_snr_matrix;
use uqp::hermitian::HermitianMatrix;
use uqp::solvers::{solve, Method};
use uqp::Complex64;

fn main() -> uqp::Result<()> {
    let n = 16;
    let doppler = 0.15;
    let rho: f64 = 0.9;
    let noise = 0.1;

    let mut cov = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let d = i as f64 - j as f64;
            let clutter = rho.powf(d.abs()) * Complex64::from_polar(1.0, 0.05 * PI * d);
            cov.push(clutter + if i == j { Complex64::new(noise, 0.0) } else { Complex64::new(0.0, 0.0) });
        }
    }
    let cov = HermitianMatrix::from_row_major(n, cov)?;
    let steering: Vec<Complex64> = (0..n).map(|k| Complex64::from_polar(1.0, 2.0 * PI * doppler * k as f64)).collect();
    let r = build_snr_matrix(&cov, &steering)?;

    let uncoded = uqp::quadratic_form(&r, &uqp::UnimodularVector::ones(n))?;
    println!("uncoded pulse train SNR: {uncoded:.3}");
    for method in [Method::DominantMatching, Method::Greedy, Method::RowSwapGreedy, Method::PowerMethod] {
        let rep = solve(method, &r, 0)?;
        println!("{:>16}: SNR {:.3} ({:+.2} dB)", method.tag(), rep.value, 10.0 * (rep.value / uncoded).log10());
    }
    Ok(())
}
