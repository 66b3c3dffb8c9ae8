use crate::eigen::diagonal_load;
use crate::error::{Result, UqpError};
use crate::generate::{random_unimodular, rng_from_seed};
use crate::hermitian::{phase_or_zero, HermitianMatrix, UnimodularVector};

use super::{Method, SolverReport};

#[derive(Clone, Copy, Debug)]
pub struct PowerOptions {
    pub max_iters: usize,
    /// Stop once the relative objective improvement falls below this.
    pub tol: f64,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self { max_iters: 1000, tol: 1e-10 }
    }
}

/// Fixed-point iteration `s <- e^{j arg(R s)}`.
///
/// Indefinite `R` is diagonally loaded first, which is what makes the
/// objective nondecreasing along the iterates. `trace[0]` is the value of
/// `s0`; each later entry is the value of an accepted iterate, measured on the
/// original `R`. An iterate whose value falls below the current one (possible
/// only through rounding at a fixed point) is not accepted and ends the run.
pub fn solve_power_method(
    r: &HermitianMatrix,
    s0: &UnimodularVector,
    opts: PowerOptions,
) -> Result<SolverReport> {
    let n = r.n();
    if s0.len() != n {
        return Err(UqpError::DimensionMismatch { expected: n, actual: s0.len() });
    }
    let (loaded, _) = diagonal_load(r)?;

    let mut current = s0.to_complex();
    let mut phases = s0.phases().to_vec();
    let mut value = r.form(&current);
    let mut trace = vec![value];
    let mut iterations = 0;

    while iterations < opts.max_iters {
        let y = loaded.matvec(&current);
        let next_phases: Vec<f64> = y.iter().map(|&z| phase_or_zero(z, 0.0)).collect();
        let next: Vec<_> = next_phases.iter().map(|&p| num_complex::Complex64::from_polar(1.0, p)).collect();
        let next_value = r.form(&next);
        iterations += 1;
        if next_value < value {
            break;
        }
        let gain = next_value - value;
        current = next;
        phases = next_phases;
        value = next_value;
        trace.push(value);
        if gain <= opts.tol * value.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }

    let solution = UnimodularVector::from_phases(phases)?;
    let mut report = SolverReport::new(Method::PowerMethod, r, solution, iterations);
    report.trace = Some(trace);
    Ok(report)
}

/// Uniform random phases; a baseline.
pub fn solve_random(r: &HermitianMatrix, seed: u64) -> SolverReport {
    let mut rng = rng_from_seed(seed);
    let s = random_unimodular(r.n(), &mut rng);
    SolverReport::new(Method::Random, r, s, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_hermitian, random_psd};
    use std::f64::consts::PI;

    fn counter_example() -> HermitianMatrix {
        HermitianMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap()
    }

    #[test]
    fn fixed_point_from_ones() {
        let rep = solve_power_method(&counter_example(), &UnimodularVector::ones(2), PowerOptions::default())
            .unwrap();
        assert_eq!(rep.solution.phases(), &[0.0, 0.0]);
        assert_eq!(rep.value, 6.0);
        assert_eq!(rep.iterations, 1);
    }

    #[test]
    fn non_global_fixed_point() {
        let s0 = UnimodularVector::from_phases(vec![0.0, PI]).unwrap();
        let rep = solve_power_method(&counter_example(), &s0, PowerOptions::default()).unwrap();
        assert!((rep.value - 2.0).abs() < 1e-12);
        assert_eq!(rep.iterations, 1);
        assert!((rep.solution.relative_phases()[1] - PI).abs() < 1e-12);
    }

    #[test]
    fn trace_is_nondecreasing() {
        for seed in 0..30 {
            let r = if seed % 2 == 0 { random_psd(8, seed, 1000.0) } else { random_hermitian(8, seed) };
            let mut rng = rng_from_seed(seed + 100);
            let s0 = random_unimodular(8, &mut rng);
            let rep = solve_power_method(&r, &s0, PowerOptions::default()).unwrap();
            let t = rep.trace.unwrap();
            assert!(t.windows(2).all(|w| w[1] >= w[0] - 1e-12));
            assert_eq!(*t.last().unwrap(), rep.value);
        }
    }

    #[test]
    fn rejects_wrong_start_length() {
        let r = counter_example();
        assert!(solve_power_method(&r, &UnimodularVector::ones(3), PowerOptions::default()).is_err());
    }

    #[test]
    fn random_baseline() {
        let rep = solve_random(&HermitianMatrix::identity(6), 3);
        assert!((rep.value - 6.0).abs() < 1e-12);
        let r = random_psd(5, 2, 1000.0);
        assert_eq!(solve_random(&r, 9).solution, solve_random(&r, 9).solution);
    }
}
