//! Per-instance invariant and bound checks behind `uqp check`.

use rand::Rng;

use crate::bounds::{
    appendix_inequalities, compute_bounds_with, dominant_greedy_ratio, greedy_ratio, universal_floor_check,
    ORACLE_CHECK_MAX_N,
};
use crate::eigen::{diagonal_load_with, eigen_decompose};
use crate::error::Result;
use crate::generate::{random_unimodular, rng_from_seed};
use crate::hermitian::{quadratic_form, HermitianMatrix};
use crate::oracle::{grid_oracle, DEFAULT_GRID};
use crate::solvers::{
    solve_dominant_matching, solve_greedy, solve_power_method, solve_row_swap_greedy, PowerOptions,
};
use crate::submodular::build_rbar;

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome { name, passed, detail }
}

/// Run every applicable check on `r`. Oracle-backed checks run only for
/// `N <= 6`.
pub fn check_instance(r: &HermitianMatrix, seed: u64) -> Result<Vec<CheckOutcome>> {
    let n = r.n();
    let nf = n as f64;
    let mut out = Vec::new();
    let ed = eigen_decompose(r)?;
    let t = build_rbar(r);
    let bounds = compute_bounds_with(r, &ed, &t);
    let scale = ed.max_eigenvalue().abs().max(ed.min_eigenvalue().abs()).max(1.0);

    let worst = (0..n)
        .map(|i| {
            let v = ed.eigenvector(i);
            let y = r.matvec(v);
            y.iter().zip(v).map(|(a, b)| (a - b * ed.eigenvalues()[i]).norm_sqr()).sum::<f64>().sqrt()
        })
        .fold(0.0, f64::max);
    out.push(outcome("eigen_residual", worst <= 1e-8 * scale, format!("max residual {worst:e}")));

    let identity_gap = (t.trace_rbar - t.weighted_delta_trace()).abs();
    out.push(outcome(
        "rbar_trace_identity",
        identity_gap <= 1e-9 * t.trace_rbar.abs().max(1.0),
        format!("Tr(Rbar) = {}, sum (4k-2) delta_k = {}", t.trace_rbar, t.weighted_delta_trace()),
    ));

    let mut rng = rng_from_seed(seed);
    let (loaded, shift) = diagonal_load_with(r, &ed);
    let s = random_unimodular(n, &mut rng);
    let lhs = quadratic_form(&loaded, &s)?;
    let rhs = quadratic_form(r, &s)? - shift * nf;
    out.push(outcome(
        "diagonal_load_identity",
        (lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0),
        format!("loaded {lhs}, original - lambda_1 N {rhs}"),
    ));

    let d = solve_dominant_matching(r)?;
    let g = solve_greedy(r);
    let rs = solve_row_swap_greedy(r);
    let s0 = random_unimodular(n, &mut rng);
    let pm = solve_power_method(r, &s0, PowerOptions::default())?;

    let hi = bounds.spectral_hi + 1e-8 * scale * nf;
    let lo = bounds.spectral_lo - 1e-8 * scale * nf;
    let in_sandwich = [d.value, g.value, rs.value, pm.value].iter().all(|v| (lo..=hi).contains(v));
    out.push(outcome(
        "spectral_sandwich",
        in_sandwich,
        format!("values D {} G {} RS {} PM {} in [{lo}, {hi}]", d.value, g.value, rs.value, pm.value),
    ));

    if ed.min_eigenvalue() >= -1e-9 * scale && bounds.spectral_hi > 0.0 {
        let ratio = d.value / bounds.spectral_hi;
        out.push(outcome(
            "dominant_matching_bound",
            ratio >= bounds.prop1_ratio - 1e-9,
            format!("normalized {ratio}, bound {}", bounds.prop1_ratio),
        ));
    }

    out.push(outcome(
        "row_swap_dominance",
        rs.value >= g.value,
        format!("row-swap {}, greedy {}", rs.value, g.value),
    ));

    let trace = pm.trace.unwrap_or_default();
    out.push(outcome(
        "power_monotone",
        trace.windows(2).all(|w| w[1] >= w[0] - 1e-12),
        format!("{} iterates", trace.len()),
    ));

    let perturb: Vec<f64> = (0..n).map(|i| r.diag(i) + rng.random_range(-10.0..10.0)).collect();
    let g2 = solve_greedy(&r.with_diagonal(&perturb)?);
    out.push(outcome(
        "greedy_diagonal_invariance",
        g2.solution == g.solution,
        "phase sequences compared".into(),
    ));

    if bounds.prop2_applicable {
        out.push(outcome(
            "dominance_implies_trace_condition",
            bounds.thm1_applicable,
            format!("Tr(Rbar) = {}, Tr(R) = {}", t.trace_rbar, t.trace_r),
        ));
        let app = appendix_inequalities(r)?;
        out.push(outcome("appendix_inequalities", app.all_hold(), format!("{app:?}")));
    }

    if n <= ORACLE_CHECK_MAX_N {
        let oracle = grid_oracle(r, DEFAULT_GRID)?.value;
        out.push(outcome(
            "oracle_below_spectral_bound",
            oracle <= bounds.spectral_hi + 1e-8,
            format!("oracle {oracle}, lambda_N N {}", bounds.spectral_hi),
        ));
        if bounds.thm1_applicable {
            let need = greedy_ratio() * oracle;
            out.push(outcome(
                "greedy_trace_condition_guarantee",
                g.value >= need - 1e-9,
                format!("greedy {}, (1-1/e) oracle {need}", g.value),
            ));
        }
        if bounds.prop2_applicable {
            let need = dominant_greedy_ratio(n) * oracle;
            out.push(outcome(
                "greedy_dominance_guarantee",
                g.value >= need - 1e-9,
                format!("greedy {}, ratio * oracle {need}", g.value),
            ));
            let floor = universal_floor_check(r, 100, seed)?;
            out.push(outcome("universal_floor", floor, "100 random samples".into()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_dominant, random_hermitian, random_psd};

    #[test]
    fn all_checks_pass_on_generated_instances() {
        for seed in 0..5 {
            for r in [random_psd(5, seed, 1000.0), random_dominant(4, seed, 8.0), random_hermitian(6, seed)] {
                for c in check_instance(&r, seed).unwrap() {
                    assert!(c.passed, "{}: {}", c.name, c.detail);
                }
            }
        }
    }
}
