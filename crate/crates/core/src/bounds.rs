//! Performance-bound formulas and the checks built on them.
//!
//! Ratios are relative to the optimal UQP value. At desk scale the optimum is
//! stood in for by the grid oracle (a lower bound on it), so every check
//! here is a necessary condition, never a certificate.

use std::f64::consts::E;

use serde::Serialize;

use crate::eigen::{eigen_decompose, EigenDecomposition};
use crate::error::{Result, UqpError};
use crate::generate::{random_unimodular, rng_from_seed};
use crate::hermitian::{quadratic_form, HermitianMatrix};
use crate::oracle::{grid_oracle, DEFAULT_GRID};
use crate::submodular::{build_rbar, TransformResult};

/// Largest `N` for which checks fall back on the grid oracle.
pub const ORACLE_CHECK_MAX_N: usize = 6;

/// `1 - 1/e`.
pub fn greedy_ratio() -> f64 {
    1.0 - 1.0 / E
}

/// `1 - 1/e + 1/(e (2N + 1))`.
pub fn dominant_greedy_ratio(n: usize) -> f64 {
    1.0 - 1.0 / E + 1.0 / (E * (2 * n + 1) as f64)
}

/// `(2N - 1) / (2N + 1)`: floor on any unimodular value for 2N-dominant `R`.
pub fn universal_ratio(n: usize) -> f64 {
    (2 * n - 1) as f64 / (2 * n + 1) as f64
}

/// `(lambda_N + (N - 1) lambda_1) / (lambda_N N)`, clamped at 0. Zero when
/// `lambda_N <= 0`.
pub fn dominant_matching_ratio(lambda_min: f64, lambda_max: f64, n: usize) -> f64 {
    if lambda_max <= 0.0 {
        return 0.0;
    }
    let nf = n as f64;
    ((lambda_max + (nf - 1.0) * lambda_min) / (lambda_max * nf)).max(0.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub spectral_lo: f64,
    pub spectral_hi: f64,
    pub prop1_ratio: f64,
    pub thm1_applicable: bool,
    pub thm1_ratio: f64,
    pub prop2_applicable: bool,
    pub prop2_ratio: f64,
    pub universal_ratio: f64,
}

pub fn compute_bounds(r: &HermitianMatrix) -> Result<BoundReport> {
    let ed = eigen_decompose(r)?;
    Ok(compute_bounds_with(r, &ed, &build_rbar(r)))
}

pub fn compute_bounds_with(r: &HermitianMatrix, ed: &EigenDecomposition, t: &TransformResult) -> BoundReport {
    let n = r.n();
    let (lo, hi) = (ed.min_eigenvalue(), ed.max_eigenvalue());
    let thm1 = t.theorem1_condition();
    let prop2 = r.is_m_dominant(2.0 * n as f64);
    BoundReport {
        spectral_lo: lo * n as f64,
        spectral_hi: hi * n as f64,
        prop1_ratio: dominant_matching_ratio(lo, hi, n),
        thm1_applicable: thm1,
        thm1_ratio: if thm1 { greedy_ratio() } else { 0.0 },
        prop2_applicable: prop2,
        prop2_ratio: if prop2 { dominant_greedy_ratio(n) } else { 0.0 },
        universal_ratio: if prop2 { universal_ratio(n) } else { 0.0 },
    }
}

#[inline]
fn leq(a: f64, b: f64) -> bool {
    a <= b + 1e-9 * a.abs().max(b.abs()).max(1.0)
}

/// One clause of the 2N-dominance chain, with both sides kept for reporting.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Clause {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

impl Clause {
    fn le(lhs: f64, rhs: f64) -> Self {
        Self { lhs, rhs, holds: leq(lhs, rhs) }
    }

    fn ge(lhs: f64, rhs: f64) -> Self {
        Self { lhs, rhs, holds: leq(rhs, lhs) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AppendixReport {
    NotApplicable,
    Checked {
        /// `sum_{k>=2} delta_k <= Tr(R) / 4N`
        delta_sum: Clause,
        /// `Tr(R_bar) <= Tr(R)`
        trace: Clause,
        /// `grid value <= (1 + 1/2N) Tr(R)`; `None` above the oracle size limit
        optimum: Option<Clause>,
        /// `Tr(R) - Tr(R_bar) >= grid value / (2N + 1)`
        gap: Option<Clause>,
    },
}

impl AppendixReport {
    pub fn all_hold(&self) -> bool {
        match self {
            AppendixReport::NotApplicable => true,
            AppendixReport::Checked { delta_sum, trace, optimum, gap } => {
                delta_sum.holds
                    && trace.holds
                    && optimum.is_none_or(|c| c.holds)
                    && gap.is_none_or(|c| c.holds)
            }
        }
    }
}

/// Evaluate the inequality chain behind the 2N-dominance guarantee. Clauses
/// (iii) and (iv) need the grid oracle (`M = 16`) and are skipped for `N > 6`.
pub fn appendix_inequalities(r: &HermitianMatrix) -> Result<AppendixReport> {
    let n = r.n();
    let nf = n as f64;
    if !r.is_m_dominant(2.0 * nf) {
        return Ok(AppendixReport::NotApplicable);
    }
    let t = build_rbar(r);
    let tr = t.trace_r;
    let delta_sum: f64 = t.deltas.iter().skip(1).sum();
    let (optimum, gap) = if n <= ORACLE_CHECK_MAX_N {
        let v = grid_oracle(r, DEFAULT_GRID)?.value;
        (
            Some(Clause::le(v, (1.0 + 1.0 / (2.0 * nf)) * tr)),
            Some(Clause::ge(tr - t.trace_rbar, v / (2.0 * nf + 1.0))),
        )
    } else {
        (None, None)
    };
    Ok(AppendixReport::Checked {
        delta_sum: Clause::le(delta_sum, tr / (4.0 * nf)),
        trace: Clause::le(t.trace_rbar, tr),
        optimum,
        gap,
    })
}

/// Draw `samples` random unimodular vectors and check each against the floor
/// `(2N - 1)/(2N + 1) * grid_oracle(R, 16)` (absolute slack `1e-9`).
pub fn universal_floor_check(r: &HermitianMatrix, samples: usize, seed: u64) -> Result<bool> {
    let n = r.n();
    if !r.is_m_dominant(2.0 * n as f64) {
        return Err(UqpError::NotApplicable(format!("matrix is not {}-dominant", 2 * n)));
    }
    if n > ORACLE_CHECK_MAX_N {
        return Err(UqpError::InstanceTooLarge { n, grid: DEFAULT_GRID });
    }
    let floor = universal_ratio(n) * grid_oracle(r, DEFAULT_GRID)?.value;
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let s = random_unimodular(n, &mut rng);
        if quadratic_form(r, &s)? < floor - 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}
