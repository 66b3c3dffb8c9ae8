use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, UqpError};
use crate::hermitian::{phase_or_zero, quadratic_form, HermitianMatrix, UnimodularVector};
use crate::submodular::CodeString;

use super::{Method, RowSwap, SolverReport};

/// `|c|` below which every extension is optimal and phase 0 is chosen.
const TIE_TOL: f64 = 1e-14;

/// Phase of the best next entry given the complex prefix `x` and the
/// corresponding row of `R`: maximizing `2 Re(conj(u) c)` over `|u| = 1`
/// gives `u = e^{j arg c}` with `c = sum_i r_{k+1,i} x_i`.
#[inline]
fn best_extension(row: &[Complex64], prefix: &[Complex64]) -> f64 {
    let c: Complex64 = row.iter().zip(prefix).map(|(r, x)| r * x).sum();
    phase_or_zero(c, TIE_TOL)
}

/// Phase of the entry appended to `prefix` by one greedy step: the maximizer
/// of `[prefix, u]^H R_{k+1} [prefix, u]` over unimodular `u`.
pub fn greedy_step(r: &HermitianMatrix, prefix: &CodeString) -> Result<f64> {
    let k = prefix.len();
    if k >= r.n() {
        return Err(UqpError::PrefixTooLong { len: k, n: r.n() });
    }
    Ok(best_extension(&r.row(k)[..k], &prefix.to_complex()))
}

fn greedy_phases(r: &HermitianMatrix) -> Vec<f64> {
    let n = r.n();
    let mut phases = Vec::with_capacity(n);
    let mut x = Vec::with_capacity(n);
    phases.push(0.0);
    x.push(Complex64::new(1.0, 0.0));
    for k in 1..n {
        let p = best_extension(&r.row(k)[..k], &x);
        phases.push(p);
        x.push(Complex64::from_polar(1.0, p));
    }
    phases
}

/// Fix `g(1) = 1` and extend one entry at a time with [`greedy_step`].
/// `O(N^2)` arithmetic.
pub fn solve_greedy(r: &HermitianMatrix) -> SolverReport {
    let solution = UnimodularVector::from_phases(greedy_phases(r)).expect("finite phases");
    SolverReport::new(Method::Greedy, r, solution, r.n() - 1)
}

/// `P R P` for the row switch `p`; `None` is the identity.
pub fn conjugate_by_swap(r: &HermitianMatrix, p: Option<RowSwap>) -> Result<HermitianMatrix> {
    let Some(p) = p else {
        return Ok(r.clone());
    };
    let n = r.n();
    if p.m() >= n {
        return Err(UqpError::IndexOutOfRange { index: p.m() + 1, max: n });
    }
    let perm = |i: usize| {
        if i == p.m() {
            p.n()
        } else if i == p.n() {
            p.m()
        } else {
            i
        }
    };
    let entries = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| r.get(perm(i), perm(j)))
        .collect();
    Ok(HermitianMatrix::from_trusted(n, entries))
}

/// Identity first, then `(m, n)` ordered by `n` and then `m`.
pub fn swap_candidates(dim: usize) -> Vec<Option<RowSwap>> {
    let mut out = Vec::with_capacity(1 + dim * dim.saturating_sub(1) / 2);
    out.push(None);
    for n in 0..dim {
        for m in (n + 1)..dim {
            out.push(Some(RowSwap { m, n }));
        }
    }
    out
}

/// Greedy on `P R P` for every single row switch and the identity; keep the
/// best. The solution is mapped back as `P g_hat`, so `value` is measured on
/// `R` itself. Ties go to the earliest candidate.
pub fn solve_row_swap_greedy(r: &HermitianMatrix) -> SolverReport {
    let candidates = swap_candidates(r.n());
    let evaluate = |p: &Option<RowSwap>| {
        let rp = conjugate_by_swap(r, *p).expect("candidate indices in range");
        let g = UnimodularVector::from_phases(greedy_phases(&rp)).expect("finite phases");
        let mapped = match p {
            Some(p) => g.swapped(p.m(), p.n()),
            None => g,
        };
        let value = quadratic_form(r, &mapped).expect("matching length");
        (value, mapped)
    };
    let results: Vec<(f64, UnimodularVector)> = if r.n() >= 8 {
        candidates.par_iter().map(evaluate).collect()
    } else {
        candidates.iter().map(evaluate).collect()
    };

    let mut best = 0;
    for (i, (v, _)) in results.iter().enumerate() {
        if *v > results[best].0 {
            best = i;
        }
    }
    let trace = results.iter().map(|(v, _)| *v).collect();
    let (value, solution) = results[best].clone();
    SolverReport {
        method: Method::RowSwapGreedy,
        solution,
        value,
        iterations: candidates.len(),
        trace: Some(trace),
        chosen_swap: candidates[best],
    }
}
