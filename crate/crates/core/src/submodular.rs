//! Diagonal re-weighting `R -> R_bar` that makes the prefix objective
//! `F(A_k) = A_k^H R_bar_k A_k` string-submodular over unimodular strings.
//!
//! With `delta_k = sum_{i<k} |r_ki|` (strict lower triangle, row-wise) the
//! new diagonal is
//!
//! ```text
//! a_k = 2 delta_k + 4 sum_{i>k} delta_i      (k < N)
//! a_N = 2 delta_N
//! ```
//!
//! and `R_bar = R - Diag(R) + diag(a)`. Off-diagonals are untouched, so on
//! full-length vectors `s^H R_bar s - s^H R s = Tr(R_bar) - Tr(R)` and both
//! forms share the same maximizers.

use num_complex::Complex64;

use crate::error::{Result, UqpError};
use crate::hermitian::{wrap_phase, HermitianMatrix};

/// A unimodular string of length `1..=N`, stored as phases.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeString {
    phases: Vec<f64>,
}

impl CodeString {
    pub fn from_phases(phases: Vec<f64>) -> Self {
        Self { phases: phases.into_iter().map(wrap_phase).collect() }
    }

    pub fn empty() -> Self {
        Self { phases: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.phases.iter().map(|&p| Complex64::from_polar(1.0, p)).collect()
    }

    /// `self (+) (phase)`.
    pub fn appended(&self, phase: f64) -> Self {
        let mut phases = self.phases.clone();
        phases.push(wrap_phase(phase));
        Self { phases }
    }

    /// Leading `k` elements.
    pub fn prefix(&self, k: usize) -> Self {
        Self { phases: self.phases[..k].to_vec() }
    }

    /// `self` is a prefix of `other` (`self` precedes-or-equals `other`).
    pub fn is_prefix_of(&self, other: &CodeString) -> bool {
        self.len() <= other.len() && other.phases[..self.len()] == self.phases[..]
    }
}

pub fn compute_deltas(r: &HermitianMatrix) -> Vec<f64> {
    (0..r.n()).map(|k| r.row(k)[..k].iter().map(|z| z.norm()).sum()).collect()
}

pub fn compute_loads(deltas: &[f64]) -> Vec<f64> {
    let n = deltas.len();
    let mut loads = vec![0.0; n];
    let mut tail = 0.0; // sum_{i>k} delta_i
    for k in (0..n).rev() {
        loads[k] = 2.0 * deltas[k] + 4.0 * tail;
        tail += deltas[k];
    }
    loads
}

#[derive(Clone, Debug)]
pub struct TransformResult {
    pub deltas: Vec<f64>,
    pub loads: Vec<f64>,
    pub rbar: HermitianMatrix,
    pub trace_r: f64,
    pub trace_rbar: f64,
    r: HermitianMatrix,
}

pub fn build_rbar(r: &HermitianMatrix) -> TransformResult {
    let deltas = compute_deltas(r);
    let loads = compute_loads(&deltas);
    let rbar = r.with_diagonal(&loads).expect("loads are finite");
    let trace_rbar = loads.iter().sum();
    TransformResult { trace_r: r.trace(), trace_rbar, deltas, loads, rbar, r: r.clone() }
}

impl TransformResult {
    pub fn n(&self) -> usize {
        self.deltas.len()
    }

    pub fn original(&self) -> &HermitianMatrix {
        &self.r
    }

    /// `Tr(R_bar) <= Tr(R)`, with `1e-12` relative slack toward true.
    pub fn theorem1_condition(&self) -> bool {
        self.trace_rbar <= self.trace_r + 1e-12 * self.trace_r.abs().max(1.0)
    }

    /// `sum_{k=2}^N (4k - 2) delta_k` (1-based `k`).
    pub fn weighted_delta_trace(&self) -> f64 {
        self.deltas.iter().enumerate().map(|(i, d)| (4.0 * (i + 1) as f64 - 2.0) * d).sum()
    }

    /// `F(A) = A^H R_bar_k A` with `k = |A|`; `F` of the empty string is 0.
    pub fn string_objective(&self, a: &CodeString) -> Result<f64> {
        let k = a.len();
        if k > self.n() {
            return Err(UqpError::DimensionMismatch { expected: self.n(), actual: k });
        }
        if k == 0 {
            return Ok(0.0);
        }
        let x = a.to_complex();
        let mut acc = 0.0;
        for i in 0..k {
            acc += self.loads[i];
            let row = self.rbar.row(i);
            let c: Complex64 = (0..i).map(|j| row[j] * x[j]).sum();
            acc += 2.0 * (x[i].conj() * c).re;
        }
        Ok(acc)
    }

    /// Trace of the leading `k x k` block of `R_bar` minus that of `R`.
    pub fn prefix_trace_gap(&self, k: usize) -> f64 {
        (0..k).map(|i| self.loads[i] - self.r.diag(i)).sum()
    }

    /// Bounds on `F(A) - F(B)` for any `B` of length `k` that is a prefix of
    /// `A` of length `l` (1-based, `1 <= k <= l <= N`).
    pub fn lemma1_interval(&self, k: usize, l: usize) -> Result<(f64, f64)> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(UqpError::IndexOutOfRange { index: k, max: n });
        }
        if l < k || l > n {
            return Err(UqpError::IndexOutOfRange { index: l, max: n });
        }
        // tails[i] = sum over 1-based indices > i of delta
        let mut tails = vec![0.0; n + 1];
        for i in (0..n).rev() {
            tails[i] = tails[i + 1] + self.deltas[i];
        }
        let mut lo = 0.0;
        let mut hi = 0.0;
        for i in (k + 1)..=l {
            lo += tails[i];
            hi += self.deltas[i - 1] + tails[i];
        }
        Ok((4.0 * lo, 4.0 * hi))
    }
}

pub fn theorem1_condition(r: &HermitianMatrix) -> bool {
    build_rbar(r).theorem1_condition()
}

pub fn string_objective(r: &HermitianMatrix, a: &CodeString) -> Result<f64> {
    build_rbar(r).string_objective(a)
}

pub fn lemma1_interval(r: &HermitianMatrix, k: usize, l: usize) -> Result<(f64, f64)> {
    build_rbar(r).lemma1_interval(k, l)
}
