//! Exhaustive ground truth for desk-scale instances.
//!
//! The grid oracle fixes `s(1) = 1` (the objective is invariant to a global
//! phase) and enumerates every remaining entry over the `M`-point grid
//! `{e^{j 2 pi k / M}}`. Its value is exact for the discretized problem and a
//! lower bound on the continuous optimum.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, UqpError};
use crate::hermitian::{HermitianMatrix, UnimodularVector};

pub const ORACLE_MAX_N: usize = 8;
pub const ORACLE_MAX_POINTS: u64 = 100_000_000;
pub const DEFAULT_GRID: usize = 16;

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub value: f64,
    pub argmax: UnimodularVector,
    pub grid_points_per_phase: usize,
    pub exhaustive: bool,
}

struct Search<'a> {
    r: &'a HermitianMatrix,
    grid: &'a [Complex64],
    best: f64,
    best_idx: Vec<usize>,
    idx: Vec<usize>,
    x: Vec<Complex64>,
}

impl Search<'_> {
    /// Depth-first over entries `depth..N`; `acc` is the objective of the
    /// leading `depth x depth` block. Strict `>` keeps the lexicographically
    /// first maximizer.
    fn run(&mut self, depth: usize, acc: f64) {
        let n = self.r.n();
        if depth == n {
            if acc > self.best {
                self.best = acc;
                self.best_idx.clone_from(&self.idx);
            }
            return;
        }
        let row = self.r.row(depth);
        let c: Complex64 = (0..depth).map(|j| row[j] * self.x[j]).sum();
        let base = acc + self.r.diag(depth);
        for (k, &u) in self.grid.iter().enumerate() {
            self.idx[depth] = k;
            self.x[depth] = u;
            self.run(depth + 1, base + 2.0 * (u.conj() * c).re);
        }
    }
}

fn search_from(r: &HermitianMatrix, grid: &[Complex64], fixed: &[usize]) -> (f64, Vec<usize>) {
    let n = r.n();
    let mut s = Search {
        r,
        grid,
        best: f64::NEG_INFINITY,
        best_idx: vec![0; n],
        idx: vec![0; n],
        x: vec![Complex64::new(0.0, 0.0); n],
    };
    // replay the fixed leading entries
    let mut acc = 0.0;
    for (depth, &k) in fixed.iter().enumerate() {
        let row = r.row(depth);
        let c: Complex64 = (0..depth).map(|j| row[j] * s.x[j]).sum();
        s.idx[depth] = k;
        s.x[depth] = grid[k];
        let base = acc + r.diag(depth);
        acc = base + 2.0 * (grid[k].conj() * c).re;
    }
    s.run(fixed.len(), acc);
    (s.best, s.best_idx)
}

/// Exact maximizer over `s(1) = 1`, `s(i)` on the `M`-point phase grid.
pub fn grid_oracle(r: &HermitianMatrix, m: usize) -> Result<OracleResult> {
    let n = r.n();
    let points = (m as u64).checked_pow((n - 1) as u32);
    if n > ORACLE_MAX_N || m == 0 || points.is_none_or(|p| p > ORACLE_MAX_POINTS) {
        return Err(UqpError::InstanceTooLarge { n, grid: m });
    }
    let grid: Vec<Complex64> = (0..m).map(|k| Complex64::from_polar(1.0, TAU * k as f64 / m as f64)).collect();

    let (value, idx) = if n >= 3 && points.unwrap() >= 1 << 16 {
        // split on the first free entry; merge in index order
        let parts: Vec<(f64, Vec<usize>)> =
            (0..m).into_par_iter().map(|k| search_from(r, &grid, &[0, k])).collect();
        let mut best = 0;
        for (i, p) in parts.iter().enumerate() {
            if p.0 > parts[best].0 {
                best = i;
            }
        }
        parts[best].clone()
    } else {
        search_from(r, &grid, &[0])
    };

    let phases = idx.iter().map(|&k| TAU * k as f64 / m as f64).collect();
    Ok(OracleResult {
        value,
        argmax: UnimodularVector::from_phases(phases)?,
        grid_points_per_phase: m,
        exhaustive: true,
    })
}

/// Continuous optimum for `N = 2`: `r11 + r22 + 2 |r12|`.
pub fn exact_optimum_n2(r: &HermitianMatrix) -> Result<f64> {
    if r.n() != 2 {
        return Err(UqpError::WrongDimension { expected: 2, actual: r.n() });
    }
    Ok(r.diag(0) + r.diag(1) + 2.0 * r.get(0, 1).norm())
}
