//! Hermitian eigenanalysis: full decomposition, dominant pair by power
//! iteration, diagonal loading and eigenbasis projection.

use nalgebra::SymmetricEigen;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Result, UqpError};
use crate::hermitian::{HermitianMatrix, UnimodularVector};

/// Eigenvalues in ascending order with aligned orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<Complex64>>,
}

impl EigenDecomposition {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvector `i` (0-based, ascending eigenvalue order).
    pub fn eigenvector(&self, i: usize) -> &[Complex64] {
        &self.eigenvectors[i]
    }

    pub fn eigenvectors(&self) -> &[Vec<Complex64>] {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    pub fn dominant_eigenvector(&self) -> &[Complex64] {
        self.eigenvectors.last().unwrap()
    }

    /// `U diag(lambda) U^H` as a Hermitian matrix.
    pub fn reconstruct(&self) -> HermitianMatrix {
        let n = self.n();
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for (lam, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            for i in 0..n {
                let vi = v[i] * *lam;
                for j in 0..n {
                    entries[i * n + j] += vi * v[j].conj();
                }
            }
        }
        HermitianMatrix::from_row_major(n, entries).expect("reconstruction is Hermitian")
    }
}

/// Rotate `v` so its largest-modulus entry is real positive (lowest index on ties).
pub fn canonicalize_phase(v: &mut [Complex64]) {
    let mut best = 0;
    let mut best_mod = -1.0;
    for (i, z) in v.iter().enumerate() {
        let m = z.norm();
        if m > best_mod {
            best = i;
            best_mod = m;
        }
    }
    if best_mod <= 0.0 {
        return;
    }
    let rot = v[best].conj() / best_mod;
    for z in v.iter_mut() {
        *z *= rot;
    }
    v[best] = Complex64::new(best_mod, 0.0);
}

pub fn eigen_decompose(r: &HermitianMatrix) -> Result<EigenDecomposition> {
    let n = r.n();
    let max_iter = 1000 * n + 1000;
    let eig = SymmetricEigen::try_new(r.to_nalgebra(), f64::EPSILON, max_iter)
        .ok_or(UqpError::ConvergenceFailure { iterations: max_iter, residual: f64::NAN })?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]).then(a.cmp(&b)));

    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let eigenvectors = order
        .iter()
        .map(|&k| {
            let mut v: Vec<Complex64> = eig.eigenvectors.column(k).iter().copied().collect();
            canonicalize_phase(&mut v);
            v
        })
        .collect();
    Ok(EigenDecomposition { eigenvalues, eigenvectors })
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Deterministic pseudo-random unit start vector for power iteration.
fn power_start(n: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_d0_u64);
    let mut v: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng)))
        .collect();
    let nv = norm2(&v);
    v.iter_mut().for_each(|z| *z /= nv);
    v
}

/// Largest eigenvalue and a unit eigenvector by power iteration.
///
/// `R` must be positive semidefinite. Stops when successive (phase-aligned)
/// iterates differ by less than `1e-12` or the residual drops below
/// `1e-12 * max(1, lambda)`; the returned pair satisfies
/// `||R e - lambda e|| <= 1e-10 * max(1, lambda)` or the call fails with
/// `ConvergenceFailure` after `100 * N` iterations.
pub fn dominant_eigenpair(r: &HermitianMatrix) -> Result<(f64, Vec<Complex64>)> {
    let n = r.n();
    let cap = 100 * n.max(1);
    let mut x = power_start(n);
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;

    for _ in 0..cap {
        let y = r.matvec(&x);
        lambda = x.iter().zip(&y).map(|(a, b)| (a.conj() * b).re).sum::<f64>();
        residual = norm2(&y.iter().zip(&x).map(|(yi, xi)| yi - xi * lambda).collect::<Vec<_>>());
        let scale = lambda.abs().max(1.0);
        if residual <= 1e-12 * scale {
            break;
        }
        let ny = norm2(&y);
        if ny == 0.0 {
            // R x = 0: x already spans the (zero) dominant eigenspace.
            break;
        }
        let mut next: Vec<Complex64> = y.iter().map(|z| z / ny).collect();
        canonicalize_phase(&mut next);
        canonicalize_phase(&mut x);
        let step = norm2(&next.iter().zip(&x).map(|(a, b)| a - b).collect::<Vec<_>>());
        x = next;
        if step <= 1e-12 {
            let y = r.matvec(&x);
            lambda = x.iter().zip(&y).map(|(a, b)| (a.conj() * b).re).sum::<f64>();
            residual =
                norm2(&y.iter().zip(&x).map(|(yi, xi)| yi - xi * lambda).collect::<Vec<_>>());
            break;
        }
    }

    if residual > 1e-10 * lambda.abs().max(1.0) {
        return Err(UqpError::ConvergenceFailure { iterations: cap, residual });
    }
    canonicalize_phase(&mut x);
    Ok((lambda, x))
}

/// Shift `R` to positive semidefinite by subtracting `lambda_1 I` when
/// `lambda_1 < 0`. Returns the (possibly unchanged) matrix and the shift
/// `lambda_1` (0 when no shift was applied).
pub fn diagonal_load(r: &HermitianMatrix) -> Result<(HermitianMatrix, f64)> {
    let ed = eigen_decompose(r)?;
    Ok(diagonal_load_with(r, &ed))
}

pub fn diagonal_load_with(r: &HermitianMatrix, ed: &EigenDecomposition) -> (HermitianMatrix, f64) {
    let lam1 = ed.min_eigenvalue();
    if lam1 >= 0.0 {
        (r.clone(), 0.0)
    } else {
        (r.shifted(-lam1), lam1)
    }
}

/// `|t(i)|^2` where `t = U^H s`.
pub fn project_onto_eigenbasis(ed: &EigenDecomposition, s: &UnimodularVector) -> Result<Vec<f64>> {
    if s.len() != ed.n() {
        return Err(UqpError::DimensionMismatch { expected: ed.n(), actual: s.len() });
    }
    let sc = s.to_complex();
    Ok(ed
        .eigenvectors
        .iter()
        .map(|e| e.iter().zip(&sc).map(|(a, b)| a.conj() * b).sum::<Complex64>().norm_sqr())
        .collect())
}
