//! Seeded random instance generators.
//!
//! All generators use ChaCha8 seeded from a `u64`, so a `(n, seed)` pair
//! always yields bit-identical output.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::hermitian::{HermitianMatrix, UnimodularVector};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard circularly-symmetric complex Gaussian (unit variance per component).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// Haar-distributed unitary via modified Gram-Schmidt on a complex Gaussian
/// matrix. Returned as a list of orthonormal columns.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Vec<Complex64>> {
    let mut cols: Vec<Vec<Complex64>> =
        (0..n).map(|_| (0..n).map(|_| complex_gaussian(rng)).collect()).collect();
    for k in 0..n {
        for j in 0..k {
            let (done, rest) = cols.split_at_mut(k);
            let q = &done[j];
            let v = &mut rest[0];
            let proj: Complex64 = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi -= qi * proj;
            }
        }
        let norm = cols[k].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols[k].iter_mut().for_each(|z| *z /= norm);
    }
    cols
}

/// Random Hermitian PSD matrix `U diag(lambda) U^H` with `lambda_i` i.i.d.
/// uniform on `[0, eig_hi]` and Haar `U`.
pub fn random_psd(n: usize, seed: u64, eig_hi: f64) -> HermitianMatrix {
    assert!(n >= 1, "random_psd needs n >= 1");
    let mut rng = rng_from_seed(seed);
    let u = random_unitary(n, &mut rng);
    let lambdas: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * eig_hi).collect();
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for (lam, col) in lambdas.iter().zip(&u) {
        for i in 0..n {
            let ci = col[i] * *lam;
            for j in 0..n {
                entries[i * n + j] += ci * col[j].conj();
            }
        }
    }
    HermitianMatrix::from_row_major(n, entries).expect("U diag U^H is Hermitian")
}

/// Random `m`-dominant Hermitian matrix: complex Gaussian off-diagonals and
/// `r_ii = m * sum_{j != i} |r_ij| * (1 + u_i)` with `u_i` uniform on `[0, 1)`.
pub fn random_dominant(n: usize, seed: u64, m: f64) -> HermitianMatrix {
    assert!(n >= 1, "random_dominant needs n >= 1");
    assert!(m > 0.0, "dominance factor must be positive");
    let mut rng = rng_from_seed(seed);
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let z = complex_gaussian(&mut rng);
            entries[i * n + j] = z;
            entries[j * n + i] = z.conj();
        }
    }
    let mut r = HermitianMatrix::from_trusted(n, entries);
    let diag: Vec<f64> = (0..n)
        .map(|i| {
            let u: f64 = rng.random();
            m * r.off_diagonal_row_sum(i) * (1.0 + u)
        })
        .collect();
    r = r.with_diagonal(&diag).expect("finite diagonal");
    r
}

/// Hermitian matrix with i.i.d. complex Gaussian upper triangle and real
/// Gaussian diagonal. Indefinite in general.
pub fn random_hermitian(n: usize, seed: u64) -> HermitianMatrix {
    assert!(n >= 1, "random_hermitian needs n >= 1");
    let mut rng = rng_from_seed(seed);
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        entries[i * n + i] = Complex64::new(StandardNormal.sample(&mut rng), 0.0);
        for j in (i + 1)..n {
            let z = complex_gaussian(&mut rng);
            entries[i * n + j] = z;
            entries[j * n + i] = z.conj();
        }
    }
    HermitianMatrix::from_trusted(n, entries)
}

/// Phases i.i.d. uniform on `[0, 2pi)`.
pub fn random_unimodular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> UnimodularVector {
    UnimodularVector::from_phases((0..n).map(|_| rng.random::<f64>() * TAU).collect())
        .expect("finite phases")
}
