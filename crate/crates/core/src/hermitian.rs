//! Dense complex Hermitian matrices and unit-modulus vectors.
//!
//! Entries are stored row-major. Construction always goes through
//! [`make_hermitian`], which checks conjugate symmetry and then symmetrizes
//! exactly, so every `HermitianMatrix` in circulation satisfies
//! `r[i][j] == conj(r[j][i])` bit for bit and has a real diagonal.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Result, UqpError};

/// Relative tolerance on conjugate asymmetry accepted by [`make_hermitian`].
pub const HERMITIAN_TOL: f64 = 1e-9;

#[derive(Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

/// Validate a square complex array and return it as a Hermitian matrix.
///
/// The input must be conjugate-symmetric to within `1e-9 * max(1, max |r_ij|)`.
/// The stored matrix is the exact Hermitian part `(A + A^H) / 2`.
pub fn make_hermitian<R: AsRef<[Complex64]>>(rows: &[R]) -> Result<HermitianMatrix> {
    let n = rows.len();
    if n == 0 {
        return Err(UqpError::EmptyMatrix);
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != n {
            return Err(UqpError::NotSquare { row: i, len: row.len(), expected: n });
        }
        for (j, z) in row.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(UqpError::NonFinite { row: i, col: j });
            }
        }
        entries.extend_from_slice(row);
    }
    HermitianMatrix::from_row_major(n, entries)
}

impl HermitianMatrix {
    /// Build from `n * n` row-major entries, validating as [`make_hermitian`] does.
    pub fn from_row_major(n: usize, mut entries: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(UqpError::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(UqpError::DimensionMismatch { expected: n * n, actual: entries.len() });
        }
        if let Some(pos) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(UqpError::NonFinite { row: pos / n, col: pos % n });
        }
        let scale = entries.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
        for i in 0..n {
            for j in i..n {
                let dev = (entries[i * n + j] - entries[j * n + i].conj()).norm();
                if dev > HERMITIAN_TOL * scale {
                    return Err(UqpError::NotHermitian { row: i, col: j, deviation: dev });
                }
            }
        }
        for i in 0..n {
            entries[i * n + i] = Complex64::new(entries[i * n + i].re, 0.0);
            for j in (i + 1)..n {
                let upper = entries[i * n + j];
                let lower = entries[j * n + i];
                let avg = (upper + lower.conj()) * 0.5;
                entries[i * n + j] = avg;
                entries[j * n + i] = avg.conj();
            }
        }
        Ok(Self { n, entries })
    }

    /// Convenience constructor for real symmetric matrices.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        make_hermitian(&complex)
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn diagonal(d: &[f64]) -> Self {
        assert!(!d.is_empty(), "diagonal matrix needs at least one entry");
        let n = d.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for (i, &x) in d.iter().enumerate() {
            entries[i * n + i] = Complex64::new(x, 0.0);
        }
        Self { n, entries }
    }

    /// Hermitian rank-one matrix `v v^H`.
    pub fn outer(v: &[Complex64]) -> Result<Self> {
        let n = v.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in v {
            for b in v {
                entries.push(a * b.conj());
            }
        }
        Self::from_row_major(n, entries)
    }

    /// Internal constructor for entries that are Hermitian by construction.
    pub(crate) fn from_trusted(n: usize, entries: Vec<Complex64>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn diag(&self, i: usize) -> f64 {
        self.entries[i * self.n + i].re
    }

    pub fn diagonal_entries(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.diag(i)).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.diag(i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn to_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Same off-diagonals, diagonal replaced by `d`.
    pub fn with_diagonal(&self, d: &[f64]) -> Result<Self> {
        if d.len() != self.n {
            return Err(UqpError::DimensionMismatch { expected: self.n, actual: d.len() });
        }
        if d.iter().any(|x| !x.is_finite()) {
            let i = d.iter().position(|x| !x.is_finite()).unwrap();
            return Err(UqpError::NonFinite { row: i, col: i });
        }
        let mut out = self.clone();
        for (i, &x) in d.iter().enumerate() {
            out.entries[i * self.n + i] = Complex64::new(x, 0.0);
        }
        Ok(out)
    }

    /// `R + shift * I`.
    pub fn shifted(&self, shift: f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i].re += shift;
        }
        out
    }

    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(r, v)| r * v).sum())
            .collect()
    }

    /// Real part of `x^H R x` for an arbitrary complex vector.
    pub fn form(&self, x: &[Complex64]) -> f64 {
        assert_eq!(x.len(), self.n);
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, xi) in x.iter().enumerate() {
            let ri: Complex64 = self.row(i).iter().zip(x).map(|(r, v)| r * v).sum();
            acc += xi.conj() * ri;
        }
        acc.re
    }

    /// Leading `k x k` block of `R` (1-based `k`, `1 <= k <= N`).
    pub fn principal_submatrix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.n {
            return Err(UqpError::IndexOutOfRange { index: k, max: self.n });
        }
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            entries.extend_from_slice(&self.row(i)[..k]);
        }
        Ok(Self::from_trusted(k, entries))
    }

    /// True iff `r_ii >= M * sum_{j != i} |r_ij|` for every row.
    pub fn is_m_dominant(&self, m: f64) -> bool {
        (0..self.n).all(|i| self.diag(i) >= m * self.off_diagonal_row_sum(i))
    }

    /// `sum_{j != i} |r_ij|`, summed in ascending column order.
    pub fn off_diagonal_row_sum(&self, i: usize) -> f64 {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, z)| z.norm())
            .sum()
    }

    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j))
    }
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HermitianMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            let cells: Vec<String> = self
                .row(i)
                .iter()
                .map(|z| format!("{:.4}{:+.4}i", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn principal_submatrix(r: &HermitianMatrix, k: usize) -> Result<HermitianMatrix> {
    r.principal_submatrix(k)
}

pub fn m_dominance(r: &HermitianMatrix, m: f64) -> bool {
    r.is_m_dominant(m)
}

/// Wrap a phase into `[0, 2pi)`.
#[inline]
pub fn wrap_phase(phase: f64) -> f64 {
    let p = phase.rem_euclid(TAU);
    if p >= TAU {
        0.0
    } else {
        p
    }
}

/// Phase of `z`, or 0 when `|z| < zero_tol`.
#[inline]
pub(crate) fn phase_or_zero(z: Complex64, zero_tol: f64) -> f64 {
    if z.norm() < zero_tol {
        0.0
    } else {
        wrap_phase(z.arg())
    }
}

/// A vector on the complex unit torus, stored as phases in `[0, 2pi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnimodularVector {
    phases: Vec<f64>,
}

impl UnimodularVector {
    pub fn from_phases(phases: Vec<f64>) -> Result<Self> {
        if phases.is_empty() {
            return Err(UqpError::EmptyMatrix);
        }
        if let Some(i) = phases.iter().position(|p| !p.is_finite()) {
            return Err(UqpError::NonFinite { row: i, col: 0 });
        }
        Ok(Self { phases: phases.into_iter().map(wrap_phase).collect() })
    }

    /// Phases of the entries of `z`; entries with `|z_i| < 1e-12` map to phase 0.
    pub fn from_complex(z: &[Complex64]) -> Result<Self> {
        Self::from_phases(z.iter().map(|&v| phase_or_zero(v, 1e-12)).collect())
    }

    pub fn ones(n: usize) -> Self {
        Self { phases: vec![0.0; n] }
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

    pub fn entry(&self, i: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.phases[i])
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.phases.iter().map(|&p| Complex64::from_polar(1.0, p)).collect()
    }

    /// `e^{j phi} s`.
    pub fn rotated(&self, phi: f64) -> Self {
        Self { phases: self.phases.iter().map(|&p| wrap_phase(p + phi)).collect() }
    }

    /// Exchange entries `a` and `b` (0-based).
    pub fn swapped(&self, a: usize, b: usize) -> Self {
        let mut phases = self.phases.clone();
        phases.swap(a, b);
        Self { phases }
    }

    /// Phases relative to the first entry, so vectors equal up to a global
    /// phase compare equal.
    pub fn relative_phases(&self) -> Vec<f64> {
        let p0 = self.phases[0];
        self.phases.iter().map(|&p| wrap_phase(p - p0)).collect()
    }
}

/// `s^H R s`.
pub fn quadratic_form(r: &HermitianMatrix, s: &UnimodularVector) -> Result<f64> {
    if s.len() != r.n() {
        return Err(UqpError::DimensionMismatch { expected: r.n(), actual: s.len() });
    }
    Ok(r.form(&s.to_complex()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn accepts_real_symmetric() {
        let r = HermitianMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
        assert_eq!(r.n(), 2);
        assert_eq!(r.get(0, 1), c(1.0, 0.0));
    }

    #[test]
    fn accepts_conjugate_pair() {
        let r = make_hermitian(&[vec![c(1.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(1.0, 0.0)]]);
        assert!(r.is_ok());
    }

    #[test]
    fn rejects_non_hermitian() {
        let r = make_hermitian(&[vec![c(1.0, 0.0), c(0.0, 1.0)], vec![c(0.0, 1.0), c(1.0, 0.0)]]);
        assert!(matches!(r, Err(UqpError::NotHermitian { .. })));
    }

    #[test]
    fn rejects_empty_and_nonfinite() {
        let empty: Vec<Vec<Complex64>> = vec![];
        assert!(matches!(make_hermitian(&empty), Err(UqpError::EmptyMatrix)));
        let r = make_hermitian(&[vec![c(f64::NAN, 0.0)]]);
        assert!(matches!(r, Err(UqpError::NonFinite { .. })));
        let r = make_hermitian(&[vec![c(1.0, 0.0), c(2.0, 0.0)]]);
        assert!(matches!(r, Err(UqpError::NotSquare { .. })));
    }

    #[test]
    fn symmetrizes_small_asymmetry() {
        let r = make_hermitian(&[
            vec![c(1.0, 1e-12), c(0.5, 0.25)],
            vec![c(0.5 + 1e-11, -0.25), c(2.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(r.get(0, 0).im, 0.0);
        assert_eq!(r.get(0, 1), r.get(1, 0).conj());
    }

    #[test]
    fn quadratic_form_examples() {
        let s3 = UnimodularVector::ones(3);
        assert_eq!(quadratic_form(&HermitianMatrix::identity(3), &s3).unwrap(), 3.0);

        let r = HermitianMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
        assert_eq!(quadratic_form(&r, &UnimodularVector::ones(2)).unwrap(), 6.0);

        // s^H R s with R = [[1, i], [-i, 1]], s = (1, -i):
        // 1 + 1 + 2 Re(conj(s1) r12 s2) = 2 + 2 Re(i * -i) = 4
        let r = make_hermitian(&[vec![c(1.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(1.0, 0.0)]])
            .unwrap();
        let s = UnimodularVector::from_phases(vec![0.0, -PI / 2.0]).unwrap();
        assert!((quadratic_form(&r, &s).unwrap() - 4.0).abs() < 1e-12);

        let bad = UnimodularVector::ones(3);
        assert!(matches!(quadratic_form(&r, &bad), Err(UqpError::DimensionMismatch { .. })));
    }

    #[test]
    fn principal_submatrix_blocks() {
        let r = HermitianMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
        let r1 = r.principal_submatrix(1).unwrap();
        assert_eq!(r1.n(), 1);
        assert_eq!(r1.diag(0), 2.0);
        assert_eq!(r.principal_submatrix(2).unwrap(), r);
        assert!(matches!(r.principal_submatrix(0), Err(UqpError::IndexOutOfRange { .. })));
        assert!(matches!(r.principal_submatrix(3), Err(UqpError::IndexOutOfRange { .. })));

        let rows: Vec<Vec<f64>> =
            (0..4).map(|i| (0..4).map(|j| (i.min(j) * 10 + i.max(j)) as f64).collect()).collect();
        let r4 = HermitianMatrix::from_real_rows(&rows).unwrap();
        let r3 = r4.principal_submatrix(3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(r3.get(i, j), r4.get(i, j));
            }
        }
    }

    #[test]
    fn m_dominance_examples() {
        let r = HermitianMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
        assert!(m_dominance(&r, 2.0));
        assert!(!m_dominance(&r, 4.0));
        let r = HermitianMatrix::from_real_rows(&[[4.0, 1.0], [1.0, 4.0]]).unwrap();
        assert!(m_dominance(&r, 4.0));
    }

    #[test]
    fn phases_wrap_into_range() {
        let s = UnimodularVector::from_phases(vec![-PI / 2.0, 2.0 * PI, 7.0]).unwrap();
        for &p in s.phases() {
            assert!((0.0..TAU).contains(&p));
        }
        assert!((s.phases()[0] - 1.5 * PI).abs() < 1e-15);
        assert_eq!(s.phases()[1], 0.0);
    }
}
