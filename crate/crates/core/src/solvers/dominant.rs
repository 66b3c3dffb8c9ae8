use crate::eigen::eigen_decompose;
use crate::error::Result;
use crate::hermitian::{HermitianMatrix, UnimodularVector};

use super::{Method, SolverReport};

/// Phase-match the dominant eigenvector: `s(i) = e^{j arg e_N(i)}`, with
/// entries where `|e_N(i)| < 1e-12` set to `e^{j0}`.
///
/// Diagonal loading shifts every eigenvalue by the same amount and leaves the
/// eigenvectors alone, so indefinite `R` needs no separate treatment here.
pub fn solve_dominant_matching(r: &HermitianMatrix) -> Result<SolverReport> {
    let ed = eigen_decompose(r)?;
    let solution = UnimodularVector::from_complex(ed.dominant_eigenvector())?;
    Ok(SolverReport::new(Method::DominantMatching, r, solution, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn rank_one_is_exact() {
        let v = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
        let r = HermitianMatrix::outer(&v).unwrap();
        let rep = solve_dominant_matching(&r).unwrap();
        assert!((rep.value - 4.0).abs() < 1e-12);
        let rel = rep.solution.relative_phases();
        assert!((rel[1] - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn two_by_two() {
        let r = HermitianMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
        let rep = solve_dominant_matching(&r).unwrap();
        assert_eq!(rep.solution.relative_phases()[1], 0.0);
        assert!((rep.value - 6.0).abs() < 1e-12);
    }

    #[test]
    fn zero_entries_map_to_phase_zero() {
        let rep = solve_dominant_matching(&HermitianMatrix::diagonal(&[3.0, 5.0])).unwrap();
        assert_eq!(rep.solution.phases(), &[0.0, 0.0]);
        assert_eq!(rep.value, 8.0);
    }

    #[test]
    fn value_on_indefinite_input_uses_original_matrix() {
        let r = HermitianMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        let rep = solve_dominant_matching(&r).unwrap();
        assert!((rep.value - 2.0).abs() < 1e-12);
    }
}
