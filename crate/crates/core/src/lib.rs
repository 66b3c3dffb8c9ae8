//! Polynomial-time heuristics for unimodular quadratic programs,
//!
//! ```text
//! maximize  s^H R s   subject to  |s(i)| = 1,  R Hermitian,
//! ```
//!
//! with the bounds that go with them and brute-force oracles for checking
//! those bounds on small instances.
//!
//! - [`hermitian`], [`eigen`], [`generate`], [`applications`], [`matrix_io`]:
//!   problem matrices, eigenanalysis, instance generators, file format.
//! - [`submodular`]: the diagonal transform behind the greedy guarantee.
//! - [`solvers`]: dominant-eigenvector matching, greedy, row-swap greedy,
//!   power method, random baseline.
//! - [`bounds`], [`oracle`]: bound formulas and exhaustive grid search.
//! - [`harness`], [`cli`]: batch experiments, CSV/CDF output, the `uqp` binary.

pub mod applications;
pub mod bounds;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod generate;
pub mod harness;
pub mod hermitian;
pub mod matrix_io;
pub mod oracle;
pub mod solvers;
pub mod submodular;

pub use num_complex::Complex64;

pub use error::{Result, UqpError};
pub use hermitian::{make_hermitian, quadratic_form, HermitianMatrix, UnimodularVector};
pub use solvers::{Method, SolverReport};
