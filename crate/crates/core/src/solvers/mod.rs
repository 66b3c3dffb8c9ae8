//! Heuristics for `max s^H R s` over unimodular `s`.
//!
//! Every solver reports `value` against the caller's original `R`, whatever
//! loading or permutation it applied internally.

mod dominant;
mod greedy;
mod power;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, UqpError};
use crate::hermitian::{quadratic_form, HermitianMatrix, UnimodularVector};

pub use dominant::solve_dominant_matching;
pub use greedy::{conjugate_by_swap, greedy_step, solve_greedy, solve_row_swap_greedy, swap_candidates};
pub use power::{solve_power_method, solve_random, PowerOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "D", alias = "d", alias = "dominant")]
    DominantMatching,
    #[serde(alias = "greedy")]
    Greedy,
    #[serde(alias = "row-swap-greedy", alias = "rowswap")]
    RowSwapGreedy,
    #[serde(alias = "power", alias = "power-method")]
    PowerMethod,
    #[serde(alias = "random")]
    Random,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::DominantMatching,
        Method::Greedy,
        Method::RowSwapGreedy,
        Method::PowerMethod,
        Method::Random,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::DominantMatching => "D",
            Method::Greedy => "Greedy",
            Method::RowSwapGreedy => "RowSwapGreedy",
            Method::PowerMethod => "PowerMethod",
            Method::Random => "Random",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = UqpError;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| *c != '-' && *c != '_').collect::<String>().to_lowercase();
        match key.as_str() {
            "d" | "dominant" | "dominantmatching" => Ok(Method::DominantMatching),
            "greedy" | "g" => Ok(Method::Greedy),
            "rowswapgreedy" | "rowswap" => Ok(Method::RowSwapGreedy),
            "powermethod" | "power" => Ok(Method::PowerMethod),
            "random" | "rand" => Ok(Method::Random),
            _ => Err(UqpError::InvalidConfig(format!("unknown method {s:?}"))),
        }
    }
}

/// Permutation `P_mn` exchanging rows/columns `m` and `n` (0-based, `m > n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowSwap {
    m: usize,
    n: usize,
}

impl RowSwap {
    pub fn new(m: usize, n: usize, dim: usize) -> Result<Self> {
        if m >= dim {
            return Err(UqpError::IndexOutOfRange { index: m + 1, max: dim });
        }
        if n >= m {
            return Err(UqpError::IndexOutOfRange { index: n + 1, max: m });
        }
        Ok(Self { m, n })
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn n(self) -> usize {
        self.n
    }
}

impl fmt::Display for RowSwap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

#[derive(Clone, Debug)]
pub struct SolverReport {
    pub method: Method,
    pub solution: UnimodularVector,
    pub value: f64,
    pub iterations: usize,
    pub trace: Option<Vec<f64>>,
    pub chosen_swap: Option<RowSwap>,
}

impl SolverReport {
    fn new(method: Method, r: &HermitianMatrix, solution: UnimodularVector, iterations: usize) -> Self {
        let value = quadratic_form(r, &solution).expect("solver output has matching length");
        Self { method, solution, value, iterations, trace: None, chosen_swap: None }
    }
}

/// Run `method` with default options. `seed` drives the random start of the
/// power method and the random baseline; other methods ignore it.
pub fn solve(method: Method, r: &HermitianMatrix, seed: u64) -> Result<SolverReport> {
    match method {
        Method::DominantMatching => solve_dominant_matching(r),
        Method::Greedy => Ok(solve_greedy(r)),
        Method::RowSwapGreedy => Ok(solve_row_swap_greedy(r)),
        Method::PowerMethod => {
            let mut rng = crate::generate::rng_from_seed(seed);
            let s0 = crate::generate::random_unimodular(r.n(), &mut rng);
            solve_power_method(r, &s0, PowerOptions::default())
        }
        Method::Random => Ok(solve_random(r, seed)),
    }
}
