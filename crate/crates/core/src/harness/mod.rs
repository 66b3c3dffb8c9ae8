//! Batch experiments: generate instances, run solvers, attach bounds.

mod checks;
mod output;

use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{compute_bounds_with, BoundReport};
use crate::eigen::eigen_decompose;
use crate::error::{Result, UqpError};
use crate::generate::{random_dominant, random_hermitian, random_psd};
use crate::hermitian::HermitianMatrix;
use crate::oracle::{grid_oracle, ORACLE_MAX_N};
use crate::solvers::{solve, Method};
use crate::submodular::build_rbar;

pub use checks::{check_instance, CheckOutcome};
pub use output::{emit_cdf, emit_csv, read_csv, write_cdf_csv, write_csv, CsvRow, CSV_HEADER};

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "UQP_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Generator {
    /// Haar eigenvectors, eigenvalues uniform on `[0, eig_hi]`.
    #[serde(rename = "psd")]
    Psd,
    /// `M`-dominant with the given absolute `M`.
    #[serde(rename = "dominant")]
    Dominant(f64),
    /// `M`-dominant with `M = factor * n`.
    #[serde(rename = "dominant_per_n")]
    DominantPerN(f64),
    /// Indefinite Gaussian Hermitian.
    #[serde(rename = "hermitian")]
    Hermitian,
}

impl Default for Generator {
    fn default() -> Self {
        Generator::Psd
    }
}

impl Generator {
    pub fn generate(self, n: usize, seed: u64, eig_hi: f64) -> HermitianMatrix {
        match self {
            Generator::Psd => random_psd(n, seed, eig_hi),
            Generator::Dominant(m) => random_dominant(n, seed, m),
            Generator::DominantPerN(f) => random_dominant(n, seed, f * n as f64),
            Generator::Hermitian => random_hermitian(n, seed),
        }
    }
}

fn default_grid() -> usize {
    crate::oracle::DEFAULT_GRID
}

fn default_eig_hi() -> f64 {
    1000.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub sizes: Vec<usize>,
    pub matrices_per_size: usize,
    #[serde(default)]
    pub seed: u64,
    pub methods: Vec<Method>,
    #[serde(default)]
    pub oracle_enabled: bool,
    #[serde(rename = "oracle_M", alias = "oracle_m", default = "default_grid")]
    pub oracle_m: usize,
    #[serde(default)]
    pub generator: Generator,
    #[serde(default = "default_eig_hi")]
    pub eig_hi: f64,
}

impl ExperimentConfig {
    pub fn new(sizes: Vec<usize>, matrices_per_size: usize, seed: u64, methods: Vec<Method>) -> Self {
        Self {
            sizes,
            matrices_per_size,
            seed,
            methods,
            oracle_enabled: false,
            oracle_m: default_grid(),
            generator: Generator::Psd,
            eig_hi: default_eig_hi(),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let cfg: Self = serde_json::from_str(&text).map_err(|e| UqpError::InvalidConfig(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(UqpError::InvalidConfig(msg.to_string()));
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return bad("sizes must be a nonempty list of positive integers");
        }
        if self.matrices_per_size == 0 {
            return bad("matrices_per_size must be >= 1");
        }
        if self.methods.is_empty() {
            return bad("methods must be nonempty");
        }
        if !(self.eig_hi.is_finite() && self.eig_hi > 0.0) {
            return bad("eig_hi must be positive");
        }
        match self.generator {
            Generator::Dominant(m) | Generator::DominantPerN(m) if !(m.is_finite() && m > 0.0) => {
                return bad("dominance factor must be positive");
            }
            _ => {}
        }
        if self.oracle_enabled {
            let max_n = *self.sizes.iter().max().unwrap();
            if max_n > ORACLE_MAX_N {
                return bad("oracle only permitted when every size is <= 8");
            }
            if self.oracle_m == 0 {
                return bad("oracle_M must be >= 1");
            }
        }
        Ok(())
    }

    pub fn expected_records(&self) -> usize {
        self.sizes.len() * self.matrices_per_size * self.methods.len()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRecord {
    pub n: usize,
    pub matrix_seed: u64,
    pub method: Method,
    pub value: f64,
    /// `value / (lambda_N N)`.
    pub normalized_value: f64,
    pub bounds: BoundReport,
    pub runtime_micros: u64,
    pub oracle_value: Option<f64>,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for matrix `index` of size `n` under master seed `seed`.
pub fn matrix_seed(seed: u64, n: usize, index: usize) -> u64 {
    splitmix64(splitmix64(splitmix64(seed) ^ n as u64) ^ index as u64)
}

/// Seed for the randomized parts of `method` on one matrix.
pub fn method_seed(matrix_seed: u64, method: Method) -> u64 {
    splitmix64(matrix_seed ^ (method as u64 + 1).wrapping_mul(0xa076_1d64_78bd_642f))
}

/// Run `f` on a pool sized by `UQP_WORKERS` when set, else on the global pool.
pub fn with_workers<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => {
            let workers: usize = v
                .trim()
                .parse()
                .ok()
                .filter(|&w| w > 0)
                .ok_or_else(|| UqpError::InvalidConfig(format!("{WORKERS_ENV} must be a positive integer, got {v:?}")))?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| UqpError::InvalidConfig(e.to_string()))?;
            Ok(pool.install(f))
        }
        Err(_) => Ok(f()),
    }
}

fn run_matrix(cfg: &ExperimentConfig, n: usize, index: usize) -> Result<Vec<ExperimentRecord>> {
    let mseed = matrix_seed(cfg.seed, n, index);
    let r = cfg.generator.generate(n, mseed, cfg.eig_hi);
    let ed = eigen_decompose(&r)?;
    let bounds = compute_bounds_with(&r, &ed, &build_rbar(&r));
    let oracle_value = if cfg.oracle_enabled { Some(grid_oracle(&r, cfg.oracle_m)?.value) } else { None };

    cfg.methods
        .iter()
        .map(|&method| {
            let start = Instant::now();
            let report = solve(method, &r, method_seed(mseed, method))?;
            let nanos = start.elapsed().as_nanos();
            Ok(ExperimentRecord {
                n,
                matrix_seed: mseed,
                method,
                value: report.value,
                normalized_value: report.value / bounds.spectral_hi,
                bounds: bounds.clone(),
                runtime_micros: (nanos.div_ceil(1000) as u64).max(1),
                oracle_value,
            })
        })
        .collect()
}

/// Run every requested method on every generated matrix. Output is sorted by
/// `(n, matrix_seed, method)` and independent of the worker schedule.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = cfg
        .sizes
        .iter()
        .flat_map(|&n| (0..cfg.matrices_per_size).map(move |i| (n, i)))
        .collect();
    let per_matrix: Vec<Result<Vec<ExperimentRecord>>> =
        with_workers(|| jobs.par_iter().map(|&(n, i)| run_matrix(cfg, n, i)).collect())?;
    let mut records = Vec::with_capacity(cfg.expected_records());
    for batch in per_matrix {
        records.extend(batch?);
    }
    records.sort_by(|a, b| (a.n, a.matrix_seed, a.method).cmp(&(b.n, b.matrix_seed, b.method)));
    Ok(records)
}
