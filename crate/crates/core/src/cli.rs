//! Command-line front end. Exit codes: 0 success, 1 validation error or
//! failed check, 2 I/O error.

use std::ffi::OsString;
use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::compute_bounds;
use crate::error::{Result, UqpError};
use crate::harness::{check_instance, run_experiment, write_cdf_csv, write_csv, ExperimentConfig, Generator};
use crate::matrix_io::{format_matrix, read_matrix_file};
use crate::oracle::{grid_oracle, DEFAULT_GRID};
use crate::solvers::{solve, solve_power_method, Method, PowerOptions};

#[derive(Parser, Debug)]
#[command(name = "uqp", version, about = "Unimodular quadratic program heuristics, bounds and oracles")]
struct Cli {
    /// Master seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Experiment config file (JSON), used by `bench`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Psd,
    Dominant,
    Hermitian,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated matrix file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "psd")]
        generator: GenKind,
        /// Dominance factor M for `--generator dominant` (default 2N).
        #[arg(long)]
        factor: Option<f64>,
        #[arg(long, default_value_t = 1000.0)]
        eig_hi: f64,
    },
    /// Run one method on a matrix file and print the report.
    Solve {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value = "greedy")]
        method: String,
        #[arg(long, default_value_t = 1000)]
        max_iters: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Run an experiment from `--config` and write CSV records.
    Bench {
        /// Also write the per-(method, n) CDF table here.
        #[arg(long)]
        cdf: Option<PathBuf>,
    },
    /// Exhaustive grid search on a matrix file.
    Oracle {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Run the invariant and bound checks on a matrix file or a generated batch.
    Check {
        #[arg(long, conflicts_with = "n")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, value_enum, default_value = "psd")]
        generator: GenKind,
        #[arg(long)]
        factor: Option<f64>,
    },
}

fn generator_for(kind: GenKind, factor: Option<f64>) -> Generator {
    match kind {
        GenKind::Psd => Generator::Psd,
        GenKind::Dominant => match factor {
            Some(m) => Generator::Dominant(m),
            None => Generator::DominantPerN(2.0),
        },
        GenKind::Hermitian => Generator::Hermitian,
    }
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => File::create(path)?.write_all(bytes)?,
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}

fn require_config(cfg: &Option<PathBuf>) -> Result<&Path> {
    cfg.as_deref()
        .ok_or_else(|| UqpError::InvalidConfig("bench requires --config <path>".into()))
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Result<bool> {
    let seed = cli.seed.unwrap_or(0);
    match cli.command {
        Command::Gen { n, generator, factor, eig_hi } => {
            if n == 0 {
                return Err(UqpError::InvalidConfig("--n must be >= 1".into()));
            }
            let r = generator_for(generator, factor).generate(n, seed, eig_hi);
            emit(&cli.out, stdout, format_matrix(&r).as_bytes())?;
        }
        Command::Solve { matrix, method, max_iters, tol } => {
            let method: Method = method.parse()?;
            let r = read_matrix_file(&matrix)?;
            let report = match method {
                Method::PowerMethod => {
                    let mut rng = crate::generate::rng_from_seed(seed);
                    let s0 = crate::generate::random_unimodular(r.n(), &mut rng);
                    solve_power_method(&r, &s0, PowerOptions { max_iters, tol })?
                }
                m => solve(m, &r, seed)?,
            };
            let bounds = compute_bounds(&r)?;
            let mut text = String::new();
            text.push_str(&format!("method: {}\n", report.method));
            text.push_str(&format!("value: {}\n", report.value));
            if bounds.spectral_hi > 0.0 {
                text.push_str(&format!("normalized_value: {}\n", report.value / bounds.spectral_hi));
            }
            text.push_str(&format!("spectral_bounds: [{}, {}]\n", bounds.spectral_lo, bounds.spectral_hi));
            text.push_str(&format!("iterations: {}\n", report.iterations));
            if let Some(p) = report.chosen_swap {
                text.push_str(&format!("chosen_swap: {p}\n"));
            }
            let phases: Vec<String> = report.solution.phases().iter().map(|p| p.to_string()).collect();
            text.push_str(&format!("phases: {}\n", phases.join(" ")));
            emit(&cli.out, stdout, text.as_bytes())?;
        }
        Command::Bench { cdf } => {
            let mut cfg = ExperimentConfig::load(require_config(&cli.config)?)?;
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            let records = run_experiment(&cfg)?;
            let mut buf = Vec::new();
            write_csv(&records, &mut buf)?;
            emit(&cli.out, stdout, &buf)?;
            if let Some(path) = cdf {
                write_cdf_csv(&records, File::create(path)?)?;
            }
        }
        Command::Oracle { matrix, grid } => {
            let r = read_matrix_file(&matrix)?;
            let o = grid_oracle(&r, grid)?;
            let phases: Vec<String> = o.argmax.phases().iter().map(|p| p.to_string()).collect();
            let text = format!(
                "value: {}\ngrid_points_per_phase: {}\nexhaustive: {}\nargmax_phases: {}\n",
                o.value,
                o.grid_points_per_phase,
                o.exhaustive,
                phases.join(" ")
            );
            emit(&cli.out, stdout, text.as_bytes())?;
        }
        Command::Check { matrix, n, count, generator, factor } => {
            let instances = match (matrix, n) {
                (Some(path), _) => vec![(path.display().to_string(), read_matrix_file(&path)?)],
                (None, Some(n)) if n > 0 => {
                    let g = generator_for(generator, factor);
                    (0..count)
                        .map(|i| {
                            let s = crate::harness::matrix_seed(seed, n, i);
                            (format!("seed {s}"), g.generate(n, s, 1000.0))
                        })
                        .collect()
                }
                _ => return Err(UqpError::InvalidConfig("check needs --matrix <path> or --n <size>".into())),
            };
            let mut text = String::new();
            let mut all = true;
            for (label, r) in &instances {
                for c in check_instance(r, seed)? {
                    all &= c.passed;
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    text.push_str(&format!("{status} [{label}] {}: {}\n", c.name, c.detail));
                }
            }
            text.push_str(if all { "all checks passed\n" } else { "some checks FAILED\n" });
            emit(&cli.out, stdout, text.as_bytes())?;
            return Ok(all);
        }
    }
    Ok(true)
}

/// Parse `args` (including the program name) and run. Returns the exit code.
pub fn cli_dispatch_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match run(cli, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_io() {
                2
            } else {
                1
            }
        }
    }
}

pub fn cli_dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    cli_dispatch_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
