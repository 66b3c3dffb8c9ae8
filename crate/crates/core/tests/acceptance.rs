//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.
//!
//! cargo test -p uqp --test acceptance

use std::f64::consts::PI;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use uqp::bounds::{compute_bounds, dominant_greedy_ratio, greedy_ratio, universal_floor_check, AppendixReport};
use uqp::eigen::diagonal_load;
use uqp::generate::{random_dominant, random_hermitian, random_psd, random_unimodular, rng_from_seed};
use uqp::harness::{matrix_seed, run_experiment, ExperimentConfig, ExperimentRecord};
use uqp::hermitian::{quadratic_form, HermitianMatrix, UnimodularVector};
use uqp::oracle::{exact_optimum_n2, grid_oracle};
use uqp::solvers::{solve_greedy, solve_power_method, solve_row_swap_greedy, Method, PowerOptions};
use uqp::submodular::{build_rbar, theorem1_condition, CodeString, TransformResult};

type Outcome = Result<String, String>;

const MASTER_SEED: u64 = 2017;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// Criteria 1-2: dominant-eigenvector matching on random PSD batches

fn fig2_records() -> &'static (Vec<ExperimentRecord>, Duration) {
    static CELL: OnceLock<(Vec<ExperimentRecord>, Duration)> = OnceLock::new();
    CELL.get_or_init(|| {
        let cfg = ExperimentConfig::new(
            vec![20, 50, 100],
            500,
            MASTER_SEED,
            vec![Method::DominantMatching, Method::Random],
        );
        let start = Instant::now();
        let recs = run_experiment(&cfg).expect("experiment runs");
        (recs, start.elapsed())
    })
}

fn mean_normalized(recs: &[ExperimentRecord], method: Method, n: usize) -> f64 {
    let vals: Vec<f64> =
        recs.iter().filter(|r| r.method == method && r.n == n).map(|r| r.normalized_value).collect();
    vals.iter().sum::<f64>() / vals.len() as f64
}

fn criterion_1() -> Outcome {
    let (recs, elapsed) = fig2_records();
    ensure(recs.len() == 3000, || format!("expected 3000 records, got {}", recs.len()))?;
    let mut violations = 0;
    for r in recs.iter().filter(|r| r.method == Method::DominantMatching) {
        if r.normalized_value < r.bounds.prop1_ratio - 1e-9 {
            violations += 1;
        }
    }
    ensure(violations == 0, || format!("{violations} instances below the eigenvalue bound"))?;
    let means: Vec<f64> = [20, 50, 100].iter().map(|&n| mean_normalized(recs, Method::DominantMatching, n)).collect();
    ensure(means.iter().all(|&m| m >= 0.85), || format!("mean normalized values {means:?} < 0.85"))?;
    ensure(elapsed.as_secs_f64() < 120.0, || format!("took {elapsed:?} (limit 2 min)"))?;
    Ok(format!("0 violations over 1500; means (N=20,50,100) {means:.4?}; {elapsed:.1?}"))
}

fn criterion_2() -> Outcome {
    let (recs, _) = fig2_records();
    let mut margins = Vec::new();
    for n in [20, 50, 100] {
        let d = mean_normalized(recs, Method::DominantMatching, n);
        let r = mean_normalized(recs, Method::Random, n);
        margins.push(d - r);
    }
    ensure(margins.iter().all(|&m| m >= 0.05), || format!("margins {margins:?} below 0.05"))?;
    Ok(format!("mean(D) - mean(random) = {margins:.4?}"))
}

// ---------------------------------------------------------------------------
// Criteria 3-4: greedy guarantees on 2n-dominant batches against the grid oracle

struct DominantCase {
    n: usize,
    greedy: f64,
    oracle: f64,
    trace_condition: bool,
    prop2_applicable: bool,
    thm1_applicable: bool,
}

fn dominant_cases() -> &'static (Vec<DominantCase>, Duration) {
    static CELL: OnceLock<(Vec<DominantCase>, Duration)> = OnceLock::new();
    CELL.get_or_init(|| {
        let start = Instant::now();
        let jobs: Vec<(usize, usize)> = (2..=5).flat_map(|n| (0..200).map(move |i| (n, i))).collect();
        let cases = jobs
            .par_iter()
            .map(|&(n, i)| {
                let r = random_dominant(n, matrix_seed(MASTER_SEED + 3, n, i), 2.0 * n as f64);
                let b = compute_bounds(&r).unwrap();
                DominantCase {
                    n,
                    greedy: solve_greedy(&r).value,
                    oracle: grid_oracle(&r, 16).unwrap().value,
                    trace_condition: theorem1_condition(&r),
                    prop2_applicable: b.prop2_applicable,
                    thm1_applicable: b.thm1_applicable,
                }
            })
            .collect();
        (cases, start.elapsed())
    })
}

fn criterion_3() -> Outcome {
    let (cases, elapsed) = dominant_cases();
    let failing_cond = cases.iter().filter(|c| !c.trace_condition).count();
    ensure(failing_cond == 0, || format!("{failing_cond} instances with Tr(Rbar) > Tr(R)"))?;
    let ratio = greedy_ratio();
    let worst = cases.iter().map(|c| c.greedy / c.oracle).fold(f64::INFINITY, f64::min);
    let violations = cases.iter().filter(|c| c.greedy < ratio * c.oracle - 1e-9).count();
    ensure(violations == 0, || format!("{violations} greedy values below (1-1/e) * oracle"))?;
    ensure(elapsed.as_secs_f64() < 300.0, || format!("took {elapsed:?} (limit 5 min)"))?;
    Ok(format!("800 instances, worst greedy/oracle {worst:.4}; {elapsed:.1?}"))
}

fn criterion_4() -> Outcome {
    let (cases, _) = dominant_cases();
    let violations = cases
        .iter()
        .filter(|c| c.greedy < dominant_greedy_ratio(c.n) * c.oracle - 1e-9)
        .count();
    ensure(violations == 0, || format!("{violations} greedy values below the tightened ratio"))?;
    let implication = cases.iter().filter(|c| c.prop2_applicable && !c.thm1_applicable).count();
    ensure(implication == 0, || format!("{implication} instances with 2N-dominance but no trace condition"))?;
    let applicable = cases.iter().filter(|c| c.prop2_applicable).count();
    ensure(applicable == cases.len(), || format!("only {applicable} instances flagged 2N-dominant"))?;
    Ok(format!("800 instances, 0 violations; ratio at n=5 {:.4}", dominant_greedy_ratio(5)))
}

// ---------------------------------------------------------------------------
// Criteria 5-6

fn criterion_5() -> Outcome {
    let results: Vec<(usize, AppendixReport)> = (0..1000usize)
        .into_par_iter()
        .map(|i| {
            let n = 1 + i % 5;
            let r = random_dominant(n, matrix_seed(MASTER_SEED + 5, n, i), 2.0 * n as f64);
            (n, uqp::bounds::appendix_inequalities(&r).unwrap())
        })
        .collect();
    let not_checked = results.iter().filter(|(_, a)| !matches!(a, AppendixReport::Checked { .. })).count();
    ensure(not_checked == 0, || format!("{not_checked} instances not checked"))?;
    let mut violations = [0usize; 4];
    for (_, a) in &results {
        if let AppendixReport::Checked { delta_sum, trace, optimum, gap } = a {
            violations[0] += usize::from(!delta_sum.holds);
            violations[1] += usize::from(!trace.holds);
            violations[2] += usize::from(!optimum.is_some_and(|c| c.holds));
            violations[3] += usize::from(!gap.is_some_and(|c| c.holds));
        }
    }
    ensure(violations == [0; 4], || format!("violations per clause {violations:?}"))?;
    Ok("1000 instances (n = 1..5), all four clauses hold".into())
}

fn criterion_6() -> Outcome {
    let failures: usize = (0..200usize)
        .into_par_iter()
        .map(|i| {
            let n = 2 + i % 4;
            let seed = matrix_seed(MASTER_SEED + 6, n, i);
            let r = random_dominant(n, seed, 2.0 * n as f64);
            usize::from(!universal_floor_check(&r, 100, seed).unwrap())
        })
        .sum();
    ensure(failures == 0, || format!("{failures} instances with a sample below the floor"))?;
    Ok("200 instances x 100 samples, no sample below (2n-1)/(2n+1) * oracle".into())
}

// ---------------------------------------------------------------------------
// Criterion 7: string submodularity

/// `A^H Rbar_k A` through the principal submatrix, independent of the
/// incremental evaluation in `string_objective`.
fn f_direct(t: &TransformResult, a: &CodeString) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    let block = t.rbar.principal_submatrix(a.len()).unwrap();
    quadratic_form(&block, &UnimodularVector::from_phases(a.phases().to_vec()).unwrap()).unwrap()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(MASTER_SEED + 7);
    let mut counts = [0usize; 5];
    let mut dr_checked = 0;
    for draw in 0..10_000u64 {
        let n = rng.random_range(1..=6usize);
        let r = match draw % 3 {
            0 => random_hermitian(n, draw),
            1 => random_psd(n, draw, 1000.0),
            _ => random_dominant(n, draw, rng.random_range(0.5..4.0) * n as f64),
        };
        let t = build_rbar(&r);
        let l = rng.random_range(1..=n);
        let k = rng.random_range(1..=l);
        let a = CodeString::from_phases(random_unimodular(l, &mut rng).phases().to_vec());
        let b = a.prefix(k);
        let (fa, fb) = (f_direct(&t, &a), f_direct(&t, &b));
        let tol = 1e-9 * fa.abs().max(fb.abs()).max(1.0);

        // incremental and direct evaluations agree
        if (t.string_objective(&a).unwrap() - fa).abs() > tol {
            counts[4] += 1;
        }
        if fa < fb - tol {
            counts[0] += 1;
        }
        let (lo, hi) = t.lemma1_interval(k, l).unwrap();
        let gain = fa - fb;
        let ltol = 1e-9 * hi.abs().max(1.0).max(fa.abs());
        if gain < lo - ltol || gain > hi + ltol {
            counts[2] += 1;
        }
        if l < n {
            dr_checked += 1;
            let u = rng.random_range(0.0..2.0 * PI);
            let gain_b = f_direct(&t, &b.appended(u)) - fb;
            let gain_a = f_direct(&t, &a.appended(u)) - fa;
            if gain_b < gain_a - tol.max(1e-9 * f_direct(&t, &a.appended(u)).abs()) {
                counts[1] += 1;
            }
        }
        if (t.trace_rbar - t.weighted_delta_trace()).abs() > 1e-9 * t.trace_rbar.abs().max(1.0) {
            counts[3] += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(counts == [0; 5], || {
        format!("violations [monotone, diminishing, interval, trace identity, F evaluation] = {counts:?}")
    })?;
    ensure(elapsed.as_secs_f64() < 60.0, || format!("took {elapsed:?} (limit 1 min)"))?;
    Ok(format!("10000 draws ({dr_checked} with diminishing-returns check), 0 violations; {elapsed:.1?}"))
}

// ---------------------------------------------------------------------------
// Criteria 8-9

fn criterion_8() -> Outcome {
    let results: Vec<(f64, f64)> = (0..1000usize)
        .into_par_iter()
        .map(|i| {
            let n = if i < 500 { 5 } else { 10 };
            let r = random_psd(n, matrix_seed(MASTER_SEED + 8, n, i), 1000.0);
            (solve_row_swap_greedy(&r).value, solve_greedy(&r).value)
        })
        .collect();
    let below = results.iter().filter(|(rs, g)| rs < g).count();
    ensure(below == 0, || format!("{below} instances where row-swap < greedy"))?;
    let strict = results.iter().filter(|(rs, g)| *rs > g * (1.0 + 1e-12)).count();
    ensure(strict >= 10, || format!("strict improvement on only {strict}/1000"))?;
    Ok(format!("0 instances below greedy; strict improvement on {strict}/1000"))
}

/// Unguarded `s <- e^{j arg(R s)}` on the loaded matrix; returns the largest
/// relative decrease between consecutive iterates.
fn raw_power_worst_drop(r: &HermitianMatrix, s0: &UnimodularVector, iters: usize) -> f64 {
    let (loaded, _) = diagonal_load(r).unwrap();
    let mut s = s0.clone();
    let mut prev = quadratic_form(r, &s).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..iters {
        let y = loaded.matvec(&s.to_complex());
        s = UnimodularVector::from_complex(&y).unwrap();
        let v = quadratic_form(r, &s).unwrap();
        worst = worst.max((prev - v) / prev.abs().max(1.0));
        prev = v;
    }
    worst
}

fn criterion_9() -> Outcome {
    let results: Vec<(bool, f64)> = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let n = 2 + (i as usize % 19);
            let seed = matrix_seed(MASTER_SEED + 9, n, i as usize);
            let r = if i % 2 == 0 { random_psd(n, seed, 1000.0) } else { random_hermitian(n, seed) };
            let mut rng = rng_from_seed(seed ^ 0xface);
            let s0 = random_unimodular(n, &mut rng);
            let rep = solve_power_method(&r, &s0, PowerOptions::default()).unwrap();
            let trace = rep.trace.unwrap();
            let ok = trace.windows(2).all(|w| w[1] >= w[0] - 1e-12);
            (ok, raw_power_worst_drop(&r, &s0, 200))
        })
        .collect();
    let bad = results.iter().filter(|(ok, _)| !ok).count();
    ensure(bad == 0, || format!("{bad} traces decrease"))?;
    let worst_raw = results.iter().map(|(_, d)| *d).fold(0.0, f64::max);
    ensure(worst_raw <= 1e-12, || format!("unguarded iteration decreased by {worst_raw:e} (relative)"))?;
    Ok(format!("1000 traces nondecreasing; worst unguarded relative drop {worst_raw:.1e}"))
}

// ---------------------------------------------------------------------------
// Criteria 10-12

fn criterion_10() -> Outcome {
    let mut grid_bad = 0;
    let mut greedy_bad = 0;
    for i in 0..100u64 {
        let r = random_hermitian(2, matrix_seed(MASTER_SEED + 10, 2, i as usize));
        let exact = exact_optimum_n2(&r).unwrap();
        let grid = grid_oracle(&r, 256).unwrap().value;
        let loss = (PI / 256.0).powi(2) * 2.0 * r.get(0, 1).norm();
        if grid < exact - loss - 1e-9 || grid > exact + 1e-9 {
            grid_bad += 1;
        }
        let g = solve_greedy(&r).value;
        if (g - exact).abs() > 1e-12 * exact.abs().max(1.0) {
            greedy_bad += 1;
        }
    }
    ensure(grid_bad == 0 && greedy_bad == 0, || {
        format!("{grid_bad} oracle disagreements, {greedy_bad} greedy misses")
    })?;
    Ok("100 instances: oracle within discretization loss, greedy exact".into())
}

fn criterion_11() -> Outcome {
    let mut rng = rng_from_seed(MASTER_SEED + 11);
    let mut mismatches = 0;
    for i in 0..500u64 {
        let n = rng.random_range(2..=10usize);
        let r = random_hermitian(n, i);
        let d: Vec<f64> = (0..n).map(|k| r.diag(k) + rng.random_range(-100.0..100.0)).collect();
        let perturbed = r.with_diagonal(&d).unwrap();
        if solve_greedy(&r).solution.phases() != solve_greedy(&perturbed).solution.phases() {
            mismatches += 1;
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} phase sequences differ"))?;
    Ok("500 pairs, identical phase sequences".into())
}

fn criterion_12() -> Outcome {
    let r = HermitianMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
    let t = build_rbar(&r);
    ensure(t.trace_rbar == 6.0, || format!("Tr(Rbar) = {}", t.trace_rbar))?;
    ensure(t.trace_r == 4.0, || format!("Tr(R) = {}", t.trace_r))?;
    ensure(!theorem1_condition(&r), || "trace condition reported true".into())?;
    Ok("Tr(Rbar) = 6, Tr(R) = 4, condition false".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("1  eigenvector-matching bound and mean >= 0.85", criterion_1),
        ("2  matching beats random by >= 0.05", criterion_2),
        ("3  greedy >= (1-1/e) oracle under trace condition", criterion_3),
        ("4  greedy >= tightened ratio under 2N-dominance", criterion_4),
        ("5  2N-dominance inequality chain", criterion_5),
        ("6  universal floor for 2N-dominant matrices", criterion_6),
        ("7  string submodularity properties", criterion_7),
        ("8  row-swap greedy dominates greedy", criterion_8),
        ("9  power method monotone", criterion_9),
        ("10 N = 2 oracle cross-checks", criterion_10),
        ("11 greedy diagonal invariance", criterion_11),
        ("12 counter-example regression", criterion_12),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} / 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
