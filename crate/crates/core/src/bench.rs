//! Seeded scaling harness for the two subset-sum solvers.
//!
//! Both solvers run on the same solution-free instances, so each does its
//! full amount of work. Comparison counts are deterministic; wall time is
//! recorded as well but is advisory only.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset_sum::{
    random_unsolvable_instance, solve_mitm_with_stats, solve_naive_with_stats, MITM_MEMORY_MAX_ELEMENTS,
    NAIVE_MAX_ELEMENTS,
};

/// Element magnitude bound for benchmark instances.
pub const BENCH_VALUE_BOUND: i64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Naive,
    Mitm,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Naive => "naive",
            Algorithm::Mitm => "mitm",
        })
    }
}

/// Per-(algorithm, n) medians over the trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: usize,
    pub trials: usize,
    pub comparisons: u64,
    pub wall_seconds: f64,
    pub solvable: bool,
}

/// Seed of trial `trial` at size `n`; both solvers see the same instance.
pub fn trial_seed(seed: u64, n: usize, trial: usize) -> u64 {
    seed ^ ((n as u64) << 32) ^ trial as u64
}

/// Runs both solvers (naive only while `n ≤ 30`) on `trials` seeded
/// solution-free instances per size and reports median comparisons and
/// median wall time. Records are ordered by algorithm, then `n`.
pub fn bench_subset_sum(ns: &[usize], trials: usize, seed: u64) -> Result<Vec<BenchRecord>> {
    if trials == 0 {
        return Err(Error::Domain("need at least one trial".into()));
    }
    if let Some(&n) = ns.iter().find(|&&n| n == 0 || n > MITM_MEMORY_MAX_ELEMENTS) {
        return Err(Error::SizeExceeded { what: "benchmark n", got: n as u64, limit: MITM_MEMORY_MAX_ELEMENTS as u64 });
    }
    let jobs: Vec<(Algorithm, usize, usize)> = [Algorithm::Naive, Algorithm::Mitm]
        .into_iter()
        .flat_map(|alg| {
            ns.iter()
                .filter(move |&&n| alg == Algorithm::Mitm || n <= NAIVE_MAX_ELEMENTS)
                .flat_map(move |&n| (0..trials).map(move |t| (alg, n, t)))
        })
        .collect();
    let samples = jobs
        .par_iter()
        .map(|&(alg, n, t)| {
            let instance = random_unsolvable_instance(n, BENCH_VALUE_BOUND, trial_seed(seed, n, t))?;
            let clock = Instant::now();
            let (witness, stats) = match alg {
                Algorithm::Naive => solve_naive_with_stats(&instance)?,
                Algorithm::Mitm => solve_mitm_with_stats(&instance)?,
            };
            Ok((alg, n, stats.comparisons(), clock.elapsed().as_secs_f64(), witness.is_some()))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut records = Vec::new();
    for group in samples.chunk_by(|a, b| (a.0, a.1) == (b.0, b.1)) {
        let mut counts: Vec<u64> = group.iter().map(|s| s.2).collect();
        let mut times: Vec<f64> = group.iter().map(|s| s.3).collect();
        counts.sort_unstable();
        times.sort_by(f64::total_cmp);
        records.push(BenchRecord {
            algorithm: group[0].0,
            n: group[0].1,
            trials: group.len(),
            comparisons: counts[counts.len() / 2],
            wall_seconds: times[times.len() / 2],
            solvable: group.iter().any(|s| s.4),
        });
    }
    records.sort_by_key(|r| (r.algorithm, r.n));
    Ok(records)
}

/// Least-squares slope of `log₂(comparisons)` against `n` for one algorithm.
pub fn log2_slope(records: &[BenchRecord], algorithm: Algorithm) -> Option<f64> {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.algorithm == algorithm && r.comparisons > 0)
        .map(|r| (r.n as f64, (r.comparisons as f64).log2()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some(sxy / sxx)
}

/// CSV with header `algorithm,n,trials,comparisons,solvable`, plus a
/// `wall_seconds` column when `with_timing` is set. Timing varies between
/// runs, so it is left out by default to keep the output reproducible.
pub fn records_csv(records: &[BenchRecord], with_timing: bool) -> String {
    let mut out = String::from("algorithm,n,trials,comparisons,solvable");
    out.push_str(if with_timing { ",wall_seconds\n" } else { "\n" });
    for r in records {
        out.push_str(&format!("{},{},{},{},{}", r.algorithm, r.n, r.trials, r.comparisons, r.solvable));
        if with_timing {
            out.push_str(&format!(",{:.6}", r.wall_seconds));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_count_is_exact() {
        let recs = bench_subset_sum(&[16], 3, 7).unwrap();
        let naive = recs.iter().find(|r| r.algorithm == Algorithm::Naive).unwrap();
        assert_eq!(naive.comparisons, 65_536);
        assert!(recs.iter().all(|r| !r.solvable && r.trials == 3));
    }

    #[test]
    fn slopes_small_range() {
        let ns: Vec<usize> = (8..=14).collect();
        let recs = bench_subset_sum(&ns, 2, 1).unwrap();
        assert!((log2_slope(&recs, Algorithm::Naive).unwrap() - 1.0).abs() < 1e-9);
        let m = log2_slope(&recs, Algorithm::Mitm).unwrap();
        assert!((m - 0.5).abs() < 0.1, "{m}");
    }

    #[test]
    fn deterministic_and_ordered() {
        let a = bench_subset_sum(&[12, 6], 3, 99).unwrap();
        let b = bench_subset_sum(&[12, 6], 3, 99).unwrap();
        assert_eq!(records_csv(&a, false), records_csv(&b, false));
        let keys: Vec<_> = a.iter().map(|r| (r.algorithm, r.n)).collect();
        assert_eq!(keys, vec![(Algorithm::Naive, 6), (Algorithm::Naive, 12), (Algorithm::Mitm, 6), (Algorithm::Mitm, 12)]);
        assert!(records_csv(&a, false).starts_with("algorithm,n,trials,comparisons,solvable\nnaive,6,3,64,false\n"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(bench_subset_sum(&[10], 0, 1).is_err());
        assert!(bench_subset_sum(&[45], 1, 1).is_err());
        assert!(bench_subset_sum(&[0], 1, 1).is_err());
    }
}
