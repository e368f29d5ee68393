//! Collatz shortcut map `T(n) = n/2` (n even), `(3n+1)/2` (n odd).
//!
//! Values are arbitrary precision ([`BigUint`]); the hot loops in
//! [`verify_range`] and [`drift_statistic`] run on `u128` and promote to
//! `BigUint` only if a value would overflow.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One application of the shortcut map. `n` must be positive.
pub fn step(n: &BigUint) -> BigUint {
    debug_assert!(!n.is_zero());
    if n.bit(0) {
        (n * 3u32 + 1u32) >> 1
    } else {
        n >> 1
    }
}

/// Shortcut map on `u128`, `None` on overflow.
#[inline]
pub fn step_u128(n: u128) -> Option<u128> {
    if n & 1 == 1 {
        // (3n+1)/2 = n + (n+1)/2 avoids the intermediate 3n
        n.checked_add((n >> 1) + 1)
    } else {
        Some(n >> 1)
    }
}

/// An orbit `start, T(start), …`, stopped at 1 or after a step budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub start: BigUint,
    pub values: Vec<BigUint>,
    pub steps: usize,
    pub halted: bool,
}

impl Trajectory {
    /// `(step, value, parity)` rows for CSV output.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step,value,parity\n");
        for (k, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{k},{v},{}\n", u8::from(v.bit(0))));
        }
        out
    }
}

pub fn trajectory(n: &BigUint, max_steps: usize) -> Result<Trajectory> {
    if n.is_zero() {
        return Err(Error::Domain("trajectory start must be positive".into()));
    }
    let mut values = vec![n.clone()];
    let mut cur = n.clone();
    while !cur.is_one() && values.len() <= max_steps {
        cur = step(&cur);
        values.push(cur.clone());
    }
    Ok(Trajectory {
        start: n.clone(),
        steps: values.len() - 1,
        halted: cur.is_one(),
        values,
    })
}

/// Parities of successive iterates, 1 for odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityVector {
    bits: Vec<bool>,
}

impl ParityVector {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Parses a string of `0`/`1` characters, ignoring commas and whitespace.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',' && *c != '(' && *c != ')')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Domain(format!("`{other}` is not a parity bit"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { bits })
    }
}

impl fmt::Display for ParityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// First `m` parity bits of `n`. Iteration continues through the 1 → 2 → 1
/// cycle, so the vector is defined for every length.
pub fn parity_vector(n: &BigUint, m: usize) -> Result<ParityVector> {
    if n.is_zero() {
        return Err(Error::Domain("parity vector start must be positive".into()));
    }
    let mut bits = Vec::with_capacity(m);
    let mut cur = n.clone();
    for _ in 0..m {
        bits.push(cur.bit(0));
        cur = step(&cur);
    }
    Ok(ParityVector { bits })
}

/// The residue class `residue mod 2^bits`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueClass {
    pub residue: BigUint,
    pub bits: usize,
}

impl ResidueClass {
    pub fn modulus(&self) -> BigUint {
        BigUint::one() << self.bits
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        n % self.modulus() == self.residue
    }

    /// Smallest positive member of the class.
    pub fn least_positive(&self) -> BigUint {
        if self.residue.is_zero() {
            self.modulus()
        } else {
            self.residue.clone()
        }
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 2^{}", self.residue, self.bits)
    }
}

/// The unique class `r mod 2^m` whose members all start with the parity
/// prefix `bits`.
///
/// Bit `k` of `r` is chosen once bits `0..k` are fixed: for `n = r + 2^k·j`
/// the `k`-th iterate is `T^k(r) + 3^a·j`, where `a` counts the odd steps so
/// far, so setting bit `k` flips the parity of that iterate and leaves the
/// earlier ones unchanged.
pub fn realize_parity_prefix(bits: &ParityVector) -> Result<ResidueClass> {
    if bits.is_empty() {
        return Err(Error::Domain("parity prefix must have length at least 1".into()));
    }
    let mut residue = BigUint::zero();
    let mut iterate = BigUint::zero(); // T^k(residue), with T(0) = 0
    let mut pow3 = BigUint::one();
    for (k, &want_odd) in bits.bits().iter().enumerate() {
        if iterate.bit(0) != want_odd {
            residue.set_bit(k as u64, true);
            iterate += &pow3;
        }
        if want_odd {
            iterate = (iterate * 3u32 + 1u32) >> 1;
            pow3 *= 3u32;
        } else {
            iterate >>= 1;
        }
    }
    Ok(ResidueClass { residue, bits: bits.len() })
}

/// Result of checking every start in `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeReport {
    pub lo: u64,
    pub hi: u64,
    pub all_halted: bool,
    pub max_steps_seen: u64,
    /// Start attaining `max_steps_seen` (the smallest such start).
    pub max_steps_start: u64,
    pub max_excursion: u128,
    /// Starts that exhausted the step budget.
    pub unhalted: Vec<u64>,
}

impl RangeReport {
    /// Associative merge of reports over adjacent ranges.
    pub fn merge(self, other: RangeReport) -> RangeReport {
        let (a, b) = if self.lo <= other.lo { (self, other) } else { (other, self) };
        let (max_steps_seen, max_steps_start) = if b.max_steps_seen > a.max_steps_seen {
            (b.max_steps_seen, b.max_steps_start)
        } else {
            (a.max_steps_seen, a.max_steps_start)
        };
        let mut unhalted = a.unhalted;
        unhalted.extend(b.unhalted);
        RangeReport {
            lo: a.lo.min(b.lo),
            hi: a.hi.max(b.hi),
            all_halted: a.all_halted && b.all_halted,
            max_steps_seen,
            max_steps_start,
            max_excursion: a.max_excursion.max(b.max_excursion),
            unhalted,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

enum Outcome {
    Done { steps: u64, peak: u128 },
    Exhausted { peak: u128 },
}

// Runs `n` until it falls below `floor`, reaches 1, or uses up `budget`.
fn run_start(n: u64, floor: u64, budget: u64) -> Outcome {
    let floor = floor as u128;
    let mut v = n as u128;
    let mut peak = v;
    let mut steps = 0u64;
    while v != 1 && v >= floor {
        if steps == budget {
            return Outcome::Exhausted { peak };
        }
        match step_u128(v) {
            Some(next) => v = next,
            None => return run_start_big(BigUint::from(v), floor, budget, steps),
        }
        peak = peak.max(v);
        steps += 1;
    }
    Outcome::Done { steps, peak }
}

// Cold path for values past u128: the peak saturates at u128::MAX.
fn run_start_big(mut v: BigUint, floor: u128, budget: u64, mut steps: u64) -> Outcome {
    let floor = BigUint::from(floor);
    while !v.is_one() && v >= floor {
        if steps == budget {
            return Outcome::Exhausted { peak: u128::MAX };
        }
        v = step(&v);
        steps += 1;
    }
    Outcome::Done { steps, peak: u128::MAX }
}

fn verify_chunk(lo: u64, hi: u64, floor: u64, budget: u64) -> RangeReport {
    let mut report = RangeReport {
        lo,
        hi,
        all_halted: true,
        max_steps_seen: 0,
        max_steps_start: lo,
        max_excursion: 0,
        unhalted: Vec::new(),
    };
    for n in lo..=hi {
        match run_start(n, floor, budget) {
            Outcome::Done { steps, peak } => {
                if steps > report.max_steps_seen {
                    report.max_steps_seen = steps;
                    report.max_steps_start = n;
                }
                report.max_excursion = report.max_excursion.max(peak);
            }
            Outcome::Exhausted { peak } => {
                report.all_halted = false;
                report.max_excursion = report.max_excursion.max(peak);
                report.unhalted.push(n);
            }
        }
    }
    report
}

const CHUNK: u64 = 1 << 14;

/// Checks that every start in `[lo, hi]` reaches 1 or drops below `lo`
/// (values below `lo` are taken as already verified) within `step_budget`
/// steps. Runs on rayon's global pool; results do not depend on scheduling.
pub fn verify_range(lo: u64, hi: u64, step_budget: u64) -> Result<RangeReport> {
    if lo == 0 || lo > hi {
        return Err(Error::Domain(format!("need 1 <= lo <= hi, got [{lo}, {hi}]")));
    }
    let chunks: Vec<(u64, u64)> = (0..=(hi - lo) / CHUNK)
        .map(|c| {
            let a = lo + c * CHUNK;
            (a, a.saturating_add(CHUNK - 1).min(hi))
        })
        .collect();
    let report = chunks
        .into_par_iter()
        .map(|(a, b)| verify_chunk(a, b, lo, step_budget))
        .reduce_with(RangeReport::merge)
        .expect("at least one chunk");
    Ok(report)
}

/// `ln(T(n)/n)` for one step from `n`.
fn log_factor(odd: bool, n_approx: f64) -> f64 {
    if odd {
        // (3n+1)/(2n) = 1.5·(1 + 1/(3n))
        1.5f64.ln() + (1.0 / (3.0 * n_approx)).ln_1p()
    } else {
        0.5f64.ln()
    }
}

/// Running totals behind [`drift_statistic`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DriftAccumulator {
    pub log_sum: f64,
    pub steps: u64,
}

impl DriftAccumulator {
    pub fn mean(&self) -> Option<f64> {
        (self.steps > 0).then(|| self.log_sum / self.steps as f64)
    }

    fn merge(self, other: Self) -> Self {
        Self { log_sum: self.log_sum + other.log_sum, steps: self.steps + other.steps }
    }
}

/// Adds `ln(nₖ₊₁/nₖ)` for every step taken while the value exceeds `floor`.
pub fn accumulate_drift(start: &BigUint, floor: &BigUint, acc: &mut DriftAccumulator) {
    let mut v = start.clone();
    while &v > floor {
        let approx = v.to_f64().unwrap_or(f64::INFINITY);
        acc.log_sum += log_factor(v.bit(0), approx);
        acc.steps += 1;
        v = step(&v);
    }
}

fn accumulate_drift_u128(start: u128, floor: u128, acc: &mut DriftAccumulator) {
    let mut v = start;
    while v > floor {
        acc.log_sum += log_factor(v & 1 == 1, v as f64);
        acc.steps += 1;
        match step_u128(v) {
            Some(next) => v = next,
            None => {
                accumulate_drift(&step(&BigUint::from(v)), &BigUint::from(floor), acc);
                return;
            }
        }
    }
}

/// First `count` values of `ln(nₖ₊₁/nₖ)` along the orbit of `n`.
pub fn log_step_factors(n: &BigUint, count: usize) -> Vec<f64> {
    let mut v = n.clone();
    (0..count)
        .map(|_| {
            let f = log_factor(v.bit(0), v.to_f64().unwrap_or(f64::INFINITY));
            v = step(&v);
            f
        })
        .collect()
}

pub const DRIFT_MIN_BITS: u32 = 16;
pub const DRIFT_MAX_BITS: u32 = 128;

/// Mean log step factor over `sample_count` seeded random starts of exactly
/// `bit_width` bits, counting steps while values stay above `2^(bit_width/2)`.
///
/// Under the coin-flip model of parities this is `½·ln(3/4) ≈ −0.1438`.
pub fn drift_statistic(sample_count: usize, bit_width: u32, seed: u64) -> Result<f64> {
    if !(DRIFT_MIN_BITS..=DRIFT_MAX_BITS).contains(&bit_width) {
        return Err(Error::Domain(format!(
            "bit_width {bit_width} outside [{DRIFT_MIN_BITS}, {DRIFT_MAX_BITS}]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = 1u128 << (bit_width - 1);
    let low_mask = top - 1;
    let starts: Vec<u128> = (0..sample_count).map(|_| top | (rng.random::<u128>() & low_mask)).collect();
    let floor = 1u128 << (bit_width / 2);
    let acc = starts
        .par_iter()
        .map(|&s| {
            let mut acc = DriftAccumulator::default();
            accumulate_drift_u128(s, floor, &mut acc);
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(DriftAccumulator::default(), DriftAccumulator::merge);
    acc.mean()
        .ok_or_else(|| Error::Domain("no steps taken above the floor".into()))
}
