//! Sieves and the scans built on them: Möbius and Mertens functions, the
//! Mertens random-walk bound, π(n) against the logarithmic integral, and
//! Goldbach, Chen and twin-prime checks.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::adaptive_simpson;

/// Largest sieve bound accepted (the tables are dense arrays).
pub const MAX_SIEVE_BOUND: u64 = 1 << 32;

fn check_bound(n: u64) -> Result<()> {
    if n > MAX_SIEVE_BOUND {
        return Err(Error::SizeExceeded { what: "sieve bound", got: n, limit: MAX_SIEVE_BOUND });
    }
    Ok(())
}

/// μ(k) for `k = 1..=N`, built by a linear sieve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    values: Vec<i8>,
}

impl MobiusTable {
    pub fn bound(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// μ(k); panics when `k` is 0 or beyond the bound.
    pub fn mu(&self, k: u64) -> i8 {
        assert!(k >= 1, "μ is defined on positive integers");
        self.values[k as usize]
    }

    /// μ(1..=N) as a slice, index 0 holding μ(1).
    pub fn values(&self) -> &[i8] {
        &self.values[1..]
    }
}

pub fn mobius_sieve(n: u64) -> Result<MobiusTable> {
    if n == 0 {
        return Err(Error::Domain("Möbius table needs N >= 1".into()));
    }
    check_bound(n)?;
    let n = n as usize;
    let mut mu = vec![0i8; n + 1];
    let mut composite = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    mu[1] = 1;
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    Ok(MobiusTable { values: mu })
}

/// Prefix sums `M(n) = μ(1) + … + μ(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MertensSeries {
    values: Vec<i64>,
}

impl MertensSeries {
    pub fn from_mobius(table: &MobiusTable) -> Self {
        let mut values = Vec::with_capacity(table.values.len());
        values.push(0);
        let mut acc = 0i64;
        for &m in table.values() {
            acc += m as i64;
            values.push(acc);
        }
        Self { values }
    }

    pub fn bound(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// M(n), with M(0) = 0.
    pub fn at(&self, n: u64) -> i64 {
        self.values[n as usize]
    }

    /// `n,M(n)` CSV for `n = 1..=N`, every `stride`-th value.
    pub fn to_csv(&self, stride: usize) -> String {
        let mut out = String::from("n,M(n)\n");
        for n in (1..self.values.len()).step_by(stride.max(1)) {
            out.push_str(&format!("{n},{}\n", self.values[n]));
        }
        out
    }
}

pub fn mertens(n: u64) -> Result<MertensSeries> {
    Ok(MertensSeries::from_mobius(&mobius_sieve(n)?))
}

/// A point where `|M(n)| > c·√n·ln n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundViolation {
    pub n: u64,
    pub mertens: i64,
    pub bound: f64,
}

/// All `n` in `[2, N]` with `|M(n)| > c·√n·ln n` (natural logarithm).
pub fn mertens_bound_check(n: u64, c: f64) -> Result<Vec<BoundViolation>> {
    if n < 2 {
        return Err(Error::Domain("bound check needs N >= 2".into()));
    }
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::Domain(format!("constant c = {c} must be positive")));
    }
    let series = mertens(n)?;
    Ok((2..=n)
        .filter_map(|k| {
            let m = series.at(k);
            let bound = c * (k as f64).sqrt() * (k as f64).ln();
            ((m.unsigned_abs() as f64) > bound).then_some(BoundViolation { n: k, mertens: m, bound })
        })
        .collect())
}

/// Sieve of Eratosthenes up to `N` with the list of primes.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    is_prime: Vec<bool>,
    primes: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(n: u64) -> Result<Self> {
        check_bound(n)?;
        let n = n as usize;
        let mut is_prime = vec![true; n + 1];
        is_prime[0] = false;
        if n >= 1 {
            is_prime[1] = false;
        }
        let mut i = 2;
        while i * i <= n {
            if is_prime[i] {
                for j in (i * i..=n).step_by(i) {
                    is_prime[j] = false;
                }
            }
            i += 1;
        }
        let primes = is_prime
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(k, _)| k as u64)
            .collect();
        Ok(Self { is_prime, primes })
    }

    pub fn bound(&self) -> u64 {
        self.is_prime.len() as u64 - 1
    }

    pub fn is_prime(&self, k: u64) -> bool {
        self.is_prime.get(k as usize).copied().unwrap_or_else(|| {
            panic!("{k} is beyond the sieve bound {}", self.bound())
        })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// π(n): primes `≤ n`.
    pub fn prime_count(&self, n: u64) -> usize {
        self.primes.partition_point(|&p| p <= n)
    }

    /// True when `k` is the product of exactly two primes (squares included).
    pub fn is_semiprime(&self, k: u64) -> bool {
        if k < 4 {
            return false;
        }
        for &p in &self.primes {
            if p * p > k {
                return false;
            }
            if k % p == 0 {
                return self.is_prime(k / p);
            }
        }
        false
    }

    /// Goldbach witness with the least `p`, or `None` for a counterexample.
    pub fn goldbach_witness(&self, even_n: u64) -> Result<Option<GoldbachWitness>> {
        check_even(even_n)?;
        self.check_covers(even_n)?;
        Ok(self
            .primes
            .iter()
            .take_while(|&&p| 2 * p <= even_n)
            .find(|&&p| self.is_prime(even_n - p))
            .map(|&p| GoldbachWitness { even_n, p, q: even_n - p }))
    }

    /// Chen decomposition, preferring two primes and falling back to
    /// prime + semiprime.
    pub fn chen_witness(&self, even_n: u64) -> Result<Option<ChenWitness>> {
        if let Some(g) = self.goldbach_witness(even_n)? {
            return Ok(Some(ChenWitness { even_n, p: g.p, second: ChenPart::Prime(g.q) }));
        }
        Ok(self.chen_semiprime_witness(even_n))
    }

    /// Least prime `p` such that `even_n − p` is a semiprime.
    pub fn chen_semiprime_witness(&self, even_n: u64) -> Option<ChenWitness> {
        self.primes
            .iter()
            .take_while(|&&p| p + 4 <= even_n)
            .find(|&&p| self.is_semiprime(even_n - p))
            .map(|&p| {
                let rest = even_n - p;
                let q = *self.primes.iter().find(|&&q| rest % q == 0).expect("semiprime has a factor");
                ChenWitness { even_n, p, second: ChenPart::Semiprime(q, rest / q) }
            })
    }

    fn check_covers(&self, n: u64) -> Result<()> {
        if n > self.bound() {
            return Err(Error::Domain(format!("{n} exceeds sieve bound {}", self.bound())));
        }
        Ok(())
    }
}

fn check_even(n: u64) -> Result<()> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Domain(format!("{n} is not an even number >= 4")));
    }
    Ok(())
}

/// π(n) by a segmented sieve: base primes up to √n, then blocks of
/// `segment` integers, each crossed off independently.
pub fn segmented_prime_count(n: u64, segment: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    let root = (n as f64).sqrt() as u64 + 1;
    let mut small = vec![true; root as usize + 1];
    let mut base = Vec::new();
    for i in 2..=root as usize {
        if small[i] {
            base.push(i as u64);
            for j in (i * i..=root as usize).step_by(i) {
                small[j] = false;
            }
        }
    }
    let segment = segment.max(1) as u64;
    let mut count = 0u64;
    let mut block = vec![true; segment as usize];
    let mut lo = 2u64;
    while lo <= n {
        let hi = (lo + segment - 1).min(n);
        let len = (hi - lo + 1) as usize;
        block[..len].fill(true);
        for &p in &base {
            if p * p > hi {
                break;
            }
            let first = (p * p).max(lo.div_ceil(p) * p);
            let mut m = first;
            while m <= hi {
                block[(m - lo) as usize] = false;
                m += p;
            }
        }
        count += block[..len].iter().filter(|&&b| b).count() as u64;
        lo = hi + 1;
    }
    count
}

/// `Li(n) = ∫₂ⁿ dx / ln x` by adaptive quadrature to absolute tolerance `tolerance`.
pub fn log_integral(n: f64, tolerance: f64) -> Result<f64> {
    if n < 2.0 {
        return Err(Error::Domain(format!("Li(n) needs n >= 2, got {n}")));
    }
    if n == 2.0 {
        return Ok(0.0);
    }
    // ∫ over [ln 2, ln n] of e^u / u du is smoother than the original form.
    adaptive_simpson(&|u: f64| u.exp() / u, 2f64.ln(), n.ln(), tolerance)
}

pub const LI_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PiLiRow {
    pub n: u64,
    pub pi: u64,
    pub li: f64,
    pub err: f64,
}

/// `(n, π(n), Li(n), π(n) − Li(n))` at each checkpoint.
pub fn prime_count_vs_li(n: u64, checkpoints: &[u64]) -> Result<Vec<PiLiRow>> {
    if let Some(&c) = checkpoints.iter().find(|&&c| c > n || c < 2) {
        return Err(Error::Domain(format!("checkpoint {c} outside [2, {n}]")));
    }
    let sieve = PrimeSieve::new(n)?;
    checkpoints
        .iter()
        .map(|&c| {
            let pi = sieve.prime_count(c) as u64;
            let li = log_integral(c as f64, LI_TOLERANCE)?;
            Ok(PiLiRow { n: c, pi, li, err: pi as f64 - li })
        })
        .collect()
}

pub fn pi_li_csv(rows: &[PiLiRow]) -> String {
    let mut out = String::from("n,pi,li,err\n");
    for r in rows {
        out.push_str(&format!("{},{},{:.6},{:.6}\n", r.n, r.pi, r.li, r.err));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldbachWitness {
    pub even_n: u64,
    pub p: u64,
    pub q: u64,
}

/// Goldbach witness with the least `p`; builds a sieve up to `even_n`.
pub fn goldbach_witness(even_n: u64) -> Result<Option<GoldbachWitness>> {
    check_even(even_n)?;
    PrimeSieve::new(even_n)?.goldbach_witness(even_n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldbachReport {
    pub lo: u64,
    pub hi: u64,
    pub evens_checked: u64,
    /// Even numbers with no decomposition. Empty unless the conjecture fails.
    pub counterexamples: Vec<u64>,
    /// The even number whose least `p` is largest in the range.
    pub hardest: Option<GoldbachWitness>,
}

impl GoldbachReport {
    fn merge(mut self, other: GoldbachReport) -> GoldbachReport {
        self.lo = self.lo.min(other.lo);
        self.hi = self.hi.max(other.hi);
        self.evens_checked += other.evens_checked;
        self.counterexamples.extend(other.counterexamples);
        self.hardest = match (self.hardest, other.hardest) {
            (Some(a), Some(b)) => Some(if b.p > a.p { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Checks every even number in `[lo, hi]` (bounds rounded inward to even).
pub fn goldbach_verify_range(lo: u64, hi: u64) -> Result<GoldbachReport> {
    let sieve = PrimeSieve::new(hi)?;
    goldbach_verify_with(&sieve, lo, hi)
}

/// Like [`goldbach_verify_range`] with a caller-supplied sieve covering `hi`.
pub fn goldbach_verify_with(sieve: &PrimeSieve, lo: u64, hi: u64) -> Result<GoldbachReport> {
    let lo = lo.max(4).next_multiple_of(2);
    if hi < lo {
        return Err(Error::Domain(format!("empty even range [{lo}, {hi}]")));
    }
    sieve.check_covers(hi)?;
    const BLOCK: u64 = 1 << 16;
    let blocks: Vec<u64> = (lo..=hi).step_by(BLOCK as usize).collect();
    let report = blocks
        .into_par_iter()
        .map(|start| {
            let end = (start + BLOCK - 1).min(hi);
            let mut r = GoldbachReport { lo: start, hi: end, evens_checked: 0, counterexamples: Vec::new(), hardest: None };
            for n in (start..=end).step_by(2) {
                r.evens_checked += 1;
                match sieve.goldbach_witness(n).expect("n is even, >= 4 and covered") {
                    Some(w) => {
                        if r.hardest.is_none_or(|h| w.p > h.p) {
                            r.hardest = Some(w);
                        }
                    }
                    None => r.counterexamples.push(n),
                }
            }
            r
        })
        .reduce_with(GoldbachReport::merge)
        .expect("non-empty range");
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChenPart {
    Prime(u64),
    Semiprime(u64, u64),
}

impl ChenPart {
    pub fn value(&self) -> u64 {
        match *self {
            ChenPart::Prime(q) => q,
            ChenPart::Semiprime(q, r) => q * r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChenWitness {
    pub even_n: u64,
    pub p: u64,
    pub second: ChenPart,
}

pub fn chen_witness(even_n: u64) -> Result<Option<ChenWitness>> {
    check_even(even_n)?;
    PrimeSieve::new(even_n)?.chen_witness(even_n)
}

/// Pairs `(p, p+2)` of primes with `p + 2 ≤ N`, ascending.
pub fn twin_primes_up_to(n: u64) -> Result<Vec<(u64, u64)>> {
    if n < 3 {
        return Err(Error::Domain("twin prime scan needs N >= 3".into()));
    }
    let sieve = PrimeSieve::new(n)?;
    Ok(sieve
        .primes()
        .iter()
        .filter(|&&p| p + 2 <= n && sieve.is_prime(p + 2))
        .map(|&p| (p, p + 2))
        .collect())
}
