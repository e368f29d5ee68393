//! SUBSET-SUM: does some subset of a list of integers add up to a target?
//!
//! Two exact solvers live here. [`solve_naive`] compares the target against
//! every one of the `2^n` subset sums and is the oracle. [`solve_mitm`] is the
//! meet-in-the-middle algorithm: split the list at `⌈n/2⌉`, build the sorted
//! subset sums `S⁺` of the first half and the sorted list `b − S⁻` for the
//! second half, then walk both lists with two pointers, always advancing the
//! side holding the smaller value, until the heads match or a list runs out.
//!
//! Both solvers count element comparisons so that the `2^n` versus `2^(n/2)`
//! scaling can be measured independently of the machine (see [`crate::bench`]).

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{size_check, Error, Result};

/// Largest instance accepted by the exhaustive solver.
pub const NAIVE_MAX_ELEMENTS: usize = 30;
/// Largest instance representable by a 64-bit witness mask.
pub const MITM_MAX_ELEMENTS: usize = 63;
/// Largest instance the meet-in-the-middle solver will run: each half
/// table then holds at most 2^22 entries (about 100 MB).
pub const MITM_MEMORY_MAX_ELEMENTS: usize = 44;
/// Bound on `|aᵢ|`.
pub const ELEMENT_BOUND: i64 = 1 << 60;
/// Bound on `|b|`.
pub const TARGET_BOUND: i64 = 1 << 62;

/// A list of integers together with a target sum.
///
/// Order only matters for index reporting; duplicates are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSumInstance {
    elements: Vec<i64>,
    target: i64,
}

impl SubsetSumInstance {
    pub fn new(elements: Vec<i64>, target: i64) -> Result<Self> {
        size_check("element count", elements.len(), MITM_MAX_ELEMENTS)?;
        if let Some(a) = elements.iter().find(|a| a.unsigned_abs() > ELEMENT_BOUND as u64) {
            return Err(Error::Domain(format!("element {a} exceeds 2^60 in magnitude")));
        }
        if target.unsigned_abs() > TARGET_BOUND as u64 {
            return Err(Error::Domain(format!("target {target} exceeds 2^62 in magnitude")));
        }
        Ok(Self { elements, target })
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn target(&self) -> i64 {
        self.target
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Parses the instance file format: a header line `n b`, then `n`
    /// whitespace-separated integers (on any number of lines).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (header_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `n b` header".into(),
        })?;
        let header_no = header_no + 1;
        let mut fields = header.split_whitespace();
        let n: usize = parse_field(fields.next(), header_no, "n")?;
        let target: i64 = parse_field(fields.next(), header_no, "b")?;
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: header_no,
                msg: "header must be exactly `n b`".into(),
            });
        }
        size_check("element count", n, MITM_MAX_ELEMENTS)?;

        let mut elements = Vec::with_capacity(n);
        let mut last_line = header_no;
        for (no, line) in lines {
            last_line = no + 1;
            for tok in line.split_whitespace() {
                let a: i64 = tok.parse().map_err(|_| Error::Parse {
                    line: no + 1,
                    msg: format!("`{tok}` is not an integer"),
                })?;
                elements.push(a);
            }
        }
        if elements.len() != n {
            return Err(Error::Parse {
                line: last_line,
                msg: format!("header announces {n} elements, found {}", elements.len()),
            });
        }
        Self::new(elements, target)
    }

    /// Renders the instance in the format accepted by [`SubsetSumInstance::parse`].
    pub fn to_file_string(&self) -> String {
        let body: Vec<String> = self.elements.iter().map(i64::to_string).collect();
        format!("{} {}\n{}\n", self.elements.len(), self.target, body.join(" "))
    }
}

fn parse_field<T: std::str::FromStr>(tok: Option<&str>, line: usize, name: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing `{name}`"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{tok}` is not a valid `{name}`"),
    })
}

/// A certificate: bit `i` of the mask selects element `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetWitness {
    mask: u64,
}

impl SubsetWitness {
    pub fn from_mask(mask: u64) -> Self {
        Self { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Selected indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..64).filter(|i| self.mask >> i & 1 == 1).collect()
    }

    pub fn sum(&self, elements: &[i64]) -> i128 {
        elements
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask >> i & 1 == 1)
            .map(|(_, &a)| a as i128)
            .sum()
    }

    /// True when every selected index exists and the selection sums to the target.
    pub fn certifies(&self, instance: &SubsetSumInstance) -> bool {
        let n = instance.len();
        let in_range = n == 64 || self.mask >> n == 0;
        in_range && self.sum(&instance.elements) == instance.target as i128
    }
}

impl fmt::Display for SubsetWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(usize::to_string).collect();
        f.write_str(&idx.join(" "))
    }
}

/// Witness output line: sorted zero-based indices, or `NONE`.
pub fn format_witness(witness: Option<&SubsetWitness>) -> String {
    match witness {
        Some(w) => w.to_string(),
        None => "NONE".to_string(),
    }
}

/// Comparison counters reported by both solvers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Comparisons spent building sorted half tables (zero for the naive solver).
    pub build_comparisons: u64,
    /// Comparisons of a subset sum against the target (naive) or of the two
    /// list heads against each other, including witness extraction (MITM).
    pub search_comparisons: u64,
}

impl SolveStats {
    pub fn comparisons(&self) -> u64 {
        self.build_comparisons + self.search_comparisons
    }
}

/// All `2^n` subset sums, entry `m` belonging to mask `m`.
pub fn enumerate_subset_sums(elements: &[i64]) -> Result<Vec<(i128, u64)>> {
    size_check("element count", elements.len(), NAIVE_MAX_ELEMENTS)?;
    let count = 1usize << elements.len();
    let mut sums = Vec::with_capacity(count);
    sums.push(0i128);
    for m in 1..count {
        let low = m.trailing_zeros() as usize;
        let s = sums[m & (m - 1)] + elements[low] as i128;
        sums.push(s);
    }
    Ok(sums.into_iter().enumerate().map(|(m, s)| (s, m as u64)).collect())
}

/// Exhaustive solver. The lowest satisfying mask wins.
pub fn solve_naive(instance: &SubsetSumInstance) -> Result<Option<SubsetWitness>> {
    solve_naive_with_stats(instance).map(|(w, _)| w)
}

/// Like [`solve_naive`], also reporting comparison counts. On a
/// solution-free instance exactly `2^n` comparisons are made.
pub fn solve_naive_with_stats(
    instance: &SubsetSumInstance,
) -> Result<(Option<SubsetWitness>, SolveStats)> {
    let n = instance.len();
    size_check("element count", n, NAIVE_MAX_ELEMENTS)?;
    let target = instance.target as i128;

    // sum(mask) = low[mask & lo_mask] + high[mask >> lo_bits]; both tables
    // have at most 2^15 entries so the full 2^n list is never materialised.
    let lo_bits = n / 2;
    let low = enumerate_subset_sums(&instance.elements[..lo_bits])?;
    let high = enumerate_subset_sums(&instance.elements[lo_bits..])?;

    let mut stats = SolveStats::default();
    for (hs, hm) in &high {
        for (ls, lm) in &low {
            stats.search_comparisons += 1;
            if hs + ls == target {
                let mask = hm << lo_bits | lm;
                return Ok((Some(SubsetWitness::from_mask(mask)), stats));
            }
        }
    }
    Ok((None, stats))
}

/// Subset sums of one half of the instance, sorted ascending by sum.
///
/// Masks are expressed in the index space of the whole instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSumTable {
    entries: Vec<(i128, u64)>,
}

impl HalfSumTable {
    /// Builds the sorted table of all subset sums of `half`, whose first
    /// element has index `offset` in the full instance.
    ///
    /// The sorted list is grown one element at a time by merging `L` with
    /// `L + a`, both already sorted, so the sort costs `O(2^k)` comparisons
    /// for `k` elements rather than `O(k·2^k)`.
    pub fn build(half: &[i64], offset: u32, comparisons: &mut u64) -> Self {
        let mut entries: Vec<(i128, u64)> = vec![(0, 0)];
        for (i, &a) in half.iter().enumerate() {
            let bit = 1u64 << (offset + i as u32);
            let shifted: Vec<(i128, u64)> =
                entries.iter().map(|&(s, m)| (s + a as i128, m | bit)).collect();
            entries = merge_sorted(&entries, &shifted, comparisons);
        }
        Self { entries }
    }

    /// The list `b − S` for a table `S`, again ascending by value.
    pub fn subtracted_from(target: i64, table: &HalfSumTable) -> Self {
        let b = target as i128;
        let entries = table.entries.iter().rev().map(|&(s, m)| (b - s, m)).collect();
        Self { entries }
    }

    pub fn entries(&self) -> &[(i128, u64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_sorted(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].0 <= w[1].0)
    }
}

fn merge_sorted(a: &[(i128, u64)], b: &[(i128, u64)], comparisons: &mut u64) -> Vec<(i128, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        *comparisons += 1;
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Meet-in-the-middle solver.
pub fn solve_mitm(instance: &SubsetSumInstance) -> Result<Option<SubsetWitness>> {
    solve_mitm_with_stats(instance).map(|(w, _)| w)
}

/// Meet-in-the-middle solver with comparison counters.
///
/// When several witnesses share the first matching sum, the numerically
/// least combined mask over that equal-sum run is returned.
pub fn solve_mitm_with_stats(
    instance: &SubsetSumInstance,
) -> Result<(Option<SubsetWitness>, SolveStats)> {
    let n = instance.len();
    size_check("element count", n, MITM_MEMORY_MAX_ELEMENTS)?;
    let split = n.div_ceil(2);
    let (front, back) = instance.elements.split_at(split);

    let mut stats = SolveStats::default();
    let plus = HalfSumTable::build(front, 0, &mut stats.build_comparisons);
    let minus = HalfSumTable::build(back, split as u32, &mut stats.build_comparisons);
    let residual = HalfSumTable::subtracted_from(instance.target, &minus);
    debug_assert!(plus.is_sorted() && residual.is_sorted());

    let found = merge_for_match(&plus, &residual, &mut stats.search_comparisons);
    Ok((found.map(SubsetWitness::from_mask), stats))
}

/// Two-pointer walk over two ascending lists. Returns the least combined
/// mask among the equal runs at the first matching value.
fn merge_for_match(plus: &HalfSumTable, residual: &HalfSumTable, comparisons: &mut u64) -> Option<u64> {
    let (p, r) = (plus.entries(), residual.entries());
    let (mut i, mut j) = (0, 0);
    while i < p.len() && j < r.len() {
        *comparisons += 1;
        match p[i].0.cmp(&r[j].0) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                let value = p[i].0;
                let plus_mask = least_mask_in_run(&p[i..], value, comparisons);
                let rest_mask = least_mask_in_run(&r[j..], value, comparisons);
                return Some(plus_mask | rest_mask);
            }
        }
    }
    None
}

fn least_mask_in_run(run: &[(i128, u64)], value: i128, comparisons: &mut u64) -> u64 {
    let mut best = run[0].1;
    for &(s, m) in &run[1..] {
        *comparisons += 1;
        if s != value {
            break;
        }
        best = best.min(m);
    }
    best
}

/// Seeded random instance with elements uniform in `[−value_bound, value_bound]`.
///
/// With `force_solvable` the target is the sum of a uniformly chosen subset;
/// otherwise it is uniform in `[−n·value_bound, n·value_bound]`.
pub fn random_instance(
    n: usize,
    value_bound: i64,
    force_solvable: bool,
    seed: u64,
) -> Result<SubsetSumInstance> {
    size_check("element count", n, MITM_MAX_ELEMENTS)?;
    check_value_bound(n, value_bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements: Vec<i64> = (0..n).map(|_| rng.random_range(-value_bound..=value_bound)).collect();
    let target = if force_solvable {
        let mask = if n == 0 { 0 } else { rng.random::<u64>() & (u64::MAX >> (64 - n)) };
        SubsetWitness::from_mask(mask).sum(&elements) as i64
    } else {
        let span = n as i64 * value_bound;
        rng.random_range(-span..=span)
    };
    SubsetSumInstance::new(elements, target)
}

/// Seeded instance guaranteed to have no solution: every element is even
/// and the target is odd. Used by the scaling benchmark so that both
/// solvers run to exhaustion.
pub fn random_unsolvable_instance(n: usize, value_bound: i64, seed: u64) -> Result<SubsetSumInstance> {
    size_check("element count", n, MITM_MAX_ELEMENTS)?;
    check_value_bound(n, value_bound)?;
    if value_bound < 2 {
        return Err(Error::Domain("value_bound must be at least 2 for even elements".into()));
    }
    let half = value_bound / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements: Vec<i64> = (0..n).map(|_| 2 * rng.random_range(-half..=half)).collect();
    let target = 2 * rng.random_range(-half..=half) + 1;
    SubsetSumInstance::new(elements, target)
}

fn check_value_bound(n: usize, value_bound: i64) -> Result<()> {
    if !(1..=ELEMENT_BOUND).contains(&value_bound) {
        return Err(Error::Domain(format!("value_bound {value_bound} outside [1, 2^60]")));
    }
    if (n as i128) * (value_bound as i128) > TARGET_BOUND as i128 {
        return Err(Error::Domain("n·value_bound exceeds 2^62".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(elements: &[i64], target: i64) -> SubsetSumInstance {
        SubsetSumInstance::new(elements.to_vec(), target).unwrap()
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_subset_sums(&[]).unwrap(), vec![(0, 0)]);
        assert_eq!(enumerate_subset_sums(&[5]).unwrap(), vec![(0, 0), (5, 1)]);
        let all = enumerate_subset_sums(&[1, 2, 3]).unwrap();
        assert_eq!(all.len(), 8);
        assert!(all.contains(&(6, 0b111)));
        for &(s, m) in &all {
            assert_eq!(s, SubsetWitness::from_mask(m).sum(&[1, 2, 3]));
        }
    }

    #[test]
    fn enumerate_rejects_oversized() {
        let big = vec![1i64; 31];
        assert!(matches!(enumerate_subset_sums(&big), Err(Error::SizeExceeded { .. })));
    }

    #[test]
    fn naive_examples() {
        assert_eq!(solve_naive(&inst(&[], 0)).unwrap(), Some(SubsetWitness::from_mask(0)));
        assert_eq!(solve_naive(&inst(&[], 5)).unwrap(), None);
        assert_eq!(solve_naive(&inst(&[1, 2, 3], 6)).unwrap(), Some(SubsetWitness::from_mask(0b111)));
        // {0,1} (mask 0b011) precedes {2} (mask 0b100) in enumeration order
        assert_eq!(solve_naive(&inst(&[1, 2, 3], 3)).unwrap(), Some(SubsetWitness::from_mask(0b011)));
        let big = SubsetSumInstance::new(vec![1; 31], 0).unwrap();
        assert!(matches!(solve_naive(&big), Err(Error::SizeExceeded { .. })));
    }

    #[test]
    fn mitm_examples() {
        let w = solve_mitm(&inst(&[1, 2, 3, 4], 10)).unwrap().unwrap();
        assert_eq!(w.indices(), vec![0, 1, 2, 3]);
        assert_eq!(solve_mitm(&inst(&[2, 4, 6], 5)).unwrap(), None);
        assert_eq!(solve_mitm(&inst(&[], 0)).unwrap(), Some(SubsetWitness::from_mask(0)));
        assert_eq!(solve_mitm(&inst(&[], -3)).unwrap(), None);
    }

    #[test]
    fn instance_bounds() {
        assert!(SubsetSumInstance::new(vec![0; 64], 0).is_err());
        assert!(SubsetSumInstance::new(vec![(1 << 60) + 1], 0).is_err());
        assert!(SubsetSumInstance::new(vec![1 << 60, -(1 << 60)], 1 << 62).is_ok());
    }

    #[test]
    fn mitm_handles_extreme_magnitudes() {
        // 44 · 2^60 overflows i64 but not the i128 accumulator.
        let elements = vec![1i64 << 60; MITM_MEMORY_MAX_ELEMENTS];
        let unreachable = SubsetSumInstance::new(elements.clone(), (1 << 62) - 1).unwrap();
        assert_eq!(solve_mitm(&unreachable).unwrap(), None);
        let four = SubsetSumInstance::new(elements, 1 << 62).unwrap();
        let w = solve_mitm(&four).unwrap().unwrap();
        assert_eq!(w.indices().len(), 4);
        assert!(w.certifies(&four));
        let too_big = SubsetSumInstance::new(vec![1; MITM_MEMORY_MAX_ELEMENTS + 1], 3).unwrap();
        assert!(matches!(solve_mitm(&too_big), Err(Error::SizeExceeded { .. })));
    }

    #[test]
    fn counters_on_hand_counted_instance() {
        // [2, 4], b = 1: the naive solver compares all four sums.
        let i = inst(&[2, 4], 1);
        let (w, s) = solve_naive_with_stats(&i).unwrap();
        assert_eq!(w, None);
        assert_eq!(s, SolveStats { build_comparisons: 0, search_comparisons: 4 });

        // MITM: one comparison to merge [0] with [2], one for [0] with [4];
        // then S+ = [0, 2] against b − S− = [−3, 1]:
        // 0 > −3, 0 < 1, 2 > 1 → three comparisons.
        let (w, s) = solve_mitm_with_stats(&i).unwrap();
        assert_eq!(w, None);
        assert_eq!(s, SolveStats { build_comparisons: 2, search_comparisons: 3 });
    }

    #[test]
    fn duplicate_sums_pick_least_combined_mask() {
        // Four ways to reach 2. The merge first meets the run at value 0
        // (S+ = 0 against b − S− = 0), where the back-half masks are {2}, {3}.
        let i = inst(&[2, 2, 2, 2], 2);
        assert_eq!(solve_mitm(&i).unwrap().unwrap().mask(), 0b0100);
        // Target 4: the first run is again at 0, with only {2,3} behind it.
        let i = inst(&[2, 2, 2, 2], 4);
        assert_eq!(solve_mitm(&i).unwrap().unwrap().mask(), 0b1100);
        // Both runs have two members at value 1: least of each is {0} and {2}.
        let i = inst(&[1, 1, 5, 5], 6);
        assert_eq!(solve_mitm(&i).unwrap().unwrap().mask(), 0b0101);
    }

    #[test]
    fn half_tables_are_sorted_and_complete() {
        let mut c = 0;
        let t = HalfSumTable::build(&[5, -3, 7, 0, -11], 0, &mut c);
        assert_eq!(t.len(), 32);
        assert!(t.is_sorted());
        let mut masks: Vec<u64> = t.entries().iter().map(|e| e.1).collect();
        masks.sort();
        assert_eq!(masks, (0..32).collect::<Vec<_>>());
        let r = HalfSumTable::subtracted_from(4, &t);
        assert!(r.is_sorted());
        // merging sizes 1,2,4,8,16 costs at most 1+3+7+15+31 comparisons
        assert!(c <= 57);
    }

    #[test]
    fn merge_finds_planted_matches_everywhere() {
        // Plant the match at the first, last and a middle position of S+.
        let elements = [3, 10, 40, -7, 21, 90];
        let mut c = 0;
        let plus = HalfSumTable::build(&elements[..3], 0, &mut c);
        let minus_sums: Vec<i128> = enumerate_subset_sums(&elements[3..]).unwrap().iter().map(|e| e.0).collect();
        for pos in [0, plus.len() / 2, plus.len() - 1] {
            for &ms in &minus_sums {
                let target = (plus.entries()[pos].0 + ms) as i64;
                let i = inst(&elements, target);
                let w = solve_mitm(&i).unwrap().expect("planted match");
                assert!(w.certifies(&i));
            }
        }
    }

    #[test]
    fn random_instance_contract() {
        let empty = random_instance(0, 10, true, 3).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.target(), 0);

        let solvable = random_instance(5, 100, true, 7).unwrap();
        assert!(solve_naive(&solvable).unwrap().is_some());

        let free = random_instance(5, 100, false, 7).unwrap();
        assert_eq!(free.len(), 5);
        assert!(free.elements().iter().all(|a| a.abs() <= 100));
        assert!(free.target().abs() <= 500);

        assert_eq!(random_instance(9, 1000, false, 42), random_instance(9, 1000, false, 42));
        assert!(random_instance(5, 0, false, 1).is_err());
        assert!(random_instance(64, 10, false, 1).is_err());
    }

    #[test]
    fn unsolvable_instances_have_no_solution() {
        for seed in 0..20 {
            let i = random_unsolvable_instance(12, 1_000_000, seed).unwrap();
            assert_eq!(solve_naive(&i).unwrap(), None);
            assert_eq!(solve_mitm(&i).unwrap(), None);
        }
    }

    #[test]
    fn file_format() {
        let i = SubsetSumInstance::parse("3 6\n1 2\n3\n").unwrap();
        assert_eq!(i, inst(&[1, 2, 3], 6));
        assert_eq!(SubsetSumInstance::parse(&i.to_file_string()).unwrap(), i);
        assert_eq!(SubsetSumInstance::parse("0 0\n").unwrap(), inst(&[], 0));
        assert!(matches!(SubsetSumInstance::parse("3 6\n1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(SubsetSumInstance::parse("2 x\n1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(SubsetSumInstance::parse(""), Err(Error::Parse { .. })));

        assert_eq!(format_witness(None), "NONE");
        assert_eq!(format_witness(Some(&SubsetWitness::from_mask(0b1010))), "1 3");
        assert_eq!(format_witness(Some(&SubsetWitness::from_mask(0))), "");
    }
}
