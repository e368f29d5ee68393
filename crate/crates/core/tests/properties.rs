use num_bigint::BigUint;
use num_complex::Complex64;
use proptest::prelude::*;

use workbench::collatz::{parity_vector, realize_parity_prefix, ParityVector};
use workbench::matching::{augment, find_augmenting_path, maximum_matching, BipartiteGraph, Matching};
use workbench::number_theory::{mertens, mobius_sieve, PrimeSieve};
use workbench::subset_sum::{solve_mitm, solve_mitm_with_stats, solve_naive, HalfSumTable, SubsetSumInstance};
use workbench::topswops::{run, shuffle_step, trace, Deck};
use workbench::zeta::{zeta_em_with_error, zeta_integral};

fn instance() -> impl Strategy<Value = SubsetSumInstance> {
    (prop::collection::vec(-1_000_000_000i64..=1_000_000_000, 0..=16), any::<bool>(), any::<u16>())
        .prop_map(|(elements, plant, pick)| {
            let target = if plant {
                elements.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, a)| a).sum()
            } else {
                elements.iter().map(|a| a / 3).sum::<i64>() + 1
            };
            SubsetSumInstance::new(elements, target).unwrap()
        })
}

fn graph() -> impl Strategy<Value = BipartiteGraph> {
    (0usize..=7, 0usize..=7).prop_flat_map(|(l, r)| {
        prop::collection::vec(any::<bool>(), l * r).prop_map(move |bits| {
            let edges: Vec<_> = bits.iter().enumerate().filter(|(_, b)| **b).map(|(k, _)| (k / r, k % r)).collect();
            BipartiteGraph::new(l, r, &edges).unwrap()
        })
    })
}

fn deck() -> impl Strategy<Value = Deck> {
    (1u8..=9).prop_flat_map(|n| Just((1..=n).collect::<Vec<u8>>()).prop_shuffle()).prop_map(|c| Deck::new(c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mitm_agrees_with_naive(inst in instance()) {
        let a = solve_naive(&inst).unwrap();
        let b = solve_mitm(&inst).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
        if let Some(w) = a { prop_assert!(w.certifies(&inst)); }
        if let Some(w) = b { prop_assert!(w.certifies(&inst)); }
    }

    #[test]
    fn half_tables_are_sorted_and_complete(half in prop::collection::vec(-1000i64..1000, 0..=10), target in -5000i64..5000) {
        let mut count = 0;
        let t = HalfSumTable::build(&half, 3, &mut count);
        prop_assert_eq!(t.len(), 1 << half.len());
        prop_assert!(t.is_sorted());
        prop_assert!(HalfSumTable::subtracted_from(target, &t).is_sorted());
        let mut masks: Vec<u64> = t.entries().iter().map(|e| e.1 >> 3).collect();
        masks.sort_unstable();
        prop_assert_eq!(masks, (0..1u64 << half.len()).collect::<Vec<_>>());
    }

    #[test]
    fn mitm_work_is_bounded(inst in instance()) {
        let (_, stats) = solve_mitm_with_stats(&inst).unwrap();
        let n = inst.len() as u32;
        // merge-doubling builds cost at most 2^(k+1) per half; the search at most both lengths
        prop_assert!(stats.comparisons() <= 1u64 << (n.div_ceil(2) + 3));
    }

    #[test]
    fn maximum_matching_is_valid_and_unaugmentable(g in graph()) {
        let m = maximum_matching(&g);
        prop_assert!(m.validate(&g).is_ok());
        prop_assert!(find_augmenting_path(&g, &m).unwrap().is_none());
    }

    #[test]
    fn augmenting_grows_by_one(g in graph()) {
        let mut m = Matching::empty(&g);
        while let Some(p) = find_augmenting_path(&g, &m).unwrap() {
            prop_assert!(p.validate(&g, &m).is_ok());
            let next = augment(&g, &m, &p).unwrap();
            prop_assert_eq!(next.len(), m.len() + 1);
            prop_assert!(next.validate(&g).is_ok());
            m = next;
        }
        prop_assert_eq!(m.len(), maximum_matching(&g).len());
    }

    #[test]
    fn shuffling_preserves_the_deck(d in deck()) {
        let mut sorted = d.cards().to_vec();
        sorted.sort_unstable();
        for state in trace(&d) {
            let mut c = state.cards().to_vec();
            c.sort_unstable();
            prop_assert_eq!(&c, &sorted);
        }
        let r = run(&d);
        prop_assert!(r.final_deck.is_halted());
        prop_assert!(r.steps < 1 << (d.len() - 1).max(1));
        if !d.is_halted() {
            prop_assert_eq!(run(&shuffle_step(&d).unwrap()).steps + 1, r.steps);
        }
    }

    #[test]
    fn parity_prefix_depends_only_on_residue(r in 1u64..1 << 20, m in 1usize..=20, j in 0u64..1000) {
        let r = r % (1 << m);
        let n = BigUint::from(r + (j + 1) * (1 << m));
        let pv = parity_vector(&n, m).unwrap();
        let class = realize_parity_prefix(&pv).unwrap();
        prop_assert_eq!(&class.residue, &BigUint::from(r));
        prop_assert!(class.contains(&n));
    }

    #[test]
    fn realized_class_has_the_prefix(bits in prop::collection::vec(any::<bool>(), 1..40), j in 0u32..50) {
        let pv = ParityVector::new(bits.clone());
        let class = realize_parity_prefix(&pv).unwrap();
        let member = class.least_positive() + class.modulus() * j;
        prop_assert_eq!(parity_vector(&member, bits.len()).unwrap(), pv);
    }

    #[test]
    fn zeta_evaluators_agree(re in 0.3f64..=2.0, im in -30.0f64..=30.0) {
        let s = Complex64::new(re, im);
        prop_assume!((s - 1.0).norm() > 1e-3);
        let tol = 1e-5;
        let a = zeta_integral(s, tol).unwrap();
        let (b, err) = zeta_em_with_error(s).unwrap();
        prop_assert!((a - b).norm() <= tol + err, "{} vs {} at {}", a, b, s);
    }
}

#[test]
fn mertens_telescopes_on_a_million() {
    let mu = mobius_sieve(1_000_000).unwrap();
    let m = mertens(1_000_000).unwrap();
    for k in 1..=1_000_000u64 {
        assert_eq!(m.at(k) - m.at(k - 1), mu.mu(k) as i64);
    }
}

// trial-division oracles on 10^4 seeded points up to 10^6
#[test]
fn sieves_match_trial_division() {
    use rand::{Rng, SeedableRng};
    let mu = mobius_sieve(1_000_000).unwrap();
    let sieve = PrimeSieve::new(1_000_000).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10_000 {
        let k: u64 = rng.random_range(1..=1_000_000);
        let (mut n, mut d, mut sign, mut square) = (k, 2u64, 1i8, false);
        while d * d <= n {
            if n % d == 0 {
                n /= d;
                square |= n % d == 0;
                while n % d == 0 {
                    n /= d;
                }
                sign = -sign;
            }
            d += 1;
        }
        if n > 1 {
            sign = -sign;
        }
        let want = if square { 0 } else { sign };
        assert_eq!(mu.mu(k), want, "mu({k})");
        let prime = k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| k % d != 0);
        assert_eq!(sieve.is_prime(k), prime, "{k}");
    }
}

// the evaluator-agreement invariant on a fixed set of 50 seeded points
#[test]
fn zeta_evaluators_agree_on_fifty_points() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(50);
    for _ in 0..50 {
        let s = Complex64::new(rng.random_range(0.3..=2.0), rng.random_range(-30.0..=30.0));
        let tol = 1e-5;
        let a = zeta_integral(s, tol).unwrap();
        let (b, err) = zeta_em_with_error(s).unwrap();
        assert!((a - b).norm() <= tol + err, "{a} vs {b} at {s}");
    }
}
