//! The reverse-card-shuffling procedure (topswops): look at the top card
//! `k`; stop if it is 1, otherwise reverse the top `k` cards and repeat.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest deck accepted by [`max_iterations`].
pub const MAX_TABLE_N: usize = 11;
/// Largest deck [`max_iterations`] runs without `allow_slow`.
pub const FAST_TABLE_N: usize = 10;

/// A permutation of `1..=n`, position 0 being the top of the deck.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Deck {
    cards: Vec<u8>,
}

impl Deck {
    pub fn new(cards: Vec<u8>) -> Result<Self> {
        let n = cards.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidDeck(format!("deck size {n} outside 1..=255")));
        }
        let mut seen = vec![false; n + 1];
        for &c in &cards {
            let c = c as usize;
            if c == 0 || c > n || std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidDeck(format!("{cards:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(Self { cards })
    }

    /// The sorted deck `1, 2, …, n`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|c| c as u8).collect())
    }

    /// Parses `5732416` (one digit per card, n ≤ 9) or `10,2,1,…`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let cards: Option<Vec<u8>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u8>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
        };
        let cards = cards.ok_or_else(|| Error::InvalidDeck(format!("cannot parse `{s}`")))?;
        Self::new(cards)
    }

    pub fn cards(&self) -> &[u8] {
        &self.cards
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn top(&self) -> u8 {
        self.cards[0]
    }

    pub fn is_halted(&self) -> bool {
        self.top() == 1
    }
}

impl fmt::Display for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cards.len() <= 9 {
            for c in &self.cards {
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.cards.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Reverses the top `k` cards where `k` is the top card.
pub fn shuffle_step(deck: &Deck) -> Result<Deck> {
    if deck.is_halted() {
        return Err(Error::AlreadyHalted);
    }
    let mut cards = deck.cards.clone();
    let k = cards[0] as usize;
    cards[..k].reverse();
    Ok(Deck { cards })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub steps: usize,
    pub final_deck: Deck,
}

/// Runs the procedure until the top card is 1.
///
/// Termination: the largest card that ever reaches the top lands at its
/// own position and can never move again, so by induction on `n` the run
/// is finite (at most `2^(n-1)` steps).
pub fn run(deck: &Deck) -> RunResult {
    let mut cards = deck.cards.clone();
    let steps = run_in_place(&mut cards);
    RunResult { steps, final_deck: Deck { cards } }
}

/// Every deck visited, starting with `deck` and ending at the halted deck.
pub fn trace(deck: &Deck) -> Vec<Deck> {
    let mut out = vec![deck.clone()];
    while let Ok(next) = shuffle_step(out.last().unwrap()) {
        out.push(next);
    }
    out
}

fn run_in_place(cards: &mut [u8]) -> usize {
    let mut steps = 0;
    loop {
        let k = cards[0] as usize;
        if k == 1 {
            return steps;
        }
        cards[..k].reverse();
        steps += 1;
    }
}

/// Longest run over all `n!` decks, with the lexicographically least deck attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxIterations {
    pub n: usize,
    pub max_steps: usize,
    pub witness: Deck,
}

/// Exhaustive maximum over every permutation of `1..=n`.
///
/// Permutations are enumerated in lexicographic order inside blocks that
/// share a first card; blocks run in parallel. `n = 11` (about 4·10⁷ runs)
/// requires `allow_slow`.
pub fn max_iterations(n: usize, allow_slow: bool) -> Result<MaxIterations> {
    if n == 0 {
        return Err(Error::Domain("deck size must be at least 1".into()));
    }
    let limit = if allow_slow { MAX_TABLE_N } else { FAST_TABLE_N };
    crate::error::size_check("deck size", n, limit)?;

    let best = (1..=n as u8)
        .into_par_iter()
        .map(|first| best_with_first_card(n, first))
        .collect::<Vec<_>>()
        .into_iter()
        // strict comparison keeps the smaller first card on ties
        .reduce(|a, b| if b.0 > a.0 { b } else { a })
        .expect("n >= 1");
    Ok(MaxIterations { n, max_steps: best.0, witness: Deck { cards: best.1 } })
}

fn best_with_first_card(n: usize, first: u8) -> (usize, Vec<u8>) {
    let mut perm: Vec<u8> = std::iter::once(first).chain((1..=n as u8).filter(|&c| c != first)).collect();
    let mut scratch = perm.clone();
    let mut best = (0usize, perm.clone());
    let mut have = false;
    loop {
        scratch.copy_from_slice(&perm);
        let steps = run_in_place(&mut scratch);
        if !have || steps > best.0 {
            best = (steps, perm.clone());
            have = true;
        }
        if !next_permutation(&mut perm[1..]) {
            return best;
        }
    }
}

/// Advances to the next permutation in lexicographic order; false after the last.
fn next_permutation(xs: &mut [u8]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// CSV rows `n,max_steps,witness` for `n = 1..=max_n`.
pub fn table_csv(rows: &[MaxIterations]) -> String {
    let mut out = String::from("n,max_steps,witness\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.n, r.max_steps, r.witness));
    }
    out
}
