//! Exact solvers, brute-force oracles and verification scans for a handful
//! of classic problems in complexity and number theory:
//!
//! - [`subset_sum`]: naive enumeration and the meet-in-the-middle two-list merge.
//! - [`matching`]: maximum bipartite matching by repeated augmenting paths.
//! - [`collatz`]: shortcut-map trajectories, parity vectors, residue classes,
//!   range verification and the drift statistic.
//! - [`topswops`]: the prefix-reversal card procedure and its max-iteration table.
//! - [`number_theory`]: Möbius/Mertens sieves, π(n) against Li(n), Goldbach,
//!   Chen and twin-prime scans.
//! - [`zeta`]: ζ(s) by the sawtooth integral and by Euler–Maclaurin, the
//!   Riemann–Siegel ϑ and Z functions, and zero counting on the critical line.
//! - [`bench`]: seeded comparison-count scaling harness for the subset-sum solvers.
//! - [`cli`]: the batch command-line front end used by the `workbench` binary.
//!
//! Every algorithm is paired with an independent brute-force check, either
//! exposed here (e.g. [`subset_sum::solve_naive`], [`matching::brute_force_max_matching`])
//! or in the test suites.

pub mod bench;
pub mod cli;
pub mod collatz;
mod error;
pub mod matching;
pub mod number_theory;
mod quadrature;
pub mod subset_sum;
pub mod topswops;
pub mod zeta;

pub use error::{Error, Result};
