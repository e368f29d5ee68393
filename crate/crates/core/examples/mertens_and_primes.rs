//! The Mertens random walk against c·√n·ln n, and π(n) against Li(n).

use workbench::number_theory::{mertens, mertens_bound_check, pi_li_csv, prime_count_vs_li};

fn main() -> workbench::Result<()> {
    let n = 1_000_000;
    let m = mertens(n)?;
    let peak = (1..=n).max_by_key(|&k| m.at(k).abs()).unwrap();
    println!("M({n}) = {}, largest |M(k)| = {} at k = {peak}", m.at(n), m.at(peak).abs());

    for c in [1.0, 0.1, 0.01] {
        let v = mertens_bound_check(n, c)?;
        println!("c = {c}: {} violations of |M(k)| <= c·sqrt(k)·ln k", v.len());
    }

    let rows = prime_count_vs_li(n, &[1_000, 10_000, 100_000, 1_000_000])?;
    print!("{}", pi_li_csv(&rows));
    Ok(())
}
