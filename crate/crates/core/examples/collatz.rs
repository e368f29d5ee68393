//! Trajectories, parity vectors and the residue classes they pin down.

use num_bigint::BigUint;
use workbench::collatz::{drift_statistic, parity_vector, realize_parity_prefix, trajectory, verify_range, ParityVector};

fn main() -> workbench::Result<()> {
    let eleven = BigUint::from(11u32);
    let t = trajectory(&eleven, 1000)?;
    let values: Vec<String> = t.values.iter().map(|v| v.to_string()).collect();
    println!("11: {} ({} steps)", values.join(" -> "), t.steps);
    println!("parity vector: {}", parity_vector(&eleven, t.steps)?);

    // every start with this 10-bit prefix is 11 mod 1024
    let class = realize_parity_prefix(&ParityVector::parse("1101001000")?)?;
    println!("prefix 1101001000 is realized by {class}");

    let report = verify_range(1, 1_000_000, 100_000)?;
    println!(
        "[1, 10^6]: all halted = {}, longest run {} steps from {}",
        report.all_halted, report.max_steps_seen, report.max_steps_start
    );

    let mean = drift_statistic(10_000, 64, 7)?;
    println!("mean log step factor over 10^4 64-bit starts: {mean:.4} (coin-flip model {:.4})", 0.5 * 0.75f64.ln());
    Ok(())
}
