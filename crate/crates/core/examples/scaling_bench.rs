//! Comparison counts of both subset-sum solvers as n grows.

use workbench::bench::{bench_subset_sum, log2_slope, records_csv, Algorithm};

fn main() -> workbench::Result<()> {
    let ns: Vec<usize> = (10..=24).collect();
    let records = bench_subset_sum(&ns, 3, 1)?;
    print!("{}", records_csv(&records, true));
    println!(
        "log2 slope: naive {:.3}, mitm {:.3}",
        log2_slope(&records, Algorithm::Naive).unwrap(),
        log2_slope(&records, Algorithm::Mitm).unwrap()
    );
    Ok(())
}
