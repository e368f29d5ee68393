//! Solve one instance both ways and show the comparison counters.

use workbench::subset_sum::{
    format_witness, random_instance, solve_mitm_with_stats, solve_naive_with_stats, SubsetSumInstance,
};

fn main() -> workbench::Result<()> {
    let small = SubsetSumInstance::new(vec![3, 34, 4, 12, 5, 2], 9)?;
    let (w, stats) = solve_mitm_with_stats(&small)?;
    println!("{:?} target {} -> {}", small.elements(), small.target(), format_witness(w.as_ref()));
    println!("  mitm comparisons: {} build + {} search", stats.build_comparisons, stats.search_comparisons);

    let inst = random_instance(22, 1_000_000_000, true, 42)?;
    let (a, naive) = solve_naive_with_stats(&inst)?;
    let (b, mitm) = solve_mitm_with_stats(&inst)?;
    println!("n = 22, planted solution");
    println!("  naive: {} after {} comparisons", format_witness(a.as_ref()), naive.comparisons());
    println!("  mitm:  {} after {} comparisons", format_witness(b.as_ref()), mitm.comparisons());
    assert!(b.is_some_and(|w| w.certifies(&inst)));
    Ok(())
}
