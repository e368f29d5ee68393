//! Goldbach and Chen decompositions, and twin primes.

use workbench::number_theory::{goldbach_verify_range, twin_primes_up_to, ChenPart, PrimeSieve};

fn main() -> workbench::Result<()> {
    let sieve = PrimeSieve::new(1_000)?;
    for n in [4, 28, 98, 128] {
        let g = sieve.goldbach_witness(n)?.expect("no counterexample this small");
        print!("{n} = {} + {}", g.p, g.q);
        if let Some(c) = sieve.chen_semiprime_witness(n) {
            if let ChenPart::Semiprime(q, r) = c.second {
                print!("   (also {} + {q}·{r})", c.p);
            }
        }
        println!();
    }

    let report = goldbach_verify_range(4, 1_000_000)?;
    println!(
        "{} even numbers up to 10^6, {} counterexamples; hardest: {:?}",
        report.evens_checked,
        report.counterexamples.len(),
        report.hardest
    );

    let twins = twin_primes_up_to(100)?;
    println!("twin primes below 100: {twins:?}");
    Ok(())
}
