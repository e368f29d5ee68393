//! The card-reversal procedure and its longest runs.

use workbench::topswops::{max_iterations, table_csv, trace, Deck};

fn main() -> workbench::Result<()> {
    let deck = Deck::parse("5732416")?;
    let chain: Vec<String> = trace(&deck).iter().map(Deck::to_string).collect();
    println!("{}", chain.join(" -> "));

    let rows = (1..=9).map(|n| max_iterations(n, false)).collect::<workbench::Result<Vec<_>>>()?;
    print!("{}", table_csv(&rows));
    Ok(())
}
