//! A small dating-agency market: build the compatibility graph from
//! preference lists and pair up as many clients as possible.

use workbench::matching::{build_compatibility, find_augmenting_path, maximum_matching, Matching, PreferenceProfile};

const PROFILES: &str = "\
left 0 requires: nonsmoker offers: tall, reader
left 1 requires: reader offers: nonsmoker
left 2 requires: - offers: nonsmoker, reader
right 0 requires: tall offers: nonsmoker
right 1 requires: nonsmoker offers: reader
right 2 requires: reader, nonsmoker offers: -
";

fn main() -> workbench::Result<()> {
    let profiles = PreferenceProfile::parse(PROFILES)?;
    let graph = build_compatibility(&profiles);
    println!("compatible pairs: {:?}", graph.edges().collect::<Vec<_>>());

    // the first augmenting path from the empty matching
    if let Some(path) = find_augmenting_path(&graph, &Matching::empty(&graph))? {
        let hops: Vec<String> = path.vertices().iter().map(|v| v.to_string()).collect();
        println!("first augmenting path: {}", hops.join(" -> "));
    }

    let m = maximum_matching(&graph);
    println!("maximum matching ({} pairs, perfect: {}): {:?}", m.len(), m.is_perfect(), m.pairs());
    Ok(())
}
