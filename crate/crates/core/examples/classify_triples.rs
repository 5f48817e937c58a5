//! Partitioning the 343 relation triples.

use invseq::analysis::classify_triples;
use invseq::oracle::Oracle;

fn main() -> invseq::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let c = classify_triples(n, &Oracle::default())?;
    println!("{} triples, {} pattern sets", c.triple_count(), c.pattern_set_count());
    println!("{} cells with identical avoiders up to length {n}", c.equivalence_count());
    println!("{} Wilf groups up to length {n}", c.wilf_count());
    let largest = c.wilf_groups.iter().max_by_key(|g| g.triples.len()).expect("nonempty");
    println!("largest Wilf group: {} triples, I_{n} = {}", largest.triples.len(), largest.sequence[n]);
    for cell in c.cells.iter().filter(|cell| cell.len() > 4) {
        let sets: Vec<String> = cell.iter().map(ToString::to_string).collect();
        println!("  same avoiders: {}", sets.join(" "));
    }
    Ok(())
}
