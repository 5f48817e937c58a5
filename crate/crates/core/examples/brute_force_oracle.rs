//! Exhaustive enumeration of avoiders.

use invseq::oracle::Oracle;
use invseq::sequence::PatternSet;

fn main() -> invseq::Result<()> {
    let oracle = Oracle::from_env();
    let set = PatternSet::parse("100,102,201")?;
    for e in oracle.enumerate_avoiders(3, &set)? {
        print!("{:?} ", e.values());
    }
    println!();
    println!("I_0..I_8 {set}: {:?}", oracle.counting_sequence(8, &set)?);
    let one = PatternSet::parse("001")?;
    println!("I_5(001) = {} (2^4)", oracle.count_avoiders(5, &one)?);
    println!("without pruning: {}", oracle.count_avoiders_unpruned(5, &one)?);
    Ok(())
}
