//! Inversion sequences, patterns and relation triples.

use invseq::sequence::{avoids_triple, contains_pattern, reduce, triple_to_pattern_set, InversionSequence, RelationTriple};

fn main() -> invseq::Result<()> {
    let e = InversionSequence::from_permutation(&[3, 1, 4, 2])?;
    println!("Lehmer code of 3142: {:?}", e.values());

    let p = reduce(&[5, 2, 5]);
    println!("reduce(5,2,5) = {p}; contained in {:?}: {}", e.values(), contains_pattern(&e, &p));

    let t: RelationTriple = ">,<=,!=".parse()?;
    println!("{t} forbids {}", triple_to_pattern_set(&t));
    let f = InversionSequence::new(vec![0, 1, 0, 2])?;
    println!("{:?} avoids {t}: {}", f.values(), avoids_triple(&f, &t));
    println!("{} triples in all", RelationTriple::all().count());
    Ok(())
}
