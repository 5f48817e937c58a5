//! Word-count formulas against brute force.

use num_bigint::BigUint;

use invseq::combinat::{catalan, multiplicity_m, multiplicity_w, words_r1r2, words_r1r3};
use invseq::oracle::{Oracle, WordConstraint};

fn main() -> invseq::Result<()> {
    let oracle = Oracle::default();
    println!("Catalan: {:?}", (0..10).map(catalan).collect::<Vec<_>>());
    println!(" k  b      a   brute      d   brute");
    for k in 1..=7usize {
        for b in 1..=k {
            let a = oracle.count_words(&WordConstraint::r1_r2(k, b as u32))?;
            let d = oracle.count_words(&WordConstraint::r1_r3(k, b as u32))?;
            let (fa, fd) = (words_r1r2(k as u64, b as u64), words_r1r3(k as u64, b as u64));
            assert_eq!((&fa, &fd), (&a, &d));
            println!("{k:>2} {b:>2} {fa:>6} {a:>7} {fd:>6} {d:>7}");
        }
    }
    let l = 6;
    let m: Vec<BigUint> = (0..=l).map(|b| multiplicity_m(l, b)).collect();
    let w: Vec<BigUint> = (0..=l).map(|b| multiplicity_w(l, b)).collect();
    println!("m_(6,b) = {m:?}\nw_(6,b) = {w:?}");
    Ok(())
}
