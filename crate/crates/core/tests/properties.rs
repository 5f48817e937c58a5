use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use invseq::analysis::{estimate_growth, GrowthModel};
use invseq::gentree::{count_class, count_class_by_census, ClassId};
use invseq::sequence::{
    avoids_all, avoids_triple, reduce, triple_to_pattern_set, InversionSequence, Pattern, PatternSet, Relation,
    RelationTriple,
};
use invseq::series::{kernel_for, TruncatedSeries};

fn inversion_sequence(max_len: usize) -> impl Strategy<Value = InversionSequence> {
    proptest::collection::vec(any::<u32>(), 0..=max_len).prop_map(|raw| {
        let v = raw.iter().enumerate().map(|(i, r)| r % (i as u32 + 1)).collect();
        InversionSequence::new(v).unwrap()
    })
}

fn triple() -> impl Strategy<Value = RelationTriple> {
    (0..7usize, 0..7usize, 0..7usize)
        .prop_map(|(a, b, c)| RelationTriple::new(Relation::ALL[a], Relation::ALL[b], Relation::ALL[c]))
}

fn pattern_set() -> impl Strategy<Value = PatternSet> {
    let all = Pattern::all_of_length(3);
    proptest::sample::subsequence(all, 0..=13).prop_map(PatternSet::new)
}

fn class() -> impl Strategy<Value = ClassId> {
    proptest::sample::select(ClassId::ALL.to_vec())
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(-20i64..=20, order).prop_map(move |tail| {
        let mut c = vec![BigRational::from_integer(BigInt::from(1))];
        c.extend(tail.into_iter().map(|v| BigRational::from_integer(BigInt::from(v))));
        TruncatedSeries::from_coeffs(c)
    })
}

proptest! {
    #[test]
    fn reduce_is_idempotent_and_order_preserving(w in proptest::collection::vec(0u32..6, 0..8)) {
        let r = reduce(&w);
        prop_assert_eq!(reduce(r.digits()), r.clone());
        for i in 0..w.len() {
            for j in 0..w.len() {
                prop_assert_eq!(w[i].cmp(&w[j]), r.digits()[i].cmp(&r.digits()[j]));
            }
        }
        let used: BTreeSet<u32> = r.digits().iter().copied().collect();
        let expected: BTreeSet<u32> = (0..used.len() as u32).collect();
        prop_assert_eq!(used, expected);
    }

    #[test]
    fn triple_avoidance_is_pattern_avoidance(e in inversion_sequence(8), t in triple()) {
        prop_assert_eq!(avoids_triple(&e, &t), avoids_all(&e, &triple_to_pattern_set(&t)));
    }

    #[test]
    fn avoidance_is_antitone_in_the_set(e in inversion_sequence(8), s in pattern_set(), t in pattern_set()) {
        let union: PatternSet = s.iter().chain(t.iter()).cloned().collect();
        if avoids_all(&e, &union) {
            prop_assert!(avoids_all(&e, &s) && avoids_all(&e, &t));
        }
        prop_assert_eq!(avoids_all(&e, &union), avoids_all(&e, &s) && avoids_all(&e, &t));
    }

    #[test]
    fn containment_survives_extension(e in inversion_sequence(7), s in pattern_set(), next in any::<u32>()) {
        let mut v = e.values().to_vec();
        v.push(next % (v.len() as u32 + 1));
        let longer = InversionSequence::new(v).unwrap();
        if !avoids_all(&e, &s) {
            prop_assert!(!avoids_all(&longer, &s));
        }
    }

    #[test]
    fn sqrt_squares_back(s in unit_series(12)) {
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }

    #[test]
    fn inverse_multiplies_to_one(s in unit_series(10)) {
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&s * &inv, TruncatedSeries::one(10));
    }

    #[test]
    fn kernel_root_has_zero_residual(order in 1usize..30, c in proptest::sample::select(vec![ClassId::C1420, ClassId::C663A])) {
        let k = kernel_for(c, order).unwrap();
        prop_assert!(k.eval(&k.kernel_root().unwrap()).is_zero());
    }

    #[test]
    fn dense_and_census_engines_agree(c in class(), n in 0usize..14) {
        prop_assert_eq!(count_class(c, n), count_class_by_census(c, n));
    }

    #[test]
    fn fits_are_deterministic(c in proptest::sample::select(ClassId::ALGEBRAIC.to_vec()), terms in 40usize..90) {
        let seq = count_class(c, terms);
        let a = estimate_growth(&seq, GrowthModel::Algebraic).unwrap();
        let b = estimate_growth(&seq, GrowthModel::Algebraic).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn lehmer_code_is_valid(perm in (1usize..9).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())) {
        let e = InversionSequence::from_permutation(&perm).unwrap();
        prop_assert_eq!(e.len(), perm.len());
        prop_assert!(e.values().iter().enumerate().all(|(i, &a)| (a as usize) < i + 1));
    }
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn lehmer_code_is_a_bijection() {
    for n in 0..=7u32 {
        let images: BTreeSet<Vec<u32>> = permutations(n)
            .iter()
            .map(|p| InversionSequence::from_permutation(p).unwrap().into_inner())
            .collect();
        let factorial: usize = (1..=n as usize).product();
        assert_eq!(images.len(), factorial, "n = {n}");
    }
}
