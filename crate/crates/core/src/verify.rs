//! The full battery of cross-checks behind `invseq verify-all`.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::analysis::{check_root_against, classify_triples, estimate_growth, reference_growth, GrowthModel};
use crate::combinat::{multiplicity_m, multiplicity_w, words_r1r2, words_r1r3};
use crate::error::Result;
use crate::gentree::{count_class, ClassId};
use crate::oracle::{Oracle, WordConstraint};
use crate::sequence::{PatternSet, RelationTriple};
use crate::series::{
    closed_form_733_by_conjugates, expand_closed_form, iterate_catalytic_system, kernel_for, minimal_polynomial,
    TruncatedSeries,
};

/// Known initial terms of four counting sequences.
pub const KNOWN_PREFIXES: [(ClassId, &[u64]); 4] = [
    (ClassId::C1016, &[1, 1, 2, 6, 21, 76, 277, 1016, 3756, 13998]),
    (ClassId::C663A, &[1, 1, 2, 5, 15, 50, 178, 663, 2552]),
    (ClassId::C1833A, &[1, 1, 2, 6, 22, 90, 396, 1833, 8801, 43441, 219092]),
    (ClassId::C733, &[1, 1, 2, 5, 15, 51, 188, 733, 2979, 12495, 53708]),
];

/// Classes whose catalytic system is iterated.
pub const ITERATED: [ClassId; 5] = [ClassId::C1176, ClassId::C1253, ClassId::C1016, ClassId::C663A, ClassId::C1420];

/// Non-algebraic classes with a simple growth rate.
pub const SIMPLE_GROWTH: [ClassId; 4] = [ClassId::C214, ClassId::C830, ClassId::C1509, ClassId::C1953A];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.to_string(), passed, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyParams {
    /// Longest length compared against exhaustive search.
    pub oracle_n: usize,
    pub series_order: usize,
    pub minpoly_order: usize,
    pub word_max: usize,
    pub algebraic_terms: usize,
    pub other_terms: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        Self { oracle_n: 9, series_order: 50, minpoly_order: 60, word_max: 9, algebraic_terms: 200, other_terms: 300 }
    }
}

fn u(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

pub fn oracle_equivalence(oracle: &Oracle, n: usize) -> Result<Check> {
    let bad = ClassId::ALL
        .par_iter()
        .map(|&c| Ok((c, oracle.counting_sequence(n, &c.pattern_set())? == count_class(c, n))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(c, _)| c.to_string())
        .collect::<Vec<_>>();
    Ok(Check::new("gentree vs exhaustive", bad.is_empty(), format!("14 classes, n <= {n}; mismatches: {bad:?}")))
}

/// Pattern sets with the same counts as a class, not equal to its own set.
pub const WILF_PARTNERS: [(&str, ClassId); 3] = [
    ("010,100,101,120,201,210", ClassId::C663A),
    ("100,120,201,210", ClassId::C1833A),
    ("100,120,210", ClassId::C1953A),
];

pub fn wilf_partners(oracle: &Oracle, n: usize) -> Result<Check> {
    let mut bad = Vec::new();
    for (p, c) in WILF_PARTNERS {
        if oracle.counting_sequence(n, &PatternSet::parse(p)?)? != count_class(c, n) {
            bad.push(format!("{c}~({p})"));
        }
    }
    Ok(Check::new("Wilf partners", bad.is_empty(), format!("n <= {n}; mismatches: {bad:?}")))
}

pub fn seventh_terms() -> Check {
    let bad: Vec<String> =
        ClassId::ALL.iter().filter(|c| count_class(**c, 7)[7] != BigUint::from(c.seventh_term())).map(|c| c.to_string()).collect();
    Check::new("I_7 equals index", bad.is_empty(), format!("mismatches: {bad:?}"))
}

pub fn known_prefixes() -> Result<Check> {
    let mut bad = Vec::new();
    for (c, p) in KNOWN_PREFIXES {
        let n = p.len() - 1;
        let expect = u(p);
        if count_class(c, n) != expect || expand_closed_form(c, n)?.to_counts()? != expect {
            bad.push(c.to_string());
        }
    }
    Ok(Check::new("known prefixes", bad.is_empty(), format!("mismatches: {bad:?}")))
}

pub fn three_way(order: usize) -> Result<Check> {
    let mut bad = Vec::new();
    for c in ClassId::ALGEBRAIC {
        let tree = count_class(c, order);
        let mut ok = expand_closed_form(c, order)?.to_counts()? == tree;
        if ITERATED.contains(&c) {
            ok &= iterate_catalytic_system(c, order)?.to_counts()? == tree;
        }
        if c == ClassId::C733 {
            ok &= closed_form_733_by_conjugates(order)?.to_counts()? == tree;
        }
        if !ok {
            bad.push(c.to_string());
        }
    }
    Ok(Check::new("closed form = gentree = iteration", bad.is_empty(), format!("order {order}; mismatches: {bad:?}")))
}

pub fn minimal_polynomials(order: usize) -> Result<Check> {
    let expect = [
        (ClassId::C663A, 3),
        (ClassId::C1420, 3),
        (ClassId::C733, 4),
        (ClassId::C1833A, 6),
        (ClassId::C1176, 2),
        (ClassId::C1253, 2),
        (ClassId::C1016, 2),
    ];
    let mut bad = Vec::new();
    for (c, d) in expect {
        let p = minimal_polynomial(c)?;
        let f = TruncatedSeries::from_counts(&count_class(c, order));
        if p.degree() != d || !p.annihilates(&f) {
            bad.push(c.to_string());
        }
    }
    Ok(Check::new("minimal polynomials", bad.is_empty(), format!("mod z^{}; failures: {bad:?}", order + 1)))
}

pub fn kernel_roots(order: usize) -> Result<Check> {
    let x1420 = kernel_for(ClassId::C1420, order)?.kernel_root()?;
    let mut ok = x1420.truncate(4) == TruncatedSeries::from_ints(&[1, 2, 5, 17, 64], 4);
    for c in [ClassId::C1420, ClassId::C663A] {
        let k = kernel_for(c, order)?;
        ok &= k.eval(&k.kernel_root()?).is_zero();
    }
    Ok(Check::new("kernel roots", ok, format!("X for 1420 and 663A, mod z^{}", order + 1)))
}

pub fn word_counts(oracle: &Oracle, max: usize) -> Result<Check> {
    let pairs: Vec<(usize, usize)> = (1..=max).flat_map(|k| (1..=k).map(move |b| (k, b))).collect();
    let bad = pairs
        .par_iter()
        .map(|&(k, b)| {
            let a = oracle.count_words(&WordConstraint::r1_r2(k, b as u32))? == words_r1r2(k as u64, b as u64);
            let d = oracle.count_words(&WordConstraint::r1_r3(k, b as u32))? == words_r1r3(k as u64, b as u64);
            Ok(((k, b), a && d))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(kb, _)| kb)
        .collect::<Vec<_>>();
    let mut ident = true;
    for l in 0..=12u64 {
        for b in 0..=l {
            let m: BigUint = (b..=l).map(|k| words_r1r2(k, b)).sum();
            let prev = if l == 0 { BigUint::ZERO } else { words_r1r3(l - 1, b) };
            ident &= multiplicity_m(l, b) == m && multiplicity_w(l, b) == prev + words_r1r3(l, b);
        }
    }
    Ok(Check::new(
        "word counts",
        bad.is_empty() && ident,
        format!("1 <= b <= k <= {max}; mismatches: {bad:?}; multiplicity identities hold: {ident}"),
    ))
}

pub fn classification(oracle: &Oracle, n: usize) -> Result<Check> {
    let c = classify_triples(n, oracle)?;
    let pair = |a: &str, b: &str| c.same_wilf_group(&a.parse::<RelationTriple>().unwrap(), &b.parse().unwrap());
    let pairs = pair("-,!=,>=", "!=,-,>=") && pair("-,!=,>", "!=,-,>") && pair("-,>,>", "!=,>=,>");
    let ok = c.triple_count() == 343 && c.equivalence_count() == 98 && c.wilf_count() == 63 && pairs;
    Ok(Check::new(
        "classification",
        ok,
        format!(
            "{} triples, {} pattern sets, {} equivalence cells, {} Wilf cells at n = {n}, partners shared: {pairs}",
            c.triple_count(),
            c.pattern_set_count(),
            c.equivalence_count(),
            c.wilf_count()
        ),
    ))
}

pub fn growth_rates(algebraic_terms: usize, other_terms: usize) -> Result<Check> {
    let mut worst = Vec::new();
    let mut ok = true;
    for c in ClassId::ALGEBRAIC {
        let e = estimate_growth(&count_class(c, algebraic_terms), GrowthModel::Algebraic)?;
        let r = check_root_against(c, e.mu, 1e-3).expect("algebraic class");
        ok &= r.passed();
        worst.push(format!("{c}:{:.1e}", r.relative_error));
    }
    for c in SIMPLE_GROWTH {
        let e = estimate_growth(&count_class(c, other_terms), GrowthModel::Algebraic)?;
        let mu = reference_growth(c).expect("simple growth rate");
        let rel = ((e.mu - mu) / mu).abs();
        ok &= rel < 1e-2;
        worst.push(format!("{c}:{rel:.1e}"));
    }
    Ok(Check::new("growth rates", ok, format!("relative errors {}", worst.join(" "))))
}

/// Runs every check.
pub fn run_all(oracle: &Oracle, p: VerifyParams) -> Result<Vec<Check>> {
    let n = p.oracle_n.min(oracle.bound);
    Ok(vec![
        oracle_equivalence(oracle, n)?,
        wilf_partners(oracle, n)?,
        seventh_terms(),
        known_prefixes()?,
        three_way(p.series_order)?,
        minimal_polynomials(p.minpoly_order)?,
        kernel_roots(p.series_order)?,
        word_counts(oracle, p.word_max.min(oracle.bound))?,
        classification(oracle, n)?,
        growth_rates(p.algebraic_terms, p.other_terms)?,
    ])
}
