//! Exhaustive enumeration. Deliberately simple: every other counting route in
//! the crate is checked against these functions.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sequence::{reduce, InversionSequence, Matcher, Pattern, PatternSet};

/// Largest length searched exhaustively unless overridden.
pub const DEFAULT_BOUND: usize = 10;

/// Environment variable consulted by [`Oracle::from_env`].
pub const BOUND_ENV: &str = "INVSEQ_ORACLE_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { bound: DEFAULT_BOUND }
    }
}

impl Oracle {
    pub fn with_bound(bound: usize) -> Self {
        Self { bound }
    }

    /// Reads the bound from `INVSEQ_ORACLE_BOUND`, falling back to the default.
    pub fn from_env() -> Self {
        let bound = std::env::var(BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BOUND);
        Self { bound }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.bound {
            return Err(Error::OracleBound { requested: n, bound: self.bound });
        }
        Ok(())
    }

    /// All avoiders of length `n`, in lexicographic order.
    pub fn enumerate_avoiders(&self, n: usize, set: &PatternSet) -> Result<Vec<InversionSequence>> {
        self.check(n)?;
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(n);
        let mut visit = |w: &[u32]| out.push(InversionSequence::new(w.to_vec()).expect("valid"));
        walk_filtered(n, set, &mut word, &mut visit);
        Ok(out)
    }

    /// `|I_n(S)|` by depth-first search with prefix pruning. The top-level
    /// branches (choices of `a_2, a_3`) are searched in parallel.
    pub fn count_avoiders(&self, n: usize, set: &PatternSet) -> Result<BigUint> {
        self.check(n)?;
        if n < 3 {
            return Ok(BigUint::from(count_from(&mut vec![0; 0], n, &set.matcher())));
        }
        let matcher = set.matcher();
        let prefixes: Vec<[u32; 3]> = (0..=1).flat_map(|b| (0..=2).map(move |c| [0, b, c])).collect();
        let total: u64 = prefixes
            .par_iter()
            .map(|p| {
                let mut word = Vec::with_capacity(n);
                for &v in p {
                    word.push(v);
                    if matcher.hit_at_last(&word) {
                        return 0;
                    }
                }
                count_from(&mut word, n, &matcher)
            })
            .sum();
        Ok(BigUint::from(total))
    }

    /// `I_0 .. I_{n_max}`.
    pub fn counting_sequence(&self, n_max: usize, set: &PatternSet) -> Result<Vec<BigUint>> {
        self.check(n_max)?;
        (0..=n_max).map(|n| self.count_avoiders(n, set)).collect()
    }

    /// Same count without pruning: enumerates all `n!` inversion sequences and
    /// tests each in full. Only for cross-checking the pruned search.
    pub fn count_avoiders_unpruned(&self, n: usize, set: &PatternSet) -> Result<BigUint> {
        self.check(n)?;
        let mut word = vec![0u32; n];
        let mut count = 0u64;
        loop {
            if set.avoided_by(&word) {
                count += 1;
            }
            // Odometer increment with digit j ranging over 0..=j.
            let mut j = n;
            loop {
                if j == 0 {
                    return Ok(BigUint::from(count));
                }
                j -= 1;
                if (word[j] as usize) < j {
                    word[j] += 1;
                    break;
                }
                word[j] = 0;
            }
        }
    }

    pub fn count_words(&self, c: &WordConstraint) -> Result<BigUint> {
        c.validate()?;
        self.check(c.length)?;
        let forbidden: Vec<Pattern> = c.forbidden.iter().map(|p| reduce(p.digits())).collect();
        let set = PatternSet::new(forbidden);
        let matcher = set.matcher();
        let mut word = Vec::with_capacity(c.length);
        let mut used = vec![0usize; c.max_letter as usize + 1];
        Ok(BigUint::from(count_words_from(c, &matcher, &mut word, &mut used, 0)))
    }
}

fn walk_filtered(n: usize, set: &PatternSet, word: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    let matcher = set.matcher();
    fn rec(n: usize, m: &Matcher, word: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if word.len() == n {
            visit(word);
            return;
        }
        for v in 0..=word.len() as u32 {
            word.push(v);
            if !m.hit_at_last(word) {
                rec(n, m, word, visit);
            }
            word.pop();
        }
    }
    rec(n, &matcher, word, visit);
}

fn count_from(word: &mut Vec<u32>, n: usize, m: &Matcher) -> u64 {
    if word.len() == n {
        return 1;
    }
    let mut total = 0;
    for v in 0..=word.len() as u32 {
        word.push(v);
        if !m.hit_at_last(word) {
            total += count_from(word, n, m);
        }
        word.pop();
    }
    total
}

/// Words of length `length` over `1..=max_letter` avoiding classical
/// patterns, optionally required to use every letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordConstraint {
    pub length: usize,
    pub max_letter: u32,
    pub forbidden: Vec<Pattern>,
    pub surjective: bool,
}

impl WordConstraint {
    /// Commitment words of the first kind: surjective, avoiding 212, 112, 213.
    pub fn r1_r2(length: usize, max_letter: u32) -> Self {
        Self {
            length,
            max_letter,
            forbidden: ["101", "001", "102"].iter().map(|s| s.parse().unwrap()).collect(),
            surjective: true,
        }
    }

    /// Commitment words of the second kind: additionally avoiding 111.
    pub fn r1_r3(length: usize, max_letter: u32) -> Self {
        let mut c = Self::r1_r2(length, max_letter);
        c.forbidden.push("000".parse().unwrap());
        c
    }

    fn validate(&self) -> Result<()> {
        if self.max_letter == 0 {
            return Err(Error::WordConstraint("alphabet must be nonempty".into()));
        }
        if self.surjective && self.max_letter as usize > self.length {
            return Err(Error::WordConstraint(format!(
                "a surjective word of length {} cannot use {} letters",
                self.length, self.max_letter
            )));
        }
        Ok(())
    }
}

fn count_words_from(
    c: &WordConstraint,
    m: &Matcher,
    word: &mut Vec<u32>,
    used: &mut [usize],
    distinct: usize,
) -> u64 {
    if word.len() == c.length {
        return u64::from(!c.surjective || distinct == c.max_letter as usize);
    }
    if c.surjective && c.length - word.len() < c.max_letter as usize - distinct {
        return 0;
    }
    let mut total = 0;
    for v in 1..=c.max_letter {
        word.push(v);
        if !m.hit_at_last(word) {
            let fresh = used[v as usize] == 0;
            used[v as usize] += 1;
            total += count_words_from(c, m, word, used, distinct + usize::from(fresh));
            used[v as usize] -= 1;
        }
        word.pop();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        PatternSet::parse(s).unwrap()
    }

    fn count(n: usize, s: &str) -> u64 {
        Oracle::default().count_avoiders(n, &set(s)).unwrap().try_into().unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let o = Oracle::default();
        let empty = o.enumerate_avoiders(0, &set("012")).unwrap();
        assert_eq!(empty, vec![InversionSequence::empty()]);
        assert_eq!(o.enumerate_avoiders(5, &set("001")).unwrap().len(), 16);
        let all3: Vec<String> =
            o.enumerate_avoiders(3, &PatternSet::default()).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(all3, ["000", "001", "002", "010", "011", "012"]);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count(7, "100,102,201"), 1176);
        assert_eq!(count(7, "010,101,110,120,201,210"), 663);
        assert_eq!(count(6, "110,120,201,210"), 396);
        assert_eq!(count(0, "000"), 1);
    }

    #[test]
    fn pattern_001_gives_powers_of_two() {
        for n in 1..=8 {
            assert_eq!(count(n, "001"), 1 << (n - 1));
        }
    }

    #[test]
    fn bound_is_enforced() {
        let o = Oracle::with_bound(4);
        assert_eq!(
            o.count_avoiders(5, &set("000")),
            Err(Error::OracleBound { requested: 5, bound: 4 })
        );
        assert!(o.enumerate_avoiders(5, &set("000")).is_err());
    }

    #[test]
    fn pruned_matches_unpruned() {
        let o = Oracle::default();
        for s in ["000", "010,101", "120,201,210", "0101", ""] {
            for n in 0..=7 {
                assert_eq!(
                    o.count_avoiders(n, &set(s)).unwrap(),
                    o.count_avoiders_unpruned(n, &set(s)).unwrap(),
                    "{s} at {n}"
                );
            }
        }
    }

    #[test]
    fn word_examples() {
        let o = Oracle::default();
        let c = |w: WordConstraint| -> u64 { o.count_words(&w).unwrap().try_into().unwrap() };
        assert_eq!(c(WordConstraint::r1_r2(3, 3)), 5);
        assert_eq!(c(WordConstraint::r1_r2(2, 1)), 1);
        assert_eq!(c(WordConstraint::r1_r3(3, 2)), 4);
        let free = WordConstraint { length: 4, max_letter: 3, forbidden: vec![], surjective: false };
        assert_eq!(c(free), 81);
        assert!(o.count_words(&WordConstraint::r1_r2(2, 3)).is_err());
    }
}
