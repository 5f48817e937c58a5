//! Inversion sequences, word patterns and triples of binary relations.
//!
//! An inversion sequence of length `n` is a word `a_1 ... a_n` with
//! `0 <= a_i < i`. Containment of a pattern is order-isomorphism of some
//! (not necessarily consecutive) subsequence, with equalities preserved.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A validated inversion sequence. Stored 0-indexed; the constraint is the
/// 1-based `0 <= a_i < i`, i.e. `values[j] <= j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct InversionSequence(Vec<u32>);

impl InversionSequence {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Checks `0 <= a_i < i` for every 1-based position `i`.
    pub fn validate(values: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(values.len());
        for (j, &v) in values.iter().enumerate() {
            if v < 0 || v > j as i64 {
                return Err(Error::NotInversionSequence { position: j + 1, value: v });
            }
            out.push(v as u32);
        }
        Ok(Self(out))
    }

    pub fn new(values: Vec<u32>) -> Result<Self> {
        if let Some((j, &v)) = values.iter().enumerate().find(|&(j, &v)| v as usize > j) {
            return Err(Error::NotInversionSequence { position: j + 1, value: v as i64 });
        }
        Ok(Self(values))
    }

    /// Inversion-count bijection from permutations of `1..=n`: `a_i` is the
    /// number of earlier entries larger than `pi_i`.
    pub fn from_permutation(perm: &[u32]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &v in perm {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation(n));
            }
            seen[v] = true;
        }
        let values = perm
            .iter()
            .enumerate()
            .map(|(i, &pi)| perm[..i].iter().filter(|&&pj| pj > pi).count() as u32)
            .collect();
        Ok(Self(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[u32]) -> fmt::Result {
    if w.iter().all(|&d| d < 10) {
        for d in w {
            write!(f, "{d}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = w.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A reduced word: it uses every value from 0 up to its maximum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    pub fn new(digits: Vec<u32>) -> Result<Self> {
        if reduce(&digits).0 != digits {
            return Err(Error::NotPattern(digits));
        }
        Ok(Self(digits))
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All patterns of the given length, in lexicographic order.
    pub fn all_of_length(len: usize) -> Vec<Pattern> {
        let mut out = Vec::new();
        let mut word = vec![0u32; len];
        fn rec(pos: usize, max: u32, word: &mut Vec<u32>, out: &mut Vec<Pattern>) {
            if pos == word.len() {
                out.push(Pattern(word.clone()));
                return;
            }
            // A reduced word is a restricted-growth word up to relabelling of
            // the value order; enumerate all words over 0..len and keep reduced ones.
            for v in 0..=max {
                word[pos] = v;
                rec(pos + 1, max, word, out);
            }
        }
        if len == 0 {
            return vec![Pattern(Vec::new())];
        }
        rec(0, len as u32 - 1, &mut word, &mut out);
        out.retain(|p| reduce(&p.0) == *p);
        out
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts a digit string such as `"102"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits: Option<Vec<u32>> = s.chars().map(|c| c.to_digit(10)).collect();
        match digits {
            Some(d) => Pattern::new(d),
            None => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Relabels a word so its smallest entries become 0, the next smallest 1, etc.
pub fn reduce(word: &[u32]) -> Pattern {
    let distinct: BTreeSet<u32> = word.iter().copied().collect();
    let rank: Vec<u32> = distinct.into_iter().collect();
    Pattern(
        word.iter()
            .map(|v| rank.binary_search(v).expect("value present") as u32)
            .collect(),
    )
}

/// True iff some subsequence of `word` reduces to `pattern`.
pub fn word_contains(word: &[u32], pattern: &Pattern) -> bool {
    let p = pattern.digits();
    if p.is_empty() {
        return true;
    }
    let mut chosen = Vec::with_capacity(p.len());
    search(word, p, 0, &mut chosen, None)
}

/// True iff some occurrence of `pattern` in `word` uses the last position.
/// Used for prefix-incremental avoidance checks.
pub fn word_contains_ending_at_last(word: &[u32], pattern: &Pattern) -> bool {
    let p = pattern.digits();
    let Some(&last) = word.last() else {
        return false;
    };
    if p.is_empty() {
        return true;
    }
    let m = p.len();
    let body = &word[..word.len() - 1];
    let mut chosen = Vec::with_capacity(m);
    search(body, &p[..m - 1], 0, &mut chosen, Some((last, p[m - 1])))
}

fn search(
    word: &[u32],
    p: &[u32],
    start: usize,
    chosen: &mut Vec<u32>,
    anchor: Option<(u32, u32)>,
) -> bool {
    let t = chosen.len();
    if t == p.len() {
        return true;
    }
    // Leave room for the remaining pattern letters.
    let remaining = p.len() - t;
    if word.len() < start + remaining {
        return false;
    }
    for pos in start..=word.len() - remaining {
        let v = word[pos];
        let consistent = chosen
            .iter()
            .zip(p)
            .all(|(&cv, &pv)| cv.cmp(&v) == pv.cmp(&p[t]))
            && anchor.is_none_or(|(av, ap)| v.cmp(&av) == p[t].cmp(&ap));
        if consistent {
            chosen.push(v);
            if search(word, p, pos + 1, chosen, anchor) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn contains_pattern(seq: &InversionSequence, pattern: &Pattern) -> bool {
    word_contains(seq.values(), pattern)
}

/// A finite set of patterns, avoided jointly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PatternSet {
    patterns: BTreeSet<Pattern>,
}

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Pattern>>(patterns: I) -> Self {
        Self { patterns: patterns.into_iter().collect() }
    }

    /// Parses a comma- or space-separated list such as `"100,102,201"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut set = BTreeSet::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace() || c == '(' || c == ')') {
            if !tok.is_empty() {
                set.insert(tok.parse::<Pattern>()?);
            }
        }
        Ok(Self { patterns: set })
    }

    pub fn iter(&self) -> impl Iterator<Item = &Pattern> {
        self.patterns.iter()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        self.patterns.contains(p)
    }

    pub fn avoided_by(&self, word: &[u32]) -> bool {
        self.patterns.iter().all(|p| !word_contains(word, p))
    }

    pub fn matcher(&self) -> Matcher {
        Matcher::new(self)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromIterator<Pattern> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Pattern>>(iter: I) -> Self {
        Self::new(iter)
    }
}

fn cmp_code(a: u32, b: u32) -> usize {
    match a.cmp(&b) {
        Ordering::Less => 0,
        Ordering::Equal => 1,
        Ordering::Greater => 2,
    }
}

fn triple_code(x: u32, y: u32, z: u32) -> usize {
    cmp_code(x, y) * 9 + cmp_code(y, z) * 3 + cmp_code(x, z)
}

/// Incremental avoidance checker: answers whether appending the last letter
/// of a word created an occurrence of any pattern in the set. Length-3
/// patterns go through a 27-entry comparison table.
#[derive(Debug, Clone)]
pub struct Matcher {
    triple_mask: u32,
    others: Vec<Pattern>,
}

impl Matcher {
    pub fn new(set: &PatternSet) -> Self {
        let mut triple_mask = 0u32;
        let mut others = Vec::new();
        for p in set.iter() {
            if let [a, b, c] = *p.digits() {
                triple_mask |= 1 << triple_code(a, b, c);
            } else {
                others.push(p.clone());
            }
        }
        Self { triple_mask, others }
    }

    pub fn hit_at_last(&self, word: &[u32]) -> bool {
        let n = word.len();
        if n == 0 {
            return self.others.iter().any(|p| p.is_empty());
        }
        if self.triple_mask != 0 && n >= 3 {
            let z = word[n - 1];
            for j in 1..n - 1 {
                let y = word[j];
                let yz = cmp_code(y, z) * 3;
                for &x in &word[..j] {
                    let code = cmp_code(x, y) * 9 + yz + cmp_code(x, z);
                    if self.triple_mask >> code & 1 == 1 {
                        return true;
                    }
                }
            }
        }
        self.others.iter().any(|p| word_contains_ending_at_last(word, p))
    }
}

pub fn avoids_all(seq: &InversionSequence, set: &PatternSet) -> bool {
    set.avoided_by(seq.values())
}

/// A binary relation on integers; `Any` is the unrestricted relation `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
    Any,
}

impl Relation {
    pub const ALL: [Relation; 7] = [
        Relation::Lt,
        Relation::Gt,
        Relation::Le,
        Relation::Ge,
        Relation::Eq,
        Relation::Ne,
        Relation::Any,
    ];

    pub fn holds(self, x: u32, y: u32) -> bool {
        match self {
            Relation::Lt => x < y,
            Relation::Gt => x > y,
            Relation::Le => x <= y,
            Relation::Ge => x >= y,
            Relation::Eq => x == y,
            Relation::Ne => x != y,
            Relation::Any => true,
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Gt => ">",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Any => "-",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "<" => Relation::Lt,
            ">" => Relation::Gt,
            "<=" | "≤" => Relation::Le,
            ">=" | "≥" => Relation::Ge,
            "=" | "==" => Relation::Eq,
            "!=" | "≠" | "<>" => Relation::Ne,
            "-" | "_" => Relation::Any,
            other => return Err(Error::Parse(other.to_string())),
        })
    }
}

/// `(rho1, rho2, rho3)`: forbids `i < j < k` with `a_i rho1 a_j`,
/// `a_j rho2 a_k` and `a_i rho3 a_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationTriple {
    pub rho1: Relation,
    pub rho2: Relation,
    pub rho3: Relation,
}

impl RelationTriple {
    pub const fn new(rho1: Relation, rho2: Relation, rho3: Relation) -> Self {
        Self { rho1, rho2, rho3 }
    }

    /// All 343 triples.
    pub fn all() -> impl Iterator<Item = RelationTriple> {
        Relation::ALL.into_iter().flat_map(|a| {
            Relation::ALL
                .into_iter()
                .flat_map(move |b| Relation::ALL.into_iter().map(move |c| Self::new(a, b, c)))
        })
    }

    pub fn matches(&self, x: u32, y: u32, z: u32) -> bool {
        self.rho1.holds(x, y) && self.rho2.holds(y, z) && self.rho3.holds(x, z)
    }
}

impl fmt::Display for RelationTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.rho1, self.rho2, self.rho3)
    }
}

impl FromStr for RelationTriple {
    type Err = Error;

    /// Parses `">,<=,!="`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(Self::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?))
    }
}

pub fn avoids_triple(seq: &InversionSequence, t: &RelationTriple) -> bool {
    let a = seq.values();
    let n = a.len();
    for k in 2..n {
        for j in 1..k {
            if !t.rho2.holds(a[j], a[k]) {
                continue;
            }
            for i in 0..j {
                if t.rho1.holds(a[i], a[j]) && t.rho3.holds(a[i], a[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// The length-3 patterns whose letters satisfy the triple.
pub fn triple_to_pattern_set(t: &RelationTriple) -> PatternSet {
    Pattern::all_of_length(3)
        .into_iter()
        .filter(|p| {
            let d = p.digits();
            t.matches(d[0], d[1], d[2])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> InversionSequence {
        let v: Vec<i64> = s.chars().map(|c| c.to_digit(10).unwrap() as i64).collect();
        InversionSequence::validate(&v).unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn triple(s: &str) -> RelationTriple {
        s.parse().unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(InversionSequence::validate(&[]).unwrap().is_empty());
        assert_eq!(seq("002140348").len(), 9);
        assert_eq!(
            InversionSequence::validate(&[1]),
            Err(Error::NotInversionSequence { position: 1, value: 1 })
        );
        assert_eq!(
            InversionSequence::validate(&[0, 0, -1]),
            Err(Error::NotInversionSequence { position: 3, value: -1 })
        );
    }

    #[test]
    fn phi_examples() {
        let phi = |p: &[u32]| InversionSequence::from_permutation(p).unwrap().into_inner();
        assert_eq!(phi(&[1, 2, 3, 4]), vec![0, 0, 0, 0]);
        assert_eq!(phi(&[2, 1]), vec![0, 1]);
        assert_eq!(phi(&[3, 1, 2]), vec![0, 1, 1]);
        assert_eq!(InversionSequence::from_permutation(&[1, 1]), Err(Error::NotPermutation(2)));
        assert_eq!(InversionSequence::from_permutation(&[0, 1]), Err(Error::NotPermutation(2)));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[1, 0, 3, 5, 5, 7, 3]).digits(), &[1, 0, 2, 3, 3, 4, 2]);
        assert_eq!(reduce(&[0, 0, 0]).digits(), &[0, 0, 0]);
        assert_eq!(reduce(&[4, 4, 9]).digits(), &[0, 0, 1]);
        assert!(reduce(&[]).is_empty());
    }

    #[test]
    fn thirteen_length_three_patterns() {
        let all: Vec<String> = Pattern::all_of_length(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(
            all,
            ["000", "001", "010", "011", "012", "021", "100", "101", "102", "110", "120", "201", "210"]
        );
    }

    #[test]
    fn containment_examples() {
        let a = seq("002140348");
        assert!(contains_pattern(&a, &pat("011")));
        assert!(!contains_pattern(&a, &pat("110")));
        assert!(!contains_pattern(&InversionSequence::empty(), &pat("0")));
        assert!(contains_pattern(&InversionSequence::empty(), &Pattern::new(vec![]).unwrap()));
    }

    #[test]
    fn avoids_all_examples() {
        let a = seq("002140348");
        assert!(avoids_all(&a, &PatternSet::parse("110").unwrap()));
        assert!(avoids_all(&a, &PatternSet::default()));
        assert!(!avoids_all(&a, &PatternSet::parse("011,110").unwrap()));
    }

    #[test]
    fn avoids_triple_examples() {
        assert!(!avoids_triple(&seq("002140348"), &triple("-,-,-")));
        assert!(avoids_triple(&seq("00000"), &triple("<,>,<")));
        assert!(avoids_triple(&seq("010"), &triple(">=,>=,>=")));
        assert!(!avoids_triple(&seq("000"), &triple(">=,>=,>=")));
    }

    #[test]
    fn triple_translation_examples() {
        let show = |t: &str| triple_to_pattern_set(&triple(t)).to_string();
        assert_eq!(show("<,>,<"), "(021)");
        assert_eq!(show(">=,>=,>="), "(000,100,110,210)");
        assert_eq!(show(">,<=,!="), "(100,102,201)");
    }

    #[test]
    fn matcher_agrees_with_direct_search() {
        let set = PatternSet::parse("010,0012,10").unwrap();
        let m = set.matcher();
        let words: [&[u32]; 5] = [&[0, 1, 0], &[0, 0, 1, 2], &[0, 0, 1], &[0, 1, 2, 1], &[2, 0, 1, 1, 2]];
        for w in words {
            let direct = set
                .iter()
                .any(|p| word_contains(w, p) && !word_contains(&w[..w.len() - 1], p));
            assert_eq!(m.hit_at_last(w), direct, "{w:?}");
        }
    }

    #[test]
    fn parse_errors() {
        assert!("021x".parse::<Pattern>().is_err());
        assert!("12".parse::<Pattern>().is_err());
        assert!("<,>".parse::<RelationTriple>().is_err());
        assert!("<,?,>".parse::<RelationTriple>().is_err());
    }
}
