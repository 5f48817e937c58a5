//! Generating trees for the fourteen classes, run as label-census dynamic
//! programmes over arbitrary-precision counts.
//!
//! Two engines live here. [`step`] applies a [`SuccessionRule`] label by label,
//! exactly as the rule is written, and is the reference used by
//! [`label_census`]. [`count_class`] uses per-class dense tables with prefix
//! sums, which is what makes a few hundred terms cheap. Tests hold the two
//! engines equal.

mod dense;
mod rules;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequence::{triple_to_pattern_set, PatternSet, RelationTriple};

pub use dense::count_class;

/// The fourteen classes this crate has succession rules for, named by their
/// catalogue index (which equals `I_7`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    C214,
    C247,
    C663A,
    C733,
    C759,
    C830,
    C1016,
    C1176,
    C1253,
    C1420,
    C1509,
    C1833A,
    C1953A,
    C2106,
}

impl ClassId {
    pub const ALL: [ClassId; 14] = [
        ClassId::C214,
        ClassId::C247,
        ClassId::C663A,
        ClassId::C733,
        ClassId::C759,
        ClassId::C830,
        ClassId::C1016,
        ClassId::C1176,
        ClassId::C1253,
        ClassId::C1420,
        ClassId::C1509,
        ClassId::C1833A,
        ClassId::C1953A,
        ClassId::C2106,
    ];

    /// Classes with an algebraic generating function.
    pub const ALGEBRAIC: [ClassId; 7] = [
        ClassId::C663A,
        ClassId::C733,
        ClassId::C1016,
        ClassId::C1176,
        ClassId::C1253,
        ClassId::C1420,
        ClassId::C1833A,
    ];

    pub fn index(self) -> &'static str {
        match self {
            ClassId::C214 => "214",
            ClassId::C247 => "247",
            ClassId::C663A => "663A",
            ClassId::C733 => "733",
            ClassId::C759 => "759",
            ClassId::C830 => "830",
            ClassId::C1016 => "1016",
            ClassId::C1176 => "1176",
            ClassId::C1253 => "1253",
            ClassId::C1420 => "1420",
            ClassId::C1509 => "1509",
            ClassId::C1833A => "1833A",
            ClassId::C1953A => "1953A",
            ClassId::C2106 => "2106",
        }
    }

    /// `I_7` for the class.
    pub fn seventh_term(self) -> u64 {
        self.index().trim_end_matches('A').parse().expect("numeric index")
    }

    pub fn triple(self) -> RelationTriple {
        let s = match self {
            ClassId::C214 => "-,>=,>=",
            ClassId::C247 => "<=,-,>=",
            ClassId::C663A => "-,!=,>=",
            ClassId::C733 => "!=,!=,>=",
            ClassId::C759 => "<=,!=,>=",
            ClassId::C830 => "!=,>,>=",
            ClassId::C1016 => ">,-,!=",
            ClassId::C1176 => ">,<=,!=",
            ClassId::C1253 => ">,!=,!=",
            ClassId::C1420 => "-,-,>",
            ClassId::C1509 => "-,>=,>",
            ClassId::C1833A => "-,!=,>",
            ClassId::C1953A => "-,>,>",
            ClassId::C2106 => ">,<=,>=",
        };
        s.parse().expect("static triple")
    }

    pub fn pattern_set(self) -> PatternSet {
        triple_to_pattern_set(&self.triple())
    }

    pub fn is_algebraic(self) -> bool {
        Self::ALGEBRAIC.contains(&self)
    }

    pub fn rule(self) -> SuccessionRule {
        rules::rule(self)
    }

    /// Looks up the class whose pattern set equals `set`, if any.
    pub fn for_pattern_set(set: &PatternSet) -> Option<ClassId> {
        Self::ALL.into_iter().find(|c| c.pattern_set() == *set)
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.index())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    /// Accepts `"1176"`, `"C1176"`, `"663a"`, or a relation triple such as
    /// `">,<=,!="` naming one of the fourteen classes.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let idx = t.trim_start_matches(['C', 'c']).to_ascii_uppercase();
        if let Some(c) = Self::ALL.into_iter().find(|c| c.index() == idx) {
            return Ok(c);
        }
        if let Ok(triple) = t.parse::<RelationTriple>() {
            let set = triple_to_pattern_set(&triple);
            if let Some(c) = Self::for_pattern_set(&set) {
                return Ok(c);
            }
        }
        Err(Error::UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    A,
    B,
    C,
    D,
    E,
    CDagger,
    DDagger,
    EDagger,
    EStar,
    S,
    T,
    P,
    Q,
    /// Untagged `(p, s)` / `(p, c)` labels of the left-grown classes.
    Plain,
}

impl Tag {
    fn suffix(self) -> &'static str {
        match self {
            Tag::A => "_a",
            Tag::B => "_b",
            Tag::C => "_c",
            Tag::D => "_d",
            Tag::E => "_e",
            Tag::CDagger => "_c†",
            Tag::DDagger => "_d†",
            Tag::EDagger => "_e†",
            Tag::EStar => "_e*",
            Tag::S => "_s",
            Tag::T => "_t",
            Tag::P => "_p",
            Tag::Q => "_q",
            Tag::Plain => "",
        }
    }
}

/// A generating-tree label: a tag plus up to three small parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub tag: Tag,
    arity: u8,
    params: [u32; 3],
}

impl Label {
    pub fn new(tag: Tag, params: &[u32]) -> Self {
        assert!(params.len() <= 3, "labels carry at most three parameters");
        let mut p = [0; 3];
        p[..params.len()].copy_from_slice(params);
        Self { tag, arity: params.len() as u8, params: p }
    }

    pub fn params(&self) -> &[u32] {
        &self.params[..self.arity as usize]
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "({}){}", parts.join(","), self.tag.suffix())
    }
}

pub type Children = Vec<(Label, BigUint)>;

/// A class's root label, its label-rewriting map, and which labels stand
/// for genuine members of the class (the rest are phantoms).
#[derive(Clone, Copy)]
pub struct SuccessionRule {
    pub class: ClassId,
    pub root: Label,
    pub expand: fn(&Label, usize) -> Children,
    pub counted: fn(&Label) -> bool,
}

impl fmt::Debug for SuccessionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuccessionRule").field("class", &self.class).field("root", &self.root).finish()
    }
}

/// Label multiplicities at one depth of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelState {
    pub depth: usize,
    pub census: BTreeMap<Label, BigUint>,
}

impl LevelState {
    pub fn root(rule: &SuccessionRule) -> Self {
        Self { depth: 0, census: BTreeMap::from([(rule.root, BigUint::one())]) }
    }

    pub fn empty(depth: usize) -> Self {
        Self { depth, census: BTreeMap::new() }
    }

    /// Total over counted labels.
    pub fn counted_total(&self, rule: &SuccessionRule) -> BigUint {
        self.census.iter().filter(|(l, _)| (rule.counted)(l)).map(|(_, c)| c).sum()
    }

    /// Total over all labels, phantoms included.
    pub fn total(&self) -> BigUint {
        self.census.values().sum()
    }
}

/// One level of the tree: every child count is the sum over parents of
/// parent count times multiplicity.
pub fn step(rule: &SuccessionRule, state: &LevelState) -> LevelState {
    let mut next = BTreeMap::new();
    for (label, count) in &state.census {
        for (child, mult) in (rule.expand)(label, state.depth) {
            debug_assert!(!mult.is_zero(), "{label} -> {child} with zero multiplicity");
            let slot = next.entry(child).or_insert_with(BigUint::zero);
            if mult.is_one() {
                *slot += count;
            } else {
                *slot += count * mult;
            }
        }
    }
    LevelState { depth: state.depth + 1, census: next }
}

/// The full census at depth `n`, phantom labels included.
pub fn label_census(class: ClassId, n: usize) -> LevelState {
    let rule = class.rule();
    let mut state = LevelState::root(&rule);
    for _ in 0..n {
        state = step(&rule, &state);
    }
    state
}

/// `I_0 .. I_{n_max}` through the label-by-label engine.
pub fn count_class_by_census(class: ClassId, n_max: usize) -> Vec<BigUint> {
    let rule = class.rule();
    let mut state = LevelState::root(&rule);
    let mut out = vec![state.counted_total(&rule)];
    for _ in 0..n_max {
        state = step(&rule, &state);
        out.push(state.counted_total(&rule));
    }
    out
}
