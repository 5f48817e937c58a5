use thiserror::Error;

use crate::gentree::ClassId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Entry at 1-based `position` violates `0 <= a_i < i`.
    #[error("entry {value} at position {position} is not in [0, {position})")]
    NotInversionSequence { position: usize, value: i64 },

    #[error("input is not a permutation of 1..={0}")]
    NotPermutation(usize),

    #[error("word {0:?} is not a reduced pattern")]
    NotPattern(Vec<u32>),

    #[error("exhaustive search for size {requested} exceeds the bound {bound}")]
    OracleBound { requested: usize, bound: usize },

    #[error("word constraint is invalid: {0}")]
    WordConstraint(String),

    #[error("series division needs an invertible constant term")]
    NonInvertibleSeries,

    #[error("series square root needs constant term 1")]
    SqrtConstantTerm,

    #[error("cannot shift series down by {shift}: coefficient of z^{degree} is nonzero")]
    ValuationShift { shift: usize, degree: usize },

    #[error("kernel has no simple root at z = 0 to lift from")]
    NoSimpleRoot,

    #[error("divided difference by (1 - x) left a nonzero remainder at z^{0}")]
    InexactDivision(usize),

    #[error("class {0} has no closed-form generating function")]
    NoClosedForm(ClassId),

    #[error("class {0} has no catalytic system to iterate")]
    NoCatalyticSystem(ClassId),

    #[error("class {0} has no minimal polynomial on record")]
    NoMinimalPolynomial(ClassId),

    #[error("expansion has a non-integer or negative coefficient at z^{0}")]
    NotCountingSeries(usize),

    #[error("unknown class selector {0:?}")]
    UnknownClass(String),

    #[error("write failed: {message}")]
    Output { kind: std::io::ErrorKind, message: String },

    #[error("cannot parse {0:?}")]
    Parse(String),

    #[error("growth fit needs at least {needed} terms, got {got}")]
    TooFewTerms { needed: usize, got: usize },

    #[error("growth fit needs positive terms; term {0} is zero")]
    NonPositiveTerm(usize),
}
