//! The 34 triples of relations whose counting sequences were missing from
//! the OEIS when first tabulated, with their pattern sets and status.

use crate::gentree::ClassId;
use crate::sequence::{PatternSet, RelationTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub triple: &'static str,
    pub patterns: &'static str,
    pub oeis: &'static str,
    /// Catalogue index; the numeric part is `I_7`.
    pub index: &'static str,
    /// Degree of the minimal polynomial when the generating function is algebraic.
    pub algebraic_degree: Option<u32>,
}

impl CatalogEntry {
    pub fn triple(&self) -> RelationTriple {
        self.triple.parse().expect("static triple")
    }

    pub fn pattern_set(&self) -> PatternSet {
        PatternSet::parse(self.patterns).expect("static pattern set")
    }

    pub fn seventh_term(&self) -> u64 {
        self.index.trim_end_matches(['A', 'B']).parse().expect("numeric index")
    }

    /// The class with a succession rule in this crate, if there is one.
    pub fn class(&self) -> Option<ClassId> {
        self.index.parse().ok()
    }
}

macro_rules! entry {
    ($t:expr, $p:expr, $o:expr, $i:expr) => {
        entry!($t, $p, $o, $i, None)
    };
    ($t:expr, $p:expr, $o:expr, $i:expr, $d:expr) => {
        CatalogEntry { triple: $t, patterns: $p, oeis: $o, index: $i, algebraic_degree: $d }
    };
}

pub const CATALOG: [CatalogEntry; 34] = [
    entry!("-,>=,>=", "000,010,100,110,120,210", "A279544", "214"),
    entry!("<=,-,>=", "000,010,110,120", "A279551", "247"),
    entry!("-,>=,=", "000,010", "A279552", "345"),
    entry!("-,!=,>=", "010,101,110,120,201,210", "A279553", "663A", Some(3)),
    entry!("!=,-,>=", "010,100,101,120,201,210", "A279553", "663B", Some(3)),
    entry!("!=,!=,>=", "010,101,120,201,210", "A279554", "733", Some(4)),
    entry!("-,>,>=", "010,110,120,210", "A279555", "746A"),
    entry!("!=,>=,>=", "010,100,120,210", "A279555", "746B"),
    entry!("<=,!=,>=", "010,110,120", "A279556", "759"),
    entry!("<=,>,!=", "021,110,120", "A279557", "805"),
    entry!("!=,>,>=", "010,120,210", "A279558", "830"),
    entry!("<,-,>=", "010,120", "A279559", "845"),
    entry!("-,>,=", "010", "A263779", "979"),
    entry!(">,-,!=", "100,102,201,210", "A279560", "1016", Some(2)),
    entry!(">,!=,-", "101,102,201,210", "A279561", "1079A"),
    entry!("<,>,!=", "021,120", "A279561", "1079B"),
    entry!(">,<=,!=", "100,102,201", "A279562", "1176", Some(2)),
    entry!(">,!=,!=", "102,201,210", "A279563", "1253", Some(2)),
    entry!(">=,=,-", "000,100", "A279564", "1267"),
    entry!("-,-,>", "100,110,120,201,210", "A279565", "1420", Some(3)),
    entry!(">,<,!=", "102,201", "A279566", "1465"),
    entry!("-,>=,>", "100,110,120,210", "A279567", "1509"),
    entry!("-,!=,>", "110,120,201,210", "A279568", "1833A", Some(6)),
    entry!("!=,-,>", "100,120,201,210", "A279568", "1833B", Some(6)),
    entry!("-,>,>", "110,120,210", "A279569", "1953A"),
    entry!("!=,>=,>", "100,120,210", "A279569", "1953B"),
    entry!("<=,>,>", "110,120", "A279570", "2091"),
    entry!(">,<=,>=", "100,101,201", "A279571", "2106"),
    entry!("!=,!=,>", "120,201,210", "A279572", "2468"),
    entry!("!=,>,>", "120,210", "A279573", "2625"),
    entry!("<,-,>", "120", "A263778", "2803"),
    entry!(">,=,-", "100", "A263780", "3399"),
    entry!("-,<,>", "201", "A263777", "4306A"),
    entry!(">,>,-", "210", "A263777", "4306B"),
];

pub fn lookup(index: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.index.eq_ignore_ascii_case(index.trim()))
}
