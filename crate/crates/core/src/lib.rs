//! Pattern avoidance in inversion sequences: exhaustive enumeration,
//! generating trees, exact generating functions and growth-rate fits.

pub mod analysis;
pub mod catalog;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod gentree;
pub mod oracle;
pub mod sequence;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
