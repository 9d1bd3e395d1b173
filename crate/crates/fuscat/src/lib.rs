//! Exact-arithmetic workbench for fusion rings, Tambara-Yamagami braidings,
//! premodular/modular data, and their verification corpus.
//!
//! The numeric substrate is [`cyclo::Cyc`], an exact cyclotomic number; all
//! structure constants, dimensions, twists and S-matrix entries are held
//! exactly, so every check in the library is an equality of canonical forms
//! rather than a floating-point comparison.

pub mod abelian;
pub mod covers;
pub mod cyclo;
pub mod extraspecial;
pub mod fusion;
pub mod modular;
pub mod products;
pub mod report;
pub mod tambara;

pub use cyclo::{Cyc, Rat};
pub use fusion::{FusionRing, Grading, Subring};
pub use modular::Premodular;
pub use tambara::{Bicharacter, BraidingData};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    BadConductor,
    DivisionByZero,
    Parse(String),
    /// A Frobenius-Perron dimension fell outside the a + b*sqrt2 lattice.
    DimRecognition(String),
    /// A structural precondition failed (invalid ring data, wrong shape, ...).
    Invalid(String),
    NotInCatalog(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadConductor => write!(f, "conductor must be a positive integer"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::DimRecognition(msg) => write!(f, "dimension recognition failed: {msg}"),
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::NotInCatalog(name) => write!(f, "group not in catalog: {name}"),
        }
    }
}

impl std::error::Error for Error {}
