//! One error enum for the whole library.
//!
//! Display strings are stable: the first token is the error name, followed by
//! `key=value` details. The CLI prints them verbatim on its failure path, so
//! changing a message here changes the CLI contract.

use thiserror::Error;

use crate::scalar::Slot;

pub type Result<T> = std::result::Result<T, NError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NError {
    #[error("FieldMismatch")]
    FieldMismatch,
    /// A value violates its field's flavor constraint (real part in a pure
    /// field, I-part in a real field).
    #[error("FlavorViolation")]
    FlavorViolation,
    #[error("NotInvertible slot={}", slot_idx(*.0))]
    NotInvertible(Slot),
    #[error("NotPrime p={0}")]
    NotPrime(u64),
    #[error("ScanTooLarge limit={0}")]
    ScanTooLarge(u64),

    #[error("NonUnitLeadingCoefficient")]
    NonUnitLeadingCoefficient,
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("CharacteristicNotZero p={0}")]
    CharacteristicNotZero(u64),
    #[error("SplitDegenerate deg0={0} deg1={1}")]
    SplitDegenerate(i64, i64),
    #[error("ZeroPolynomial")]
    ZeroPolynomial,
    #[error("UnsupportedField")]
    UnsupportedField,

    #[error("NonSquare rows={0} cols={1}")]
    NonSquare(usize, usize),
    #[error("ShapeMismatch")]
    ShapeMismatch,
    #[error("Singular slot={}", slot_idx(*.0))]
    Singular(Slot),

    #[error("SpaceMismatch")]
    SpaceMismatch,
    #[error("InvalidSpace {0}")]
    InvalidSpace(String),
    #[error("InfiniteDimension")]
    InfiniteDimension,
    #[error("AssignmentMismatch")]
    AssignmentMismatch,
    #[error("UnsupportedRegime")]
    UnsupportedRegime,
    #[error("NotABasis")]
    NotABasis,
    #[error("NotDirect")]
    NotDirect,

    #[error("NotACharacteristicValue")]
    NotACharacteristicValue,
    #[error("DoesNotSplit slot={}", slot_idx(*.0))]
    DoesNotSplit(Slot),
    #[error("UndecidableOverQ")]
    UndecidableOverQ,
    #[error("ZeroVector")]
    ZeroVector,
    #[error("NotInvariant slot={}", slot_idx(*.0))]
    NotInvariant(Slot),

    #[error("NonInvertibleNorm index={0}")]
    NonInvertibleNorm(usize),
    #[error("DependentInput")]
    DependentInput,
    #[error("NotOrthogonal")]
    NotOrthogonal,
    #[error("UnorderedField")]
    UnorderedField,

    #[error("ParseError line={line} col={col} expected {expected}")]
    ParseError {
        line: usize,
        col: usize,
        expected: String,
    },
    #[error("UnknownSuite {0}")]
    UnknownSuite(String),
    #[error("FixtureMismatch {0}")]
    FixtureMismatch(String),
}

fn slot_idx(s: Slot) -> u8 {
    match s {
        Slot::At0 => 0,
        Slot::At1 => 1,
    }
}
