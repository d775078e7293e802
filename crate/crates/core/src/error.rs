use alloc::string::String;
use core::fmt;

use crate::field::Field;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    CharacteristicMismatch {
        left: Field,
        right: Field,
    },
    InvalidCharacteristic(u32),
    ExcludedPrime {
        algebra: String,
        p: u32,
    },
    NotInvertibleModP {
        value: Rational,
        p: u32,
    },
    /// An operation that needs characteristic p was given a rational input.
    RequiresPrimeField,
    IndexOutOfRange {
        index: usize,
        dim: usize,
    },
    UnknownVariable(String),
    DuplicateVariable(String),
    Parse(String),
    SizeMismatch {
        expected: usize,
        found: usize,
    },
    ZeroPolynomial,
    NotLinear(String),
    CapExceeded {
        needed: usize,
        cap: usize,
    },
    /// Symmetrization divides by `degree!`, impossible when `p <= degree`.
    CharacteristicObstruction {
        p: u32,
        degree: u32,
    },
    CommutatorNotInSpan(String),
    Corrections(String),
    InvariantConvention(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::CharacteristicMismatch { left, right } => {
                write!(f, "characteristic mismatch: {left} vs {right}")
            }
            AlgebraError::InvalidCharacteristic(p) => {
                write!(f, "characteristic {p} is not 0 or an odd prime")
            }
            AlgebraError::ExcludedPrime { algebra, p } => write!(f, "p={p} excluded for {algebra}"),
            AlgebraError::NotInvertibleModP { value, p } => {
                write!(f, "{value} has no image modulo {p}")
            }
            AlgebraError::RequiresPrimeField => f.write_str("operation requires a prime field"),
            AlgebraError::IndexOutOfRange { index, dim } => {
                write!(f, "basis index {index} out of range for dimension {dim}")
            }
            AlgebraError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            AlgebraError::DuplicateVariable(v) => write!(f, "duplicate variable `{v}`"),
            AlgebraError::Parse(msg) => write!(f, "parse error: {msg}"),
            AlgebraError::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            AlgebraError::ZeroPolynomial => f.write_str("zero polynomial"),
            AlgebraError::NotLinear(s) => write!(f, "bracket value is not linear: {s}"),
            AlgebraError::CapExceeded { needed, cap } => {
                write!(f, "size {needed} exceeds configured cap {cap}")
            }
            AlgebraError::CharacteristicObstruction { p, degree } => {
                write!(f, "cannot symmetrize degree {degree} in characteristic {p}")
            }
            AlgebraError::CommutatorNotInSpan(s) => write!(f, "commutator not in span: {s}"),
            AlgebraError::Corrections(s) => write!(f, "malformed corrections overlay: {s}"),
            AlgebraError::InvariantConvention(s) => write!(f, "no invariant convention: {s}"),
        }
    }
}

impl core::error::Error for AlgebraError {}
