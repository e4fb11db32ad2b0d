use alloc::string::String;
use core::fmt;

use crate::hypergraph::{SmallSet, Triple};

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the core crate.
///
/// Variants are grouped by cause: malformed input, violated preconditions
/// of a mathematical operation, and exhausted search budgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index outside `1..=n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// A set that is not strictly increasing, or has the wrong size.
    MalformedSet(String),
    /// A parameter outside the domain of the operation.
    InvalidParameter(String),
    /// Two sets were compared under domination but differ in size.
    SizeMismatch { left: usize, right: usize },
    /// An edge misses the trace window entirely, so the empty set would be a trace.
    EmptyTrace { edge: Triple },
    /// A weight was requested for a set it is not defined on.
    UndefinedWeight { set: SmallSet, reason: &'static str },
    /// The family does not have the matching number the caller asserted.
    MatchingNumber { expected: usize, actual: usize },
    /// A precondition on the family (stability, maximality, ...) fails.
    Precondition(String),
    /// A search would exceed its budget; nothing partial is returned as final.
    BudgetExceeded { budget: &'static str, limit: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} is outside 1..={n}")
            }
            Error::MalformedSet(msg) => write!(f, "malformed set: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "cannot compare sets of sizes {left} and {right}")
            }
            Error::EmptyTrace { edge } => {
                write!(f, "edge {edge} is disjoint from the trace window")
            }
            Error::UndefinedWeight { set, reason } => {
                write!(f, "weight of {set} is undefined: {reason}")
            }
            Error::MatchingNumber { expected, actual } => {
                write!(f, "expected matching number {expected}, found {actual}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::BudgetExceeded { budget, limit } => {
                write!(f, "{budget} budget of {limit} exceeded")
            }
        }
    }
}

impl core::error::Error for Error {}
