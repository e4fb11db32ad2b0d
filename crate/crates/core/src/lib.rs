//! Exact computations around the matching number of triple systems.
//!
//! The crate is `no_std` (it needs `alloc`) and does no IO. Everything is
//! a pure function of its inputs: hypergraph primitives ([`hypergraph`]),
//! exact maximum matchings ([`matching`]), shifting ([`shifting`]), the
//! closed-form extremal quantities ([`extremal`]), exhaustive extremal
//! search at small scale ([`search`]), the trace weighting identities
//! ([`weights`]) and the exhaustive 11-vertex board check ([`board`]).
//!
//! Vertices are 1-based and ordered by their integer value throughout.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

mod bits;
mod error;

pub mod board;
pub mod extremal;
pub mod hypergraph;
pub mod matching;
pub mod search;
pub mod shifting;
pub mod weights;

pub use error::{Error, Result};
pub use hypergraph::{SmallSet, TraceFamily, Triple, TripleSystem, Vertex};
pub use matching::{Matching, MixedFamily};
pub use weights::ExactRational;
