//! Exact combinatorics of simply-laced root systems and their quantum
//! shuffle / dual canonical basis shadow: convex orders from reduced words
//! of the longest Weyl element, dual PBW and global bases with
//! unitriangular transition data, pair invariants, Dynkin quiver Q-data
//! with knitted AR quivers, and denominator-based delta computations for
//! untwisted affine types A and D.
//!
//! Everything is computed over `Z[q, q^-1]` with arbitrary-precision
//! integers; there is no floating point anywhere in this crate.

// indexed loops over parallel matrix rows read better than zipped iterators here
#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod gbasis;
pub mod invariants;
pub mod laurent;
pub mod liecore;
pub mod pbw;
pub mod qdata;
pub mod shuffle;
pub mod verify;

pub use laurent::LaurentPoly;
pub use liecore::{CartanDatum, CartanSeries, ConvexSeq, ReducedWord, RootSystem, RootVec};
pub use shuffle::{ShuffleElt, Word};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported feature: {0}")]
    Unsupported(String),

    #[error("range error: {0}")]
    Range(String),

    /// A computation reached a state the pinned conventions rule out.
    /// Callers must treat this as fatal.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
