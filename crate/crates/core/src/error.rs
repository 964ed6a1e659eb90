//! Crate-wide error type.
//!
//! Enumeration caps (`SizeCapExceeded`, `GeneratorCapExceeded`) are ordinary,
//! reportable outcomes — sweep drivers record them as skipped work items —
//! while the remaining variants indicate invalid input or broken preconditions.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("loop edge at vertex {0} not allowed in a simple graph")]
    LoopEdge(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not Cameron-Walker: {0}")]
    NotCameronWalker(String),

    #[error("{what} enumeration cap exceeded (cap {cap})")]
    SizeCapExceeded { what: &'static str, cap: usize },

    #[error("generator cap exceeded (cap {cap} monomials)")]
    GeneratorCapExceeded { cap: usize },

    #[error("bounds exceeded: {0}")]
    BoundsExceeded(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("ambient variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("the zero ideal has no minimal free resolution data here")]
    ZeroIdeal,

    #[error("field characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
