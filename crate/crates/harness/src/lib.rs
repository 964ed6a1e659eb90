//! Verification harness for the regularity formula on symbolic powers of
//! edge ideals of Cameron-Walker graphs.
//!
//! The library half of the `cwreg` binary: report data model and CSV/JSON
//! rendering ([`report`]), an append-only regularity cache ([`cache`]),
//! reproducible random monomial ideals for oracle cross-checks
//! ([`randideal`]), and the verification drivers themselves ([`verify`]).

pub mod cache;
pub mod randideal;
pub mod report;
pub mod verify;
