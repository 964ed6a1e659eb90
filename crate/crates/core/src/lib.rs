//! Exact machinery for studying edge ideals of finite simple graphs:
//!
//! - [`graph`]: simple graphs, matchings, induced matchings, minimal vertex
//!   covers, pendant structure;
//! - [`cw`]: Cameron-Walker graphs — recognition, structural decomposition,
//!   construction from parameters, and bounded family enumeration;
//! - [`ideal`]: monomial arithmetic, edge ideals, ordinary and symbolic
//!   powers, intersections, colons;
//! - [`resolution`]: multigraded Betti numbers and Castelnuovo-Mumford
//!   regularity over an exact coefficient field, with an independent
//!   cross-check route via polarization and Stanley-Reisner homology;
//! - [`io`]: plain-text and JSON formats for graphs, ideals, and Betti
//!   tables.
//!
//! All computation is exact (integer/rational or prime-field arithmetic) and
//! deterministic; exponential enumerations are guarded by explicit caps that
//! surface as structured errors rather than silent truncation.

#![forbid(unsafe_code)]

pub mod cw;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod resolution;

pub use error::{Error, Result};
pub use graph::Graph;
pub use ideal::{Monomial, MonomialIdeal};
pub use resolution::{BettiTable, CoefficientField, SimplicialComplex};
