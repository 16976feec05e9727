//! Exact connectivity functions and polymatroids on small ground sets.
//!
//! A [`SetFunction`] is a dense table with one exact rational value per
//! subset of a labeled ground set. On top of it the crate provides axiom
//! checks with concrete counterexamples ([`check`]), the polymatroid
//! transforms ([`ops`]: dual, `k`-dual, compactification, minors, the
//! polymatroid induced by a connectivity function), graph and matroid
//! builders ([`constructors`]), a canonical text format ([`io`]) and
//! batteries of identities that every input must satisfy ([`identities`]).

pub mod check;
pub mod classify;
pub mod constructors;
pub mod error;
pub mod ground;
pub mod identities;
pub mod io;
pub mod ops;
pub mod rat;
pub mod setfn;

pub use check::{CheckReport, Witness};
pub use classify::{classify, Classification};
pub use error::{Error, Result};
pub use ground::{GroundSet, Subset};
pub use rat::Rat;
pub use setfn::SetFunction;
