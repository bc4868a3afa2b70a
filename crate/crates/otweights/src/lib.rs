//! Exact commutative-algebra toolkit for linear codes: weight hierarchies,
//! circuit presentations of the ideal of the dual arrangement, Groebner
//! bases, graded Betti numbers, and a verification pipeline that checks the
//! identities tying these invariants together.
//!
//! Everything is computed over a prime field with exact arithmetic; there
//! are no tolerances anywhere. See the `verify` module for the check
//! pipeline and the README for the CLI.

pub mod betti;
pub mod codefile;
pub mod codes;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod matrix;
pub mod matroid;
pub mod orlik_terao;
pub mod poly;
pub mod subsets;
pub mod verify;

pub use error::{Error, Result};
