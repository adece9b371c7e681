//! Multiplier spectra of rational maps on the projective line, computed
//! exactly over finite fields, rational function fields GF(q)(t) and Q.
//!
//! The crate covers periodic-point multipliers and the symmetric-function
//! maps built from them, dynatomic polynomials, critical orbits, conjugacy
//! over finite fields, Newton polygons at non-archimedean places, tameness
//! of reductions, one-parameter families (including wildly ramified
//! isospectral families and Lattès maps) and obstructions for purely
//! iterative root-finding algorithms.

pub mod algebra;
pub mod cli;
pub mod dynamics;
pub mod families;
pub mod valuation;
pub mod error;
pub mod limits;
pub mod rootfind;

pub use error::{Error, Result};
pub use limits::Limits;
