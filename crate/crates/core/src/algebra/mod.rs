//! Exact arithmetic: finite fields, GF(q)(t), Q, univariate polynomials,
//! root enumeration over extension towers and small linear algebra.

pub mod ffpoly;
pub mod field;
pub mod finite;
pub mod linalg;
pub mod mobius;
pub mod poly;
pub mod ratfn;
pub mod roots;
pub mod text;

pub use field::{ArithOp, Field, FieldElement, FieldKind, Scalar};
pub use finite::FiniteField;
pub use mobius::mobius_mu;
pub use poly::Poly;
pub use ratfn::Ratfn;
pub use roots::{extension, roots_enum, Embedding, Root};
