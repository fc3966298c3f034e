//! Exact computation of stable invariants for finite-dimensional quiver
//! algebras.
//!
//! The pipeline: parse or generate a quiver [`presentation`], complete its
//! relations into a confluent [`rewrite`] system, construct the algebra with
//! structure constants ([`algebra`]), then compute invariants — Cartan data,
//! commutator and center subspaces, Külshammer towers, symmetrizing bilinear
//! forms with orthogonal quotients, radical/socle structure, structural
//! predicates, and Hochschild cohomology dimensions ([`invariants`]). The
//! [`catalog`] ships the built-in algebra families and [`report`]/[`verify`]
//! assemble invariant reports, compare algebras, and check the reference
//! tables.
//!
//! All arithmetic is exact: prime fields GF(p), extensions GF(p^k) with an
//! explicit modulus, or arbitrary-precision rationals.

pub mod algebra;
pub mod catalog;
pub mod field;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod prng;
pub mod quiver;
pub mod report;
pub mod rewrite;
pub mod verify;

pub use algebra::{Element, FdAlgebra};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace};
pub use presentation::Presentation;
pub use rewrite::RewritingSystem;
