//! Exact Lie-algebraic computations on bounded symmetric domains.
//!
//! The crate provides, entirely over the Gaussian rationals:
//!
//! * matrix realizations of the classical Lie algebras of Hermitian type
//!   with Cartan decomposition, Killing form and the complex-structure
//!   element `H₀` ([`lie`]);
//! * the moment map `Σ` of the isotropy action on Grassmannians of planes
//!   in `𝔭⁺`, with exact criticality and minimality tests and a
//!   floating-point descent flow ([`moment`], [`flow`]);
//! * a data model and checker for totally geodesic embeddings — the
//!   (H₁)/(H₂)/(H₃) conditions, metric ratios and Einstein constants —
//!   plus a catalog of the standard embeddings ([`embed`], [`catalog`]);
//! * the explicit K-invariant hypersurface sections certifying
//!   semistability: determinant-derived sections, the shuffle map, the
//!   quadric discriminant and the annihilator workaround ([`sections`]);
//! * the underlying exact multilinear algebra ([`scalar`], [`matrix`],
//!   [`tensor`]).

pub mod catalog;
pub mod domain;
pub mod embed;
pub mod flow;
pub mod lie;
pub mod matrix;
pub mod moment;
pub mod scalar;
pub mod sections;
pub mod tensor;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported specification: {0}")]
    UnsupportedSpec(String),
    #[error("element is not in the span of the model basis")]
    NotInSpan,
    #[error("degenerate Gram matrix: spanning set is linearly dependent")]
    DegenerateGram,
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("model invariant violated: {0}")]
    InvariantViolation(String),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
