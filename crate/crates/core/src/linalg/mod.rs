//! Dense exact linear algebra over the rationals.
//!
//! The scalar type is [`Rat`] (arbitrary-precision rationals kept in reduced
//! form with positive denominator), matrices are row-major [`RationalMatrix`]
//! grids, and maps act on column vectors: the composite `g∘f` is the matrix
//! product `G·F`. Subspaces are canonicalized by reduced row echelon form so
//! that equality of [`Subspace`] values is plain structural equality.

mod matrix;
mod subspace;

pub use matrix::{rat, LinearMap, Rat, RationalMatrix};
pub use subspace::{projector_onto, Subspace};

use thiserror::Error;

/// Errors raised by shape-sensitive operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// Two operands cannot be combined because their shapes disagree.
    #[error("dimension mismatch in {context}: {lhs} vs {rhs}")]
    DimensionMismatch {
        context: &'static str,
        lhs: String,
        rhs: String,
    },

    /// The entry buffer does not match the declared shape.
    #[error("expected {rows}x{cols} = {} entries, got {found}", rows * cols)]
    BadShape {
        rows: usize,
        cols: usize,
        found: usize,
    },

    /// A basis row has the wrong length for the ambient space.
    #[error("basis row of length {found} in ambient dimension {ambient}")]
    BadAmbient { ambient: usize, found: usize },

    /// The two subspaces do not decompose the ambient space as a direct sum.
    #[error("subspaces do not form a direct sum of the ambient space")]
    NotADirectSum,
}

pub(crate) fn dim_mismatch(
    context: &'static str,
    lhs: impl ToString,
    rhs: impl ToString,
) -> LinalgError {
    LinalgError::DimensionMismatch {
        context,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}
