//! Exact-arithmetic toolkit for regularity beyond invertibility.
//!
//! Everything here runs over the rationals with exact arithmetic, so every
//! law is decided by structural equality rather than tolerance:
//!
//! - [`linalg`]: dense rational matrices, canonical (RREF) subspaces,
//!   complements, and projectors;
//! - [`geninv`]: inner, outer, and reflexive generalized inverses, the
//!   projector construction, and the image/kernel decomposition facts;
//! - [`chain`]: star-chain n-regularity `f∘f*∘f**∘…∘f = f` with higher
//!   projectors and the 4-to-2 reduction;
//! - [`category`]: finitely presented categories represented by matrices,
//!   n-regular cocycles, obstruction structures, obstruction degree, and the
//!   retract-based lift construction;
//! - [`monoidal`]: tensor and dual cocycles, the evaluation pairing, and
//!   functor / natural-transformation checks;
//! - [`algebra`]: obstructed algebras, coalgebras, almost bialgebras,
//!   convolution, weak antipode laws, and module/comodule regularity;
//! - [`tqft`]: a combinatorial cobordism model with gluing, opposites, and
//!   evaluation into linear maps, whose cyclic regularity delegates to
//!   [`category`].

pub mod algebra;
pub mod category;
pub mod chain;
pub mod geninv;
pub mod linalg;
pub mod monoidal;
pub mod tqft;

pub use linalg::{LinearMap, Rat, RationalMatrix, Subspace};
