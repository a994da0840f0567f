//! Exact computations with finite-dimensional bound quiver algebras:
//! representations, homological invariants, one-point and reflection
//! constructions, tilting, and add-approximations.

#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::len_without_is_empty)]

pub mod algebra;
pub mod approximation;
pub mod constructions;
pub mod decompose;
pub mod error;
pub mod format;
pub mod homological;
pub mod linalg;
mod modular;
pub mod module;
pub mod quiver;
pub mod sca;
pub mod scalar;
pub mod tilting;

pub use algebra::BoundQuiverAlgebra;
pub use error::{Error, Result};
pub use linalg::Mat;
pub use module::{Morphism, Representation};
pub use quiver::{Arrow, Path, Quiver, Relation, Vertex};
pub use scalar::{FieldSpec, Scalar};
