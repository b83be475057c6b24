//! Exact linear algebra: ranks, kernels, column spaces and annihilators.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{primitive_vector, Field, Scalar};
pub use subspace::Subspace;
