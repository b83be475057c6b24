//! Exact construction and verification of Taylor and Scarf complexes for
//! multigraded morphisms of free modules over a polynomial ring.
//!
//! A morphism `φ: E → G` is described by the multidegrees of the basis
//! elements of `E` and `G` together with its scalar coefficient matrix; every
//! entry is forced to be `c · x^(|e_j| − |g_i|)`. From that data this crate
//! builds the Buchsbaum-Rim type linear algebra (divided and exterior powers,
//! the `σ` differentials, the splice map), the full and Scarf systems of
//! subspaces, the homogenized complexes, and checks exactness strand by
//! strand over the LCM-lattice.
//!
//! Everything is computed over an exact field: the rationals or `GF(p)`.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod brt;
pub mod complex;
pub mod degree;
mod error;
pub mod lattice;
pub mod linalg;
pub mod morphism;
pub mod multilinear;
pub mod relabel;
pub mod verify;

pub use brt::{build_complex, full_system, is_brt_system, scarf, scarf_system, taylor, BrtSystem};
pub use complex::{Generator, GradedComplex, VectorComplex};
pub use degree::{Multidegree, SignedDegree};
pub use error::{Error, Result};
pub use lattice::{FaceData, LcmLattice};
pub use linalg::{Field, Matrix, Scalar, Subspace};
pub use morphism::{CoeffData, Morphism, RawEntry, RawMorphism};
pub use relabel::RelabelMap;
pub use verify::{ExactnessReport, HomologyFailure};

/// A set of column indices, 0-based and strictly increasing.
pub type IndexSet = alloc::vec::Vec<usize>;

/// Formats a 0-based index set the way faces are usually written, `{1,2,3}`.
pub fn format_face(face: &[usize]) -> alloc::string::String {
    use alloc::string::ToString;
    let inner: alloc::vec::Vec<_> = face.iter().map(|i| (i + 1).to_string()).collect();
    alloc::format!("{{{}}}", inner.join(","))
}
