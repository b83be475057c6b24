use alloc::string::String;
use alloc::vec::Vec;

use crate::degree::Multidegree;
use crate::format_face;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors reported by the library. Row and column numbers are 1-based, as in
/// the input file format.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("entry ({row}, {col}) is not homogeneous: |e_{col}| - |g_{row}| has a negative coordinate")]
    Homogeneity { row: usize, col: usize },
    #[error("entry ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize },
    #[error("entry ({row}, {col}) is given twice")]
    DuplicateEntry { row: usize, col: usize },
    #[error("a morphism needs at least one source and one target generator")]
    EmptyModule,
    #[error("{0} is not a prime below 2^32")]
    InvalidPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("scalars or matrices from different fields")]
    FieldMismatch,
    #[error("multidegree coordinate overflow")]
    DegreeOverflow,
    #[error("multidegree {0} is not in the LCM-lattice")]
    DegreeNotInLattice(Multidegree),
    #[error("{columns} columns exceed the subset enumeration cap of {cap}")]
    TooManyColumns { columns: usize, cap: usize },
    #[error("subspace does not contain the image of s")]
    NotASuperspace,
    #[error("image of the generators over face {} does not lie in the system", format_face(.face))]
    Restriction { face: Vec<usize> },
    #[error("differentials do not compose to zero at position {position}")]
    NotAComplex { position: usize },
    #[error("malformed complex: {0}")]
    MalformedComplex(String),
    #[error("differential entry at level {level}, ({row}, {col}) has a negative shift")]
    NegativeShift { level: usize, row: usize, col: usize },
    #[error("source ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("column correspondence is not a permutation of 1..={0}")]
    InvalidCorrespondence(usize),
    #[error("relabeling map has no value at {0}")]
    MissingKey(Multidegree),
    #[error("relabeling map lists {0} twice with different values")]
    DuplicateKey(Multidegree),
    #[error("relabeled source generator {column} does not match the target morphism")]
    QeIncompatible { column: usize },
}
