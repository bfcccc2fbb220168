//! Exact root systems, cascades of strongly orthogonal roots, and orbit
//! computations for `b = h + n` and `n`.
//!
//! The crate builds a complex simple Lie algebra from its Cartan matrix with
//! integer Chevalley structure constants, extracts the cascade of strongly
//! orthogonal roots, and computes isotropy algebras and orbit dimensions of
//! the coadjoint actions of `b` and `n` by exact kernel computations. No
//! floating point is used anywhere.
//!
//! Module map:
//! - [`exactla`]: rational matrices, fraction-free elimination, subspaces.
//! - [`rootsys`]: Cartan data, root generation, Weyl group elements.
//! - [`cascade`]: the cascade tree, its brute-force oracle, `w0` factorization.
//! - [`chevalley`]: structure constants, invariant form, projections.
//! - [`coadjoint`]: action matrices, isotropy algebras, verifiers, classification.

pub mod cascade;
pub mod chevalley;
pub mod coadjoint;
pub mod exactla;
pub mod rootsys;

pub use cascade::{CascadeNode, CascadeSet, CascadeTree};
pub use chevalley::{AlgebraElement, Decomposition, LieAlgebra, Part};
pub use coadjoint::{
    ActionKind, ClassificationRow, CoadPoint, IsotropyResult, RMinusCrossPoint, TheoremReport,
};
pub use exactla::{RatMatrix, Rational, Subspace};
pub use rootsys::{Family, Root, RootSystem, SimpleType, WeylElement};

/// Errors raised by the library.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no simple Lie algebra of type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i32>),
    #[error("roots must be distinct and not opposite")]
    DegenerateRootPair,
    #[error("root subset is not closed under negation")]
    NotSymmetric,
    #[error("rank {rank} exceeds the brute-force search budget (limit {limit})")]
    BudgetExceeded { rank: usize, limit: usize },
    #[error("point is not supported in {0}")]
    SupportViolation(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("structure constants inconsistent: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
