//! Exact computation of Atiyah–Patodi–Singer rho invariants of lens spaces
//! and Dehn-surgered 3-manifolds, Levine–Tristram and multivariable link
//! signatures, and Maslov triple indices of Lagrangian subspaces.
//!
//! Every quantity is computed in exact arithmetic: rationals, Gaussian
//! rationals, and cyclotomic fields for signatures at arbitrary roots of
//! unity. Floating point only ever appears in display helpers.

#![allow(clippy::needless_range_loop)]

pub mod cyclotomic;
pub mod exactnum;
pub mod field;
pub mod hermitian;
pub mod io;
pub mod lens;
pub mod link;
pub mod par;
pub mod signatures;
pub mod surgery;
pub mod verify;

pub use exactnum::{Rational, RationalAngle};
pub use hermitian::{GaussianRational, HermitianMatrix, Lagrangian, SymplecticSpace};
pub use lens::LensSpace;
pub use link::{ColoredLink, ColoredRep, Framing, PlumbingGraph};
pub use signatures::{CComplexData, SeifertMatrix, SignatureSource};
pub use surgery::SurgeryReport;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p and q must be coprime (got p={p}, q={q})")]
    NotCoprime { p: i64, q: i64 },
    #[error("character θ={theta} is not a {order}-th root of unity")]
    CharacterOrder { theta: String, order: i64 },
    #[error("the character must be nontrivial (ω ≠ 1){0}")]
    TrivialCharacter(String),
    #[error("matrix is not Hermitian: entry ({i},{j}) is not the conjugate of ({j},{i})")]
    NotHermitian { i: usize, j: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("symplectic form must be skew-Hermitian and nondegenerate: {0}")]
    NotSymplectic(String),
    #[error("subspace is not Lagrangian: {0}")]
    NotLagrangian(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("linking matrix is not symmetric at ({i},{j})")]
    NonSymmetricLinking { i: usize, j: usize },
    #[error("framing coefficient {index} must be an integer")]
    NonIntegerFraming { index: usize },
    #[error("C-complex data inconsistent: {0}")]
    InconsistentCComplex(String),
    #[error("no signature table entry for ω = ({0})")]
    MissingTableEntry(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("integer out of supported range: {0}")]
    Overflow(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
