//! Exact realization of the phase and q-boson lattice models in the algebra
//! of symmetric functions.
//!
//! The crate is layered bottom-up:
//!
//! - [`ring`]: exact scalars (rationals, polynomials in `t`, Laurent
//!   polynomials in `u`).
//! - [`linalg`]: sparse matrices over those scalars and small dense helpers.
//! - [`partitions`]: Young diagrams, occupation vectors, horizontal strips
//!   and the Hall–Littlewood coefficient functions.
//! - [`symfunc`]: Schur and Hall–Littlewood bases, Pieri multiplication,
//!   Gram matrices, adjoints and evaluation at finitely many variables.
//! - [`fock`]: the multi-site Fock space, L-matrices, the monodromy matrix
//!   and the R-matrix.
//! - [`verify`]: finite, exact checks of every identity relating the two
//!   sides, each producing a [`verify::CheckReport`].
//! - [`boxcount`]: plane partitions in a box, counted three independent ways.

pub mod boxcount;
pub mod fock;
pub mod linalg;
pub mod partitions;
pub mod ring;
pub mod sample;
pub mod symfunc;
pub mod verify;

pub use partitions::{OccupationVector, Partition};
pub use ring::{Coefficient, Laurent, Poly, Rational, Ring, RingElem};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("type error: cannot combine {left} with {right}")]
    TypeMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
