//! Ideals of minors of generalized diagonal (GD) matrices.
//!
//! A GD matrix is a generic matrix with a ladder of zeros in its bottom-left
//! corner and another in its top-right. This crate computes the
//! Stanley-Reisner complex of the initial ideal of its `r × r` minors and
//! the invariants that follow from it: facets (maximal `(r-1)`-stairs),
//! height, purity, Cohen-Macaulayness, vertex-decomposability certificates
//! and the multiplicity via nonintersecting lattice paths. Closed forms are
//! paired with brute-force oracles so each can check the other.

pub mod cell;
pub mod cli;
pub mod cmcheck;
pub mod complex;
pub mod error;
pub mod gdmatrix;
pub mod groebner;
pub mod linalg;
pub mod multiplicity;
pub mod stairs;

pub use cell::{lex_compare, succ_compare, Cell, CellSet};
pub use complex::{Complex, MinorsProblem};
pub use error::{Error, Result};
pub use gdmatrix::{make_gd, make_triangles, GDMatrix, MatrixSpec};

/// Serializes a big integer as its decimal string.
pub(crate) fn serde_bigint<S: serde::Serializer>(
    v: &num_bigint::BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
