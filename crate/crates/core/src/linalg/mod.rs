//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision; no floating point.

mod lattice;
mod matrix;
mod vector;

pub use lattice::{
    canonical_lattice_basis, express_in_basis, hermite_normal_form, integer_kernel_basis,
    is_unimodular_extension, rank, rank_of, solve_rational, LatticeCoordinates,
};
pub use matrix::IntMatrix;
pub use vector::{IntVector, RatVector};
