//! Exact certificates for maximal degeneracy points of the GKZ system
//! attached to a complete regular fan.
//!
//! The pipeline runs bottom-up: [`linalg`] supplies exact lattice
//! arithmetic, [`polyhedra`] cones and lower hulls, [`fan`] the
//! combinatorics of the fan (primitive relations, Kähler cone, maximal
//! triangulation), [`groebner`] the binomial toric ideal and indicial
//! polynomials, and [`series`] the hypergeometric series, the annihilation
//! check and the numerical period oracle.

pub mod error;
pub mod fan;
pub mod groebner;
pub mod linalg;
pub mod polyhedra;
pub mod series;

pub use error::{Error, Result};
