//! Exact polyhedral geometry: cones, duality, convex hulls and regular
//! subdivisions.

mod cone;
mod hull;

pub use cone::{cone_contains, double_description, dual_cone, Cone, DdResult, Inequalities, MAX_DUAL_DIM};
pub use hull::{hull_boundary_contains, lower_hull_subdivision, SubdivisionCell};
