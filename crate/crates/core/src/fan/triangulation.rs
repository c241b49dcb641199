use super::config::point_config;
use super::kahler::in_secondary_cone;
use super::Fan;
use crate::error::{Error, Result};
use crate::linalg::RatVector;
use crate::polyhedra::lower_hull_subdivision;

/// Triangulation of a point configuration: sorted simplices of sorted indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
}

impl Triangulation {
    pub fn new(simplices: Vec<Vec<usize>>) -> Self {
        let mut simplices: Vec<Vec<usize>> = simplices
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        simplices.sort();
        simplices.dedup();
        Triangulation { simplices }
    }
}

/// `T⁰`: every maximal cone coned with `μ̄₀` (index 0; ray `i` is index `i + 1`).
pub fn maximal_triangulation(fan: &Fan) -> Triangulation {
    Triangulation::new(
        fan.max_cones()
            .iter()
            .map(|c| std::iter::once(0).chain(c.iter().map(|&i| i + 1)).collect())
            .collect(),
    )
}

/// Compares the regular subdivision induced by `ω` with `T⁰`.
pub fn cross_check_t0(fan: &Fan, omega: &RatVector) -> Result<bool> {
    if !in_secondary_cone(fan, omega, true)? {
        return Err(Error::NotInterior);
    }
    let config = point_config(fan);
    let cells = lower_hull_subdivision(&config.lattice_points(), omega)?;
    if let Some(bad) = cells.iter().find(|c| c.len() != fan.dim() + 1) {
        return Err(Error::NonSimplicialCell {
            cell: bad.vertex_indices.clone(),
        });
    }
    let induced = Triangulation::new(cells.into_iter().map(|c| c.vertex_indices).collect());
    Ok(induced == maximal_triangulation(fan))
}
