use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cone::double_description;
use crate::error::{Error, Result};
use crate::linalg::{rank_of, IntVector, RatVector};

/// Cell of a regular subdivision: sorted indices into the point list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubdivisionCell {
    pub vertex_indices: Vec<usize>,
}

impl SubdivisionCell {
    pub fn new(mut vertex_indices: Vec<usize>) -> Self {
        vertex_indices.sort_unstable();
        vertex_indices.dedup();
        SubdivisionCell { vertex_indices }
    }

    pub fn len(&self) -> usize {
        self.vertex_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_indices.is_empty()
    }
}

fn homogenize(p: &IntVector) -> IntVector {
    let mut v = Vec::with_capacity(p.len() + 1);
    v.push(BigInt::one());
    v.extend(p.iter().cloned());
    IntVector(v)
}

/// True iff `q` lies on the (relative) boundary of `conv(points)`.
///
/// Facets come from double description on the homogenized points; `q` is
/// on the boundary when it satisfies every facet inequality and is tight
/// on at least one.
pub fn hull_boundary_contains(points: &[IntVector], q: &IntVector) -> bool {
    let Some(first) = points.first() else {
        return false;
    };
    let dim = first.len() + 1;
    let lifted: Vec<IntVector> = points.iter().map(homogenize).collect();
    let dd = double_description(dim, &lifted);
    let qh = homogenize(q);
    if dd.lineality.iter().any(|e| !e.dot(&qh).is_zero()) {
        return false;
    }
    let mut tight = false;
    for f in &dd.rays {
        let v = f.dot(&qh);
        if v.is_negative() {
            return false;
        }
        tight |= v.is_zero();
    }
    tight
}

/// Projections of the lower facets of `conv{(point_i, height_i)}`.
///
/// Each cell lists every point lying on its lower facet, so non-generic
/// heights yield non-simplicial cells. Cells are sorted.
pub fn lower_hull_subdivision(
    points: &[IntVector],
    heights: &RatVector,
) -> Result<Vec<SubdivisionCell>> {
    if points.len() != heights.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            found: heights.len(),
        });
    }
    let Some(first) = points.first() else {
        return Err(Error::Degenerate("empty point set".into()));
    };
    let d = first.len();
    let homogenized: Vec<IntVector> = points.iter().map(homogenize).collect();
    if rank_of(&homogenized) != d + 1 {
        return Err(Error::Degenerate(
            "points do not affinely span the ambient space".into(),
        ));
    }

    let scaled_heights = heights.clear_denominators();
    let lifted: Vec<IntVector> = homogenized
        .iter()
        .zip(scaled_heights.iter())
        .map(|(p, h)| {
            let mut v = p.0.clone();
            v.push(h.clone());
            IntVector(v)
        })
        .collect();

    let dd = double_description(d + 2, &lifted);
    if !dd.lineality.is_empty() {
        // All lifted points lie in a hyperplane: the lift is affine and
        // the whole configuration is a single cell.
        return Ok(vec![SubdivisionCell::new((0..points.len()).collect())]);
    }
    let mut cells: Vec<SubdivisionCell> = dd
        .rays
        .iter()
        .filter(|f| f[d + 1].is_positive())
        .map(|f| {
            SubdivisionCell::new(
                lifted
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| f.dot(x).is_zero())
                    .map(|(i, _)| i)
                    .collect(),
            )
        })
        .collect();
    cells.sort();
    cells.dedup();
    Ok(cells)
}
