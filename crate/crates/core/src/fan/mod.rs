//! Complete regular simplicial fans and the combinatorics the certificates
//! are built from: the point configuration, primitive collections and
//! relations, property (*), the Kähler cone, and the maximal triangulation.

mod complex;
mod config;
mod kahler;
mod relations;
mod triangulation;

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::{rank_of, IntMatrix, IntVector};

pub use complex::SimplicialComplex;
pub use config::{point_config, PointConfig};
pub use kahler::{in_secondary_cone, interior_weight, kahler_cone, lift_to_weight, KahlerCone};
pub use relations::{
    primitive_collections, primitive_relation, primitive_relations, property_star,
    PrimitiveCollection, PrimitiveRelation, StarReport,
};
pub use triangulation::{cross_check_t0, maximal_triangulation, Triangulation};

/// Simplicial fan in `N = Z^dim`: primitive rays and maximal cones given
/// as index sets of size `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<IntVector>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Checks the structural invariants: rays primitive and distinct, every
    /// maximal cone a set of `dim` independent rays. Regularity and
    /// completeness are left to [`validate`].
    pub fn new(dim: usize, rays: Vec<IntVector>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidFan("dimension must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::InvalidFan(format!("ray {i} has length {}, expected {dim}", r.len())));
            }
            if !r.is_primitive() {
                return Err(Error::InvalidFan(format!("ray {i} = {r} is not primitive")));
            }
            if rays[..i].contains(r) {
                return Err(Error::InvalidFan(format!("ray {i} = {r} is repeated")));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (c, cone) in max_cones.into_iter().enumerate() {
            let mut sorted = cone.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != dim {
                return Err(Error::InvalidFan(format!(
                    "cone {c} has {} distinct rays, expected {dim}",
                    sorted.len()
                )));
            }
            if let Some(&bad) = sorted.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!("cone {c} references missing ray {bad}")));
            }
            let gens: Vec<IntVector> = sorted.iter().map(|&i| rays[i].clone()).collect();
            if rank_of(&gens) != dim {
                return Err(Error::InvalidFan(format!("cone {c} has dependent rays")));
            }
            if cones.contains(&sorted) {
                return Err(Error::InvalidFan(format!("cone {c} is repeated")));
            }
            cones.push(sorted);
        }
        if cones.is_empty() {
            return Err(Error::InvalidFan("no maximal cones".into()));
        }
        Ok(Fan {
            dim,
            rays,
            max_cones: cones,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(dim: usize, rays: &[&[i64]], cones: &[&[usize]]) -> Result<Self> {
        Fan::new(
            dim,
            rays.iter().map(|r| IntVector::from_i64s(r)).collect(),
            cones.iter().map(|c| c.to_vec()).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    /// Maximal cones, each sorted.
    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn cone_rays(&self, cone: &[usize]) -> Vec<IntVector> {
        cone.iter().map(|&i| self.rays[i].clone()).collect()
    }

    pub fn cone_determinant(&self, cone: &[usize]) -> BigInt {
        IntMatrix::from_rows(&self.cone_rays(cone), self.dim).determinant()
    }

    /// Face complex on the rays.
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(&self.max_cones, self.rays.len())
    }

    /// Rank of the relation lattice, `p - n`.
    pub fn relation_rank(&self) -> usize {
        self.rays.len().saturating_sub(self.dim)
    }
}

/// Why a fan failed the completeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletenessFailure {
    /// A codimension-one face lies in a number of maximal cones other than two.
    FaceMultiplicity { face: Vec<usize>, cones: Vec<usize> },
    /// The facet-adjacency graph of maximal cones is disconnected.
    Disconnected { reached: usize, total: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub regular: bool,
    pub complete: bool,
    /// First maximal cone whose determinant is not ±1, with that determinant.
    pub singular_cone: Option<(usize, BigInt)>,
    pub completeness_failure: Option<CompletenessFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.regular && self.complete
    }
}

/// Regularity (every maximal cone unimodular) and completeness (each
/// codimension-one face in exactly two maximal cones, adjacency graph
/// connected).
pub fn validate(fan: &Fan) -> ValidationReport {
    let singular_cone = fan.max_cones.iter().enumerate().find_map(|(i, c)| {
        let d = fan.cone_determinant(c);
        (!d.abs().is_one()).then_some((i, d))
    });

    let mut by_face: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (ci, cone) in fan.max_cones.iter().enumerate() {
        for skip in 0..cone.len() {
            let face: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &r)| r)
                .collect();
            by_face.entry(face).or_default().push(ci);
        }
    }
    let mut completeness_failure = by_face.iter().find_map(|(face, cones)| {
        (cones.len() != 2).then(|| CompletenessFailure::FaceMultiplicity {
            face: face.clone(),
            cones: cones.clone(),
        })
    });

    if completeness_failure.is_none() {
        let total = fan.max_cones.len();
        let mut adjacency = vec![Vec::new(); total];
        for cones in by_face.values() {
            adjacency[cones[0]].push(cones[1]);
            adjacency[cones[1]].push(cones[0]);
        }
        let mut seen = vec![false; total];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(c) = queue.pop_front() {
            for &nb in &adjacency[c] {
                if !seen[nb] {
                    seen[nb] = true;
                    reached += 1;
                    queue.push_back(nb);
                }
            }
        }
        if reached != total {
            completeness_failure = Some(CompletenessFailure::Disconnected { reached, total });
        }
    }

    ValidationReport {
        regular: singular_cone.is_none(),
        complete: completeness_failure.is_none(),
        singular_cone,
        completeness_failure,
    }
}

/// Errors unless the fan is complete and regular.
pub fn require_valid(fan: &Fan) -> Result<ValidationReport> {
    let report = validate(fan);
    if let Some((cone, det)) = &report.singular_cone {
        return Err(Error::Precondition(format!(
            "maximal cone {cone} has determinant {det}"
        )));
    }
    if let Some(failure) = &report.completeness_failure {
        return Err(Error::Precondition(format!("fan is not complete: {failure:?}")));
    }
    Ok(report)
}

/// Small fans used throughout the tests and examples.
pub mod fixtures {
    use std::collections::{BTreeSet, VecDeque};

    use num_bigint::BigInt;
    use num_traits::One;

    use super::Fan;
    use crate::linalg::IntVector;

    /// Projective line: rays ±1.
    pub fn projective_line() -> Fan {
        Fan::from_i64(1, &[&[1], &[-1]], &[&[0], &[1]]).expect("valid fixture")
    }

    /// Projective plane.
    pub fn projective_plane() -> Fan {
        Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]])
            .expect("valid fixture")
    }

    /// Hirzebruch surface F1 with rays (1,0), (0,1), (-1,1), (0,-1).
    pub fn hirzebruch_f1() -> Fan {
        Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, 1], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        )
        .expect("valid fixture")
    }

    /// Projective 4-space: fan over the faces of the simplex with
    /// vertices e1..e4 and -e1-...-e4.
    pub fn projective_four_space() -> Fan {
        let rays: [&[i64]; 5] = [
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[-1, -1, -1, -1],
        ];
        let cones: Vec<Vec<usize>> = (0..5)
            .map(|skip| (0..5).filter(|&i| i != skip).collect())
            .collect();
        let cone_refs: Vec<&[usize]> = cones.iter().map(|c| c.as_slice()).collect();
        Fan::from_i64(4, &rays, &cone_refs).expect("valid fixture")
    }

    /// Blow-up chain of the plane with the ray (1,1) strictly inside the
    /// hull of the others, so property (*) fails.
    pub fn non_nef_surface() -> Fan {
        Fan::from_i64(
            2,
            &[&[1, 0], &[2, 1], &[1, 1], &[1, 2], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 0]],
        )
        .expect("valid fixture")
    }

    /// Star subdivision of maximal cone `cone` at the sum of its rays.
    pub fn stellar_subdivision(fan: &Fan, cone: usize) -> Fan {
        let sigma = &fan.max_cones()[cone];
        let mut new_ray = IntVector::zeros(fan.dim());
        for &i in sigma {
            new_ray = new_ray.combine(&BigInt::one(), &fan.rays()[i], &BigInt::one());
        }
        let mut rays = fan.rays().to_vec();
        rays.push(new_ray.primitive());
        let v = rays.len() - 1;
        let mut cones: Vec<Vec<usize>> = fan
            .max_cones()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != cone)
            .map(|(_, c)| c.clone())
            .collect();
        for skip in 0..sigma.len() {
            let mut c: Vec<usize> = sigma.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &i)| i).collect();
            c.push(v);
            cones.push(c);
        }
        Fan::new(fan.dim(), rays, cones).expect("stellar subdivision of a valid fan is valid")
    }

    /// Breadth-first star subdivisions of `base`, pairwise distinct, the
    /// first `count` of them including `base`.
    pub fn stellar_catalog(base: &Fan, count: usize) -> Vec<Fan> {
        let key = |f: &Fan| -> BTreeSet<BTreeSet<IntVector>> {
            f.max_cones().iter().map(|c| c.iter().map(|&i| f.rays()[i].clone()).collect()).collect()
        };
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([base.clone()]);
        seen.insert(key(base));
        while let Some(fan) = queue.pop_front() {
            if out.len() == count {
                break;
            }
            for k in 0..fan.max_cones().len() {
                let next = stellar_subdivision(&fan, k);
                if seen.insert(key(&next)) {
                    queue.push_back(next);
                }
            }
            out.push(fan);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn fixtures_validate() {
        for fan in [projective_line(), hirzebruch_f1(), projective_four_space(), non_nef_surface()] {
            let r = validate(&fan);
            assert!(r.regular && r.complete, "{r:?}");
        }
    }

    #[test]
    fn stellar_catalog_is_valid_and_distinct() {
        let catalog = stellar_catalog(&projective_plane(), 25);
        assert_eq!(catalog.len(), 25);
        assert_eq!(catalog[0], projective_plane());
        for fan in &catalog {
            assert!(validate(fan).is_valid());
        }
        let f1_like = stellar_subdivision(&projective_plane(), 0);
        assert_eq!(f1_like.ray_count(), 4);
        assert!(f1_like.rays().contains(&IntVector::from_i64s(&[1, 1])));
    }

    #[test]
    fn singular_cone_is_reported() {
        let fan = Fan::from_i64(
            2,
            &[&[2, 1], &[0, 1], &[-1, 1], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        )
        .unwrap();
        let r = validate(&fan);
        assert!(!r.regular);
        assert_eq!(r.singular_cone, Some((0, BigInt::from(2))));
    }

    #[test]
    fn non_primitive_ray_rejected_at_construction() {
        let r = Fan::from_i64(2, &[&[2, 0], &[0, 1]], &[&[0, 1]]);
        assert!(matches!(r, Err(Error::InvalidFan(_))));
    }

    #[test]
    fn incomplete_fan_detected() {
        // only the first quadrant
        let fan = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        let r = validate(&fan);
        assert!(r.regular);
        assert!(!r.complete);
        assert!(matches!(
            r.completeness_failure,
            Some(CompletenessFailure::FaceMultiplicity { .. })
        ));
    }

    #[test]
    fn dependent_cone_rejected() {
        let r = Fan::from_i64(2, &[&[1, 0], &[-1, 0]], &[&[0, 1]]);
        assert!(r.is_err());
    }
}
