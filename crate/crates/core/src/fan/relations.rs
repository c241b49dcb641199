use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Fan;
use crate::error::{Error, Result};
use crate::linalg::{IntVector, LatticeCoordinates};
use crate::polyhedra::hull_boundary_contains;

/// Minimal set of rays that does not span a cone of the fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveCollection {
    /// Sorted 0-based ray indices.
    pub ray_indices: Vec<usize>,
}

/// `sum_{P} μ̄ = c0 μ̄₀ + sum_{G} c_μ μ̄` and the relation vector it defines.
///
/// Indices of `relation` run over the point configuration: 0 is `μ̄₀`,
/// `i + 1` is ray `i`. `generators` and `coefficients` use ray indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveRelation {
    pub collection: PrimitiveCollection,
    pub generators: Vec<usize>,
    pub coefficients: Vec<BigInt>,
    pub c0: BigInt,
    pub relation: IntVector,
}

impl PrimitiveRelation {
    /// `l(P)_0`, i.e. `-c0`.
    pub fn l0(&self) -> &BigInt {
        &self.relation[0]
    }
}

/// Minimal non-faces of the face complex, sorted by size then lexicographically.
pub fn primitive_collections(fan: &Fan) -> Vec<PrimitiveCollection> {
    fan.complex()
        .minimal_non_faces()
        .into_iter()
        .map(|ray_indices| PrimitiveCollection { ray_indices })
        .collect()
}

/// Locates `sum_{P} μ` in the minimal cone containing it and reads off the
/// relation.
pub fn primitive_relation(fan: &Fan, collection: &PrimitiveCollection) -> Result<PrimitiveRelation> {
    let n = fan.dim();
    let mut s = IntVector::zeros(n);
    for &i in &collection.ray_indices {
        s = s.add(&fan.rays()[i]);
    }

    let located = fan.max_cones().iter().find_map(|cone| {
        let coords = LatticeCoordinates::new(&fan.cone_rays(cone))?.coordinates(&s)?;
        coords
            .iter()
            .all(|c| !c.is_negative())
            .then(|| (cone.clone(), coords))
    });
    let Some((cone, coords)) = located else {
        return Err(Error::NotLocated {
            collection: collection.ray_indices.clone(),
        });
    };

    let mut generators = Vec::new();
    let mut coefficients = Vec::new();
    for (&ray, c) in cone.iter().zip(coords.iter()) {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::Integrality {
                collection: collection.ray_indices.clone(),
            });
        }
        generators.push(ray);
        coefficients.push(c.to_integer());
    }
    let order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..generators.len()).collect();
        idx.sort_by_key(|&i| generators[i]);
        idx
    };
    let generators: Vec<usize> = order.iter().map(|&i| generators[i]).collect();
    let coefficients: Vec<BigInt> = order.iter().map(|&i| coefficients[i].clone()).collect();

    let total: BigInt = coefficients.iter().sum();
    let c0 = BigInt::from(collection.ray_indices.len()) - total;

    let mut l = vec![BigInt::zero(); fan.ray_count() + 1];
    l[0] = -c0.clone();
    for &i in &collection.ray_indices {
        l[i + 1] += BigInt::one();
    }
    for (&g, c) in generators.iter().zip(&coefficients) {
        l[g + 1] -= c;
    }

    Ok(PrimitiveRelation {
        collection: collection.clone(),
        generators,
        coefficients,
        c0,
        relation: IntVector(l),
    })
}

/// Primitive relations of every primitive collection, in collection order.
pub fn primitive_relations(fan: &Fan) -> Result<Vec<PrimitiveRelation>> {
    primitive_collections(fan)
        .iter()
        .map(|p| primitive_relation(fan, p))
        .collect()
}

/// Both characterizations of property (*), evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport {
    /// Every primitive relation has `l(P)_0 <= 0`.
    pub relations_criterion: bool,
    /// Every ray lies on the boundary of the convex hull of the rays.
    pub boundary_criterion: bool,
    /// Indices (into the primitive relations) with `l(P)_0 > 0`.
    pub positive_relations: Vec<usize>,
    /// Rays strictly inside the hull.
    pub interior_rays: Vec<usize>,
    pub relations: Vec<PrimitiveRelation>,
}

impl StarReport {
    pub fn holds(&self) -> bool {
        self.relations_criterion && self.boundary_criterion
    }
}

/// Evaluates property (*) by the relation criterion and by the hull
/// criterion; disagreement is reported as an error.
pub fn property_star(fan: &Fan) -> Result<StarReport> {
    let relations = primitive_relations(fan)?;
    let positive_relations: Vec<usize> = relations
        .iter()
        .enumerate()
        .filter(|(_, r)| r.l0().is_positive())
        .map(|(i, _)| i)
        .collect();
    let interior_rays: Vec<usize> = (0..fan.ray_count())
        .filter(|&i| !hull_boundary_contains(fan.rays(), &fan.rays()[i]))
        .collect();
    let relations_criterion = positive_relations.is_empty();
    let boundary_criterion = interior_rays.is_empty();
    if relations_criterion != boundary_criterion {
        return Err(Error::CriteriaDisagreement {
            relations: relations_criterion,
            boundary: boundary_criterion,
        });
    }
    Ok(StarReport {
        relations_criterion,
        boundary_criterion,
        positive_relations,
        interior_rays,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::fan::point_config;

    fn collections(fan: &Fan) -> Vec<Vec<usize>> {
        primitive_collections(fan).into_iter().map(|p| p.ray_indices).collect()
    }

    #[test]
    fn collections_of_fixtures() {
        assert_eq!(collections(&projective_line()), vec![vec![0, 1]]);
        assert_eq!(collections(&projective_four_space()), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(collections(&hirzebruch_f1()), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn quintic_relation() {
        let fan = projective_four_space();
        let r = primitive_relations(&fan).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].c0, BigInt::from(5));
        assert!(r[0].generators.is_empty());
        assert_eq!(r[0].relation, IntVector::from(vec![-5, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn hirzebruch_relations() {
        let fan = hirzebruch_f1();
        let r = primitive_relations(&fan).unwrap();
        assert_eq!(r[0].generators, vec![1]);
        assert_eq!(r[0].coefficients, vec![BigInt::one()]);
        assert_eq!(r[0].c0, BigInt::one());
        assert_eq!(r[0].relation, IntVector::from(vec![-1, 1, -1, 1, 0]));
        assert!(r[1].generators.is_empty());
        assert_eq!(r[1].c0, BigInt::from(2));
        assert_eq!(r[1].relation, IntVector::from(vec![-2, 0, 1, 0, 1]));
        let config = point_config(&fan);
        for rel in &r {
            assert!(config.is_relation(&rel.relation));
            assert!(rel.relation.sum().is_zero());
        }
    }

    #[test]
    fn star_holds_on_nef_fixtures() {
        for fan in [projective_line(), hirzebruch_f1(), projective_four_space()] {
            let s = property_star(&fan).unwrap();
            assert!(s.holds());
        }
    }

    #[test]
    fn star_fails_with_interior_ray() {
        let fan = non_nef_surface();
        let s = property_star(&fan).unwrap();
        assert!(!s.relations_criterion);
        assert!(!s.boundary_criterion);
        assert_eq!(s.interior_rays, vec![2]);
        let bad = &s.relations[s.positive_relations[0]];
        assert_eq!(bad.collection.ray_indices, vec![1, 3]);
        assert_eq!(bad.generators, vec![2]);
        assert_eq!(*bad.l0(), BigInt::one());
    }
}
