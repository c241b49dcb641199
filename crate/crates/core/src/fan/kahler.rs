use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::config::{point_config, PointConfig};
use super::relations::primitive_relations;
use super::Fan;
use crate::error::{Error, Result};
use crate::linalg::{is_unimodular_extension, solve_rational, IntVector, RatVector};
use crate::polyhedra::{dual_cone, Cone};

/// Closed Kähler cone in `L*_R`, in coordinates dual to the relation basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KahlerCone {
    pub cone: Cone,
    /// Primitive relations in relation-basis coordinates; they generate the dual.
    pub relation_coords: Vec<IntVector>,
    /// Full-dimensional, i.e. of dimension `p - n`.
    pub is_large: bool,
    /// Simplicial and generated by part of a Z-basis of `L*`.
    pub is_regular: bool,
}

/// Dual of the cone spanned by the primitive relations.
pub fn kahler_cone(fan: &Fan) -> Result<KahlerCone> {
    let config = point_config(fan);
    let coords = config.relation_coordinates();
    let rank = config.relation_basis.len();
    let relation_coords = primitive_relations(fan)?
        .iter()
        .map(|r| {
            coords
                .integer_coordinates(&r.relation)
                .ok_or_else(|| Error::NotARelation(r.relation.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let relation_cone = Cone::new(rank, relation_coords.clone())?;
    let cone = dual_cone(&relation_cone)?;
    let is_large = cone.dimension() == rank;
    let is_regular = is_large
        && cone.generators().len() == rank
        && is_unimodular_extension(cone.generators());
    Ok(KahlerCone {
        cone,
        relation_coords,
        is_large,
        is_regular,
    })
}

/// `<ω, l(P)> >= 0` for every primitive relation (`> 0` when strict).
pub fn in_secondary_cone(fan: &Fan, omega: &RatVector, strict: bool) -> Result<bool> {
    let expected = fan.ray_count() + 1;
    if omega.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: omega.len(),
        });
    }
    Ok(primitive_relations(fan)?.iter().all(|r| {
        let v = r.relation.dot_rat(omega);
        if strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }))
}

/// A weight `ω` on the points whose pairing with the relation basis is `y`.
pub fn lift_to_weight(config: &PointConfig, y: &RatVector) -> Option<RatVector> {
    let rows: Vec<Vec<BigRational>> = config
        .relation_basis
        .iter()
        .map(|b| b.to_rat().0)
        .collect();
    if rows.len() != y.len() {
        return None;
    }
    if rows.is_empty() {
        return Some(RatVector::zeros(config.len()));
    }
    solve_rational(&rows, &y.0).map(RatVector)
}

/// Integral weight strictly inside the Kähler cone, lifted from the sum of
/// its generators.
pub fn interior_weight(fan: &Fan) -> Result<IntVector> {
    let k = kahler_cone(fan)?;
    if !k.is_large {
        return Err(Error::Precondition("Kähler cone is not full-dimensional".into()));
    }
    let rank = k.cone.ambient_dim();
    let mut y = vec![BigRational::zero(); rank];
    for g in k.cone.generators() {
        for (acc, x) in y.iter_mut().zip(g.iter()) {
            *acc += BigRational::from_integer(x.clone());
        }
    }
    let config = point_config(fan);
    let omega = lift_to_weight(&config, &RatVector(y))
        .ok_or_else(|| Error::Degenerate("relation basis is not independent".into()))?
        .clear_denominators();
    if !in_secondary_cone(fan, &omega.to_rat(), true)? {
        return Err(Error::NotInterior);
    }
    Ok(omega)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::polyhedra::dual_cone;

    #[test]
    fn rank_one_cones_are_half_lines() {
        for fan in [projective_line(), projective_four_space()] {
            let k = kahler_cone(&fan).unwrap();
            assert_eq!(k.cone.generators().len(), 1);
            assert!(k.is_large && k.is_regular);
        }
    }

    #[test]
    fn hirzebruch_kahler_cone() {
        let fan = hirzebruch_f1();
        let k = kahler_cone(&fan).unwrap();
        assert!(k.is_large);
        assert!(k.is_regular);
        assert_eq!(k.cone.generators().len(), 2);
        // the dual of the Kähler cone is spanned by the two relations
        let back = dual_cone(&k.cone).unwrap();
        let rel = Cone::new(2, k.relation_coords.clone()).unwrap();
        assert_eq!(back, rel);
        for g in k.cone.generators() {
            for r in &k.relation_coords {
                assert!(!g.dot(r).is_negative());
            }
        }
    }

    #[test]
    fn secondary_cone_membership() {
        let fan = hirzebruch_f1();
        let w = RatVector::from_i64s(&[0, 1, 1, 1, 1]);
        assert!(in_secondary_cone(&fan, &w, true).unwrap());
        let linear = RatVector::from_i64s(&[0, 1, 0, -1, 0]);
        assert!(in_secondary_cone(&fan, &linear, false).unwrap());
        assert!(!in_secondary_cone(&fan, &linear, true).unwrap());
        let bad = RatVector::from_i64s(&[0, -1, 0, 0, 0]);
        assert!(!in_secondary_cone(&fan, &bad, false).unwrap());
        assert!(in_secondary_cone(&fan, &RatVector::from_i64s(&[0, 1]), false).is_err());
    }

    #[test]
    fn interior_weights_are_interior() {
        for fan in [projective_line(), hirzebruch_f1(), projective_four_space()] {
            let w = interior_weight(&fan).unwrap();
            assert!(in_secondary_cone(&fan, &w.to_rat(), true).unwrap());
        }
    }
}
