use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{canonical_lattice_basis, IntVector, RatVector};

/// Practical bound on the ambient dimension accepted by [`dual_cone`].
pub const MAX_DUAL_DIM: usize = 8;

/// Polyhedral cone given by ray generators.
///
/// Generators are stored primitive, deduplicated and sorted. A cone that
/// contains a line lists both `v` and `-v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<IntVector>,
}

impl Cone {
    pub fn new(ambient_dim: usize, generators: Vec<IntVector>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: g.len(),
                });
            }
            if !g.is_zero() {
                gens.push(g.primitive());
            }
        }
        gens.sort();
        gens.dedup();
        Ok(Cone {
            ambient_dim,
            generators: gens,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        crate::linalg::rank_of(&self.generators)
    }

    /// Inequality description `{x : <f, x> >= 0 for f in facets, <e, x> = 0 for e in equations}`.
    pub fn inequalities(&self) -> Inequalities {
        let dd = double_description(self.ambient_dim, &self.generators);
        Inequalities {
            facets: dd.rays,
            equations: dd.lineality,
        }
    }

    pub fn contains(&self, p: &RatVector, strict: bool) -> bool {
        self.inequalities().contains(p, strict)
    }
}

/// Facet normals and equations of a cone, as produced by double description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequalities {
    /// Inward facet normals (extreme rays of the dual modulo its lineality).
    pub facets: Vec<IntVector>,
    /// Basis of the orthogonal complement of the span.
    pub equations: Vec<IntVector>,
}

impl Inequalities {
    /// Membership, or relative-interior membership when `strict`.
    pub fn contains(&self, p: &RatVector, strict: bool) -> bool {
        if self.equations.iter().any(|e| !e.dot_rat(p).is_zero()) {
            return false;
        }
        self.facets.iter().all(|f| {
            let v = f.dot_rat(p);
            if strict {
                v.is_positive()
            } else {
                !v.is_negative()
            }
        })
    }
}

/// Output of [`double_description`]: `cone(rays) + span(lineality)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdResult {
    pub rays: Vec<IntVector>,
    pub lineality: Vec<IntVector>,
}

struct DdRay {
    vector: IntVector,
    zeros: BTreeSet<usize>,
}

/// Generators of `{y : <a, y> >= 0 for every a in constraints}`.
///
/// Incremental double description starting from the whole space: lines
/// are kept as a separate lineality basis and converted to rays when a
/// constraint cuts them; otherwise new rays come from adjacent pairs on
/// opposite sides, with adjacency decided by the combinatorial test on
/// zero sets.
pub fn double_description(dim: usize, constraints: &[IntVector]) -> DdResult {
    let mut lineality: Vec<IntVector> = (0..dim).map(|i| IntVector::unit(dim, i)).collect();
    let mut rays: Vec<DdRay> = Vec::new();
    let mut processed: BTreeSet<usize> = BTreeSet::new();

    for (k, a) in constraints.iter().enumerate() {
        assert_eq!(a.len(), dim, "constraint dimension mismatch");
        if a.is_zero() {
            for r in rays.iter_mut() {
                r.zeros.insert(k);
            }
            processed.insert(k);
            continue;
        }

        if let Some(pos) = lineality.iter().position(|v| !a.dot(v).is_zero()) {
            let mut v = lineality.swap_remove(pos);
            let mut av = a.dot(&v);
            if av.is_negative() {
                v = v.neg();
                av = -av;
            }
            for w in lineality.iter_mut() {
                let aw = a.dot(w);
                if !aw.is_zero() {
                    *w = w.combine(&av, &v, &(-aw)).primitive();
                }
            }
            for r in rays.iter_mut() {
                let ar = a.dot(&r.vector);
                if !ar.is_zero() {
                    r.vector = r.vector.combine(&av, &v, &(-ar)).primitive();
                }
                r.zeros.insert(k);
            }
            rays.push(DdRay {
                vector: v.primitive(),
                zeros: processed.clone(),
            });
            processed.insert(k);
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| a.dot(&r.vector)).collect();
        let mut next: Vec<DdRay> = Vec::new();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        for &p in &positive {
            for &n in &negative {
                let common: BTreeSet<usize> =
                    rays[p].zeros.intersection(&rays[n].zeros).copied().collect();
                let blocked = rays.iter().enumerate().any(|(i, r)| {
                    i != p && i != n && common.iter().all(|c| r.zeros.contains(c))
                });
                if blocked {
                    continue;
                }
                let v = rays[n]
                    .vector
                    .combine(&values[p], &rays[p].vector, &(-&values[n]))
                    .primitive();
                let mut zeros = common;
                zeros.insert(k);
                next.push(DdRay { vector: v, zeros });
            }
        }
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_zero() {
                r.zeros.insert(k);
                next.push(r);
            } else if values[i].is_positive() {
                next.push(r);
            }
        }
        rays = next;
        processed.insert(k);
    }

    let mut out: Vec<IntVector> = rays.into_iter().map(|r| r.vector.primitive()).collect();
    out.sort();
    out.dedup();
    let lineality = canonical_lattice_basis(&lineality, dim)
        .into_iter()
        .map(|v| v.primitive())
        .collect();
    DdResult {
        rays: out,
        lineality,
    }
}

/// Dual cone `{y : <y, x> >= 0 for all x in C}`.
pub fn dual_cone(cone: &Cone) -> Result<Cone> {
    if cone.ambient_dim > MAX_DUAL_DIM {
        return Err(Error::DimensionBound {
            dim: cone.ambient_dim,
            max: MAX_DUAL_DIM,
        });
    }
    let dd = double_description(cone.ambient_dim, &cone.generators);
    let mut gens = dd.rays;
    for l in dd.lineality {
        gens.push(l.neg());
        gens.push(l);
    }
    Cone::new(cone.ambient_dim, gens)
}

/// Exact membership of `p` in `C`; relative-interior membership when `strict`.
pub fn cone_contains(cone: &Cone, p: &RatVector, strict: bool) -> Result<bool> {
    if p.len() != cone.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: cone.ambient_dim,
            found: p.len(),
        });
    }
    Ok(cone.contains(p, strict))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(gens: &[&[i64]]) -> Cone {
        let d = gens[0].len();
        Cone::new(d, gens.iter().map(|g| IntVector::from_i64s(g)).collect()).unwrap()
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(dual_cone(&c).unwrap(), c);
    }

    #[test]
    fn dual_of_skew_cone() {
        let c = cone(&[&[1, 0], &[1, 2]]);
        let d = dual_cone(&c).unwrap();
        assert_eq!(
            d.generators(),
            &[IntVector::from(vec![0, 1]), IntVector::from(vec![2, -1])]
        );
    }

    #[test]
    fn dual_of_half_line() {
        let c = cone(&[&[1]]);
        assert_eq!(dual_cone(&c).unwrap(), c);
        let neg = cone(&[&[-3]]);
        assert_eq!(dual_cone(&neg).unwrap().generators(), &[IntVector::from(vec![-1])]);
    }

    #[test]
    fn dual_of_ray_in_plane_is_half_plane() {
        let c = cone(&[&[1, 0]]);
        let d = dual_cone(&c).unwrap();
        assert_eq!(
            d.generators(),
            &[
                IntVector::from(vec![0, -1]),
                IntVector::from(vec![0, 1]),
                IntVector::from(vec![1, 0])
            ]
        );
        assert_eq!(dual_cone(&d).unwrap(), c);
    }

    #[test]
    fn dual_of_origin_is_everything() {
        let c = Cone::new(2, vec![]).unwrap();
        let d = dual_cone(&c).unwrap();
        assert_eq!(d.generators().len(), 4);
        assert!(d.contains(&RatVector::from_i64s(&[-7, 3]), false));
    }

    #[test]
    fn dimension_bound_enforced() {
        let c = Cone::new(9, vec![IntVector::unit(9, 0)]).unwrap();
        assert!(matches!(dual_cone(&c), Err(Error::DimensionBound { .. })));
    }

    #[test]
    fn containment_cases() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert!(cone_contains(&c, &RatVector::from_i64s(&[0, 0]), false).unwrap());
        assert!(!cone_contains(&c, &RatVector::from_i64s(&[0, 0]), true).unwrap());
        assert!(!cone_contains(&c, &RatVector::from_i64s(&[0, 1]), true).unwrap());
        assert!(cone_contains(&c, &RatVector::from_i64s(&[0, 1]), false).unwrap());
        assert!(cone_contains(&c, &RatVector::from_fractions(&[(1, 3), (1, 2)]), true).unwrap());
        assert!(cone_contains(&c, &RatVector::from_i64s(&[0]), false).is_err());
    }

    #[test]
    fn relative_interior_of_lower_dimensional_cone() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0]]);
        assert!(c.contains(&RatVector::from_i64s(&[1, 1, 0]), true));
        assert!(!c.contains(&RatVector::from_i64s(&[1, 1, 1]), false));
        assert!(!c.contains(&RatVector::from_i64s(&[1, 0, 0]), true));
    }

    #[test]
    fn three_dimensional_square_cone() {
        // cone over a square: four facets
        let c = cone(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]]);
        let d = dual_cone(&c).unwrap();
        assert_eq!(d.generators().len(), 4);
        for y in d.generators() {
            let tight = c.generators().iter().filter(|x| y.dot(x).is_zero()).count();
            assert_eq!(tight, 2);
        }
        assert_eq!(dual_cone(&d).unwrap(), c);
    }
}
