use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::formal::{Coordinates, FormalSeries, Truncation, TruncationSpec};
use crate::error::{Error, Result};
use crate::fan::{point_config, primitive_relations, Fan, PointConfig};
use crate::groebner::canonical_gamma;
use crate::linalg::{IntVector, LatticeCoordinates};

/// `(sum k_i)! / prod k_i!`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut value = BigInt::one();
    let mut total: u64 = 0;
    for &k in parts {
        for j in 1..=k {
            total += 1;
            value = value * BigInt::from(total) / BigInt::from(j);
        }
    }
    value
}

/// Calls `visit` on every `m in Z^len_{>=0}` with `sum m <= bound`, in
/// lexicographic order.
fn for_each_bounded(len: usize, bound: u32, visit: &mut dyn FnMut(&[u32])) {
    fn go(prefix: &mut Vec<u32>, len: usize, remaining: u32, visit: &mut dyn FnMut(&[u32])) {
        if prefix.len() == len {
            visit(prefix);
            return;
        }
        for k in 0..=remaining {
            prefix.push(k);
            go(prefix, len, remaining - k, visit);
            prefix.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, bound, visit);
}

/// Torus-cycle series: coefficient `(-1)^{|l|} |l|! / prod l_i!` at
/// `(-|l|, l_1, ..., l_p)` for every nonnegative relation tail with
/// `|l| = sum l_i <= N`; coefficients in `A` coordinates.
pub fn torus_cycle_series(config: &PointConfig, order: u32) -> FormalSeries {
    let p = config.len() - 1;
    let rays = &config.lattice_points()[1..];
    let mut candidates: Vec<Vec<u32>> = Vec::new();
    for_each_bounded(p, order, &mut |tail| {
        let balanced = (0..config.n).all(|j| {
            rays.iter()
                .zip(tail)
                .map(|(r, &k)| &r[j] * BigInt::from(k))
                .sum::<BigInt>()
                .is_zero()
        });
        if balanced {
            candidates.push(tail.to_vec());
        }
    });
    let terms: BTreeMap<IntVector, BigRational> = candidates
        .par_iter()
        .map(|tail| {
            let parts: Vec<u64> = tail.iter().map(|&k| u64::from(k)).collect();
            let total: u64 = parts.iter().sum();
            let mut c = multinomial(&parts);
            if total % 2 == 1 {
                c = -c;
            }
            let mut l = Vec::with_capacity(p + 1);
            l.push(-BigInt::from(total));
            l.extend(parts.iter().map(|&k| BigInt::from(k)));
            (IntVector(l), BigRational::from_integer(c))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    FormalSeries {
        gamma: canonical_gamma(config.len()),
        terms,
        truncation: Truncation::TotalDegree(order),
        coordinates: Coordinates::A,
    }
}

/// Checks that `basis` is a Z-basis of `L` whose cone contains every
/// primitive relation.
pub fn check_series_basis(fan: &Fan, basis: &[IntVector]) -> Result<()> {
    let config = point_config(fan);
    for b in basis {
        if !config.is_relation(b) {
            return Err(Error::NotARelation(b.clone()));
        }
    }
    if basis.len() != config.relation_basis.len() {
        return Err(Error::DimensionMismatch {
            expected: config.relation_basis.len(),
            found: basis.len(),
        });
    }
    let coords = LatticeCoordinates::new(basis)
        .ok_or_else(|| Error::Degenerate("series basis is dependent".into()))?;
    if config
        .relation_basis
        .iter()
        .any(|b| coords.integer_coordinates(b).is_none())
    {
        return Err(Error::Degenerate("series basis does not span the relation lattice".into()));
    }
    for r in primitive_relations(fan)? {
        let m = coords
            .integer_coordinates(&r.relation)
            .expect("relation lies in the spanned lattice");
        if m.iter().any(|x| x.is_negative()) {
            return Err(Error::BasisNotInDualCone(r.relation));
        }
    }
    Ok(())
}

/// Local series in `x` coordinates over the basis of `τ^∨ ∩ L`: at
/// `l = sum m_k l⁽ᵏ⁾` with `sum m_k <= N` the coefficient is
/// `(-l_0)! / prod_{i>=1} l_i!`, and zero when some `l_i < 0`.
pub fn local_series(fan: &Fan, basis: &[IntVector], order: u32) -> Result<FormalSeries> {
    check_series_basis(fan, basis)?;
    let config = point_config(fan);
    let mut ms: Vec<Vec<u32>> = Vec::new();
    for_each_bounded(basis.len(), order, &mut |m| ms.push(m.to_vec()));
    let terms: BTreeMap<IntVector, BigRational> = ms
        .par_iter()
        .filter_map(|m| {
            let mut l = IntVector::zeros(config.len());
            for (b, &k) in basis.iter().zip(m) {
                l = l.combine(&BigInt::one(), b, &BigInt::from(k));
            }
            let tail: Option<Vec<u64>> = l.entries()[1..].iter().map(|x| x.to_u64()).collect();
            let c = multinomial(&tail?);
            Some((l, BigRational::from_integer(c)))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(FormalSeries {
        gamma: canonical_gamma(config.len()),
        terms,
        truncation: Truncation::Basis(TruncationSpec {
            basis: basis.to_vec(),
            max_total_degree: order,
        }),
        coordinates: Coordinates::X,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::fixtures::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[]), BigInt::one());
        assert_eq!(multinomial(&[2, 1]), BigInt::from(3));
        assert_eq!(multinomial(&[1, 1, 1, 1, 1]), BigInt::from(120));
        assert_eq!(multinomial(&[2, 2, 2, 2, 2]), BigInt::from(113400));
    }

    #[test]
    fn projective_line_torus_series() {
        let s = torus_cycle_series(&point_config(&projective_line()), 4);
        let values: Vec<BigRational> = (0..=2)
            .map(|m| s.a_coefficient(&IntVector::from_i64s(&[-2 * m, m, m])))
            .collect();
        assert_eq!(values, vec![int(1), int(2), int(6)]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn quintic_torus_series() {
        let s = torus_cycle_series(&point_config(&projective_four_space()), 10);
        let values: Vec<BigRational> = (0..=2)
            .map(|m| s.a_coefficient(&IntVector::from_i64s(&[-5 * m, m, m, m, m, m])))
            .collect();
        assert_eq!(values, vec![int(1), int(-120), int(113400)]);
    }

    #[test]
    fn order_zero_is_constant() {
        let s = torus_cycle_series(&point_config(&hirzebruch_f1()), 0);
        assert_eq!(s.len(), 1);
        assert_eq!(s.a_coefficient(&IntVector::zeros(5)), int(1));
    }

    #[test]
    fn hirzebruch_local_series() {
        let basis = [
            IntVector::from_i64s(&[-1, 1, -1, 1, 0]),
            IntVector::from_i64s(&[-2, 0, 1, 0, 1]),
        ];
        let s = local_series(&hirzebruch_f1(), &basis, 4).unwrap();
        let at = |m1: i64, m2: i64| {
            let l = basis[0]
                .scale(&BigInt::from(m1))
                .add(&basis[1].scale(&BigInt::from(m2)));
            s.x_coefficient(&l)
        };
        assert_eq!(at(0, 0), int(1));
        assert_eq!(at(0, 1), int(2));
        assert_eq!(at(1, 1), int(6));
        assert_eq!(at(0, 2), int(6));
        assert_eq!(at(1, 2), int(60));
        assert_eq!(at(2, 2), int(90));
        assert_eq!(at(1, 0), int(0));
    }

    #[test]
    fn quintic_local_series() {
        let basis = [IntVector::from_i64s(&[-5, 1, 1, 1, 1, 1])];
        let s = local_series(&projective_four_space(), &basis, 3).unwrap();
        let values: Vec<BigRational> = (0..=3)
            .map(|m| s.x_coefficient(&basis[0].scale(&BigInt::from(m))))
            .collect();
        assert_eq!(values, vec![int(1), int(120), int(113400), int(168168000)]);
        let s0 = local_series(&projective_four_space(), &basis, 0).unwrap();
        assert_eq!(s0.len(), 1);
    }

    #[test]
    fn bad_bases_rejected() {
        let fan = hirzebruch_f1();
        // a Z-basis of L that misses the first relation's cone
        let basis = [
            IntVector::from_i64s(&[1, -1, 1, -1, 0]),
            IntVector::from_i64s(&[-2, 0, 1, 0, 1]),
        ];
        assert!(matches!(
            local_series(&fan, &basis, 2),
            Err(Error::BasisNotInDualCone(_))
        ));
        let short = [IntVector::from_i64s(&[-2, 0, 1, 0, 1])];
        assert!(local_series(&fan, &short, 2).is_err());
    }
}
