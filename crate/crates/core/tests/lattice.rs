use num_bigint::BigInt;
use proptest::prelude::*;
use toricmdp::linalg::{
    hermite_normal_form, integer_kernel_basis, rank, IntMatrix, IntVector, LatticeCoordinates,
};
use toricmdp::polyhedra::{dual_cone, Cone};

fn matrix(rows: usize, cols: usize, data: &[i64]) -> IntMatrix {
    IntMatrix::new(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
}

fn small_vectors(len: usize, bound: i64) -> Vec<IntVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.iter().map(|v| IntVector::from_i64s(v)).collect()
}

fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..=3, 2usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |d| (r, c, d))
    })
}

proptest! {
    #[test]
    fn hermite_form_round_trip((r, c, d) in arb_matrix()) {
        let m = matrix(r, c, &d);
        let (h, u) = hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m), h.clone());
        prop_assert!(u.determinant() == BigInt::from(1) || u.determinant() == BigInt::from(-1));
        let mut last_pivot: Option<usize> = None;
        for row in 0..h.rows() {
            let v = h.row(row);
            match (0..c).find(|&j| v[j] != BigInt::from(0)) {
                Some(j) => {
                    prop_assert!(last_pivot.is_none_or(|p| j > p));
                    prop_assert!(v[j] > BigInt::from(0));
                    for above in 0..row {
                        let x = h.get(above, j);
                        prop_assert!(*x >= BigInt::from(0) && x < &v[j]);
                    }
                    last_pivot = Some(j);
                }
                None => last_pivot = Some(usize::MAX - 1),
            }
        }
    }

    #[test]
    fn kernel_basis_matches_brute_force((r, c, d) in arb_matrix()) {
        let m = matrix(r, c, &d);
        let basis = integer_kernel_basis(&m);
        prop_assert_eq!(basis.len(), c - rank(&m));
        for b in &basis {
            prop_assert!(m.mul_vec(b).is_zero());
        }
        if basis.is_empty() {
            return Ok(());
        }
        let coords = LatticeCoordinates::new(&basis).unwrap();
        for v in small_vectors(c, 2) {
            if m.mul_vec(&v).is_zero() {
                prop_assert!(coords.integer_coordinates(&v).is_some(), "{} not in the span", v);
            }
        }
    }

    #[test]
    fn double_dual_is_the_cone(gens in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..6)) {
        let cone = Cone::new(3, gens.iter().map(|g| IntVector::from_i64s(g)).collect()).unwrap();
        let dd = dual_cone(&dual_cone(&cone).unwrap()).unwrap();
        for g in cone.generators() {
            prop_assert!(dd.contains(&g.to_rat(), false));
        }
        for g in dd.generators() {
            prop_assert!(cone.contains(&g.to_rat(), false));
        }
    }
}
