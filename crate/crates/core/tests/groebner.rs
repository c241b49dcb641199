use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use toricmdp::fan::fixtures::{hirzebruch_f1, projective_plane, stellar_catalog};
use toricmdp::fan::{interior_weight, point_config, property_star, Fan};
use toricmdp::groebner::{
    buchberger_complete, buchberger_verify, candidate_groebner_basis, default_degree_cap,
    normal_form, reduce_monomial_with, Binomial, Monomial, TermOrder,
};

/// Oriented Gröbner basis of the primitive-relation binomials at an
/// interior weight.
fn oriented(fan: &Fan) -> (Vec<Binomial>, TermOrder) {
    let order = TermOrder::new(interior_weight(fan).unwrap().to_rat());
    let gens = candidate_groebner_basis(fan).unwrap();
    let report = buchberger_verify(&gens, &order).unwrap();
    assert!(report.verified);
    (report.basis, order)
}

fn nef_catalog() -> Vec<Fan> {
    stellar_catalog(&projective_plane(), 12)
        .into_iter()
        .filter(|f| property_star(f).unwrap().holds())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_schedule_independent(fan_idx in 0usize..64, exps in proptest::collection::vec(0u32..=3, 16), seed in any::<u64>()) {
        let fans = nef_catalog();
        let fan = &fans[fan_idx % fans.len()];
        let (basis, _) = oriented(fan);
        let vars = fan.ray_count() + 1;
        let m = Monomial(exps[..vars].to_vec());
        let reference = normal_form(&m, &basis).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let random = reduce_monomial_with(&m, &basis, &mut |c: &[usize]| c[rng.gen_range(0..c.len())]).unwrap();
        prop_assert_eq!(&random, &reference);
        prop_assert!(basis.iter().all(|b| !b.plus.divides(&reference)));
        // m and its normal form have the same A-degree
        let a = point_config(fan).matrix();
        prop_assert_eq!(a.mul_vec(&m.to_int_vector()), a.mul_vec(&reference.to_int_vector()));
    }

    #[test]
    fn completion_agrees_with_verification(w in proptest::collection::vec(0i64..=5, 5)) {
        let fan = hirzebruch_f1();
        let order = TermOrder::from_i64s(&w);
        let gens = candidate_groebner_basis(&fan).unwrap();
        let completed = buchberger_complete(&gens, &order, default_degree_cap(&gens)).unwrap();
        prop_assert!(buchberger_verify(&completed, &order).unwrap().verified);
        // the completion reduces every generator to zero
        for g in &gens {
            let g = order.orient(g);
            prop_assert_eq!(normal_form(&g.plus, &completed).unwrap(), normal_form(&g.minus, &completed).unwrap());
        }
    }
}
