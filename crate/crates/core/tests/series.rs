use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use toricmdp::fan::fixtures::{
    hirzebruch_f1, projective_four_space, projective_line, projective_plane, stellar_catalog,
};
use toricmdp::fan::{kahler_cone, point_config, property_star, Fan};
use toricmdp::groebner::{canonical_gamma, indicial_value, unique_index_certificate};
use toricmdp::linalg::IntVector;
use toricmdp::series::{
    default_tau, euler_residual, local_series, tau_dual_basis, torus_cycle_series,
    verify_annihilation, Coordinates, GkzSystem, Region,
};

/// Fans with property (*) and a regular Kähler cone.
fn certified_fans() -> Vec<Fan> {
    let mut fans = vec![projective_line(), projective_plane(), hirzebruch_f1(), projective_four_space()];
    fans.extend(stellar_catalog(&projective_plane(), 15).into_iter().filter(|f| {
        property_star(f).unwrap().holds() && kahler_cone(f).unwrap().is_regular
    }));
    fans
}

fn dual_basis(fan: &Fan) -> Vec<IntVector> {
    tau_dual_basis(fan, &default_tau(&kahler_cone(fan).unwrap()).unwrap()).unwrap()
}

#[test]
fn torus_and_local_series_agree() {
    for fan in certified_fans() {
        let basis = dual_basis(&fan);
        let local = local_series(&fan, &basis, 6).unwrap();
        let region = Region::new(&local.truncation);
        let torus = torus_cycle_series(&point_config(&fan), 6);
        let mut shared = 0;
        for (l, c) in &torus.terms {
            if region.contains(l) {
                assert_eq!(&local.a_coefficient(l), c, "coefficient at {l}");
                shared += 1;
            }
        }
        assert!(shared > 1);
        let back = local.in_coordinates(Coordinates::A).in_coordinates(Coordinates::X);
        assert_eq!(back, local);
    }
}

#[test]
fn indicial_polynomial_vanishes_on_the_monoid() {
    for fan in certified_fans() {
        assert!(unique_index_certificate(&fan).unwrap().passes());
        let basis = dual_basis(&fan);
        let gamma = canonical_gamma(fan.ray_count() + 1);
        let series = local_series(&fan, &basis, 4).unwrap();
        for l in series.terms.keys().filter(|l| !l.is_zero()) {
            assert!(indicial_value(l, &gamma).is_zero(), "indicial value at {l}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_series_are_solutions(fan_idx in 0usize..64, order in 0u32..=6) {
        let fans = certified_fans();
        let fan = &fans[fan_idx % fans.len()];
        let system = GkzSystem::for_fan(fan).unwrap();
        let basis = dual_basis(fan);
        let local = local_series(fan, &basis, order).unwrap();
        let torus = torus_cycle_series(&system.config, order);
        for s in [&local, &torus] {
            prop_assert!(euler_residual(&system, s).iter().all(|r| r.is_zero()));
            let report = verify_annihilation(&system, s, &system.box_generators).unwrap();
            prop_assert!(report.passes());
        }
        for l in local.terms.keys() {
            let c = local.x_coefficient(l);
            prop_assert!(c.is_integer() && !c.is_negative());
        }
        prop_assert_eq!(local.x_coefficient(&IntVector::zeros(fan.ray_count() + 1)), BigRational::from_integer(BigInt::from(1)));
    }
}
