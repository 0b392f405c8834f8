use std::f64::consts::TAU;

use harmconv::mappings::order_for_radius;
use harmconv::verify::check_halfplane_range;
use harmconv::{Map, Rational};
use num_complex::Complex64;
use proptest::prelude::*;

fn angle() -> impl Strategy<Value = f64> {
    0.0..TAU
}

fn disk(max: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max, angle()).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

/// Monomial `e^{iθ}zⁿ` with `n ≤ 2` or Möbius with `|a| ≤ 0.9`.
fn omega() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (angle(), 1u32..=2).prop_map(|(t, n)| Rational::monomial(Complex64::from_polar(1.0, t), n)),
        disk(0.9).prop_map(Rational::moebius),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shear_identity(gamma in angle(), w in omega()) {
        let f = Map::shear(gamma, &w, 64).unwrap();
        prop_assert!(f.shear_residual() < 1e-10);
    }

    #[test]
    fn convolve_f0_matches_definition(gamma in angle(), w in omega()) {
        let f = Map::shear(gamma, &w, 64).unwrap();
        let f0 = Map::f0(64).unwrap();
        let a = f.convolve_f0();
        let b = f0.convolve(&f);
        prop_assert!(a.h().max_abs_diff(b.h()) == 0.0);
        prop_assert!(a.g().max_abs_diff(b.g()) == 0.0);
    }

    #[test]
    fn jacobian_factorises(gamma in angle(), w in omega(), z in disk(0.7)) {
        let f = Map::shear(gamma, &w, 256).unwrap();
        let dh = f.h().derivative().eval(z);
        let expected = dh.norm_sqr() * (1.0 - w.eval(z).unwrap().norm_sqr());
        let j = f.jacobian(z).unwrap();
        prop_assert!((j - expected).abs() <= 1e-9 * (1.0 + expected.abs()));
    }

    #[test]
    fn monomial_maps_have_zero_b1(gamma in angle(), theta in angle(), n in 1u32..5) {
        let f = Map::shear(gamma, &Rational::monomial(Complex64::from_polar(1.0, theta), n), 64).unwrap();
        prop_assert!(f.b1().norm() == 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn sheared_maps_stay_in_half_plane(gamma in angle(), w in omega()) {
        let f = Map::shear(gamma, &w, order_for_radius(0.995)).unwrap();
        prop_assert!(check_halfplane_range(&f, gamma, 0.995, 101, 101).unwrap() > -1e-3);
    }
}
