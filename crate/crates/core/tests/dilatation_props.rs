use std::f64::consts::{PI, TAU};

use harmconv::dilatation::{
    tilde_omega_general, tilde_omega_left_halfplane, tilde_omega_moebius, tilde_omega_monomial,
};
use harmconv::gallery::sample_points;
use harmconv::{Map, Rational};
use num_complex::Complex64;
use proptest::prelude::*;

fn angle() -> impl Strategy<Value = f64> {
    0.0..TAU
}

fn disk(max: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max, angle()).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn omega() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (angle(), 1u32..=4).prop_map(|(t, n)| Rational::monomial(Complex64::from_polar(1.0, t), n)),
        disk(0.9).prop_map(Rational::moebius),
    ]
}

fn series_gap(gamma: f64, omega: &Rational, closed: &Rational) -> f64 {
    let conv = Map::shear(gamma, omega, 512).unwrap().convolve_f0();
    sample_points(64, 0.8)
        .into_iter()
        .map(|z| (conv.dilatation_at(z).unwrap() - closed.eval(z).unwrap()).norm())
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn monomial_route_matches_series(gamma in angle(), theta in angle(), n in 1u32..=4) {
        let w = Rational::monomial(Complex64::from_polar(1.0, theta), n);
        let closed = tilde_omega_monomial(gamma, theta, n).unwrap();
        prop_assert!(series_gap(gamma, &w, &closed) < 1e-8);
    }

    #[test]
    fn moebius_route_matches_series(gamma in angle(), a in disk(0.9)) {
        let (closed, _) = tilde_omega_moebius(gamma, a).unwrap();
        prop_assert!(series_gap(gamma, &Rational::moebius(a), &closed) < 1e-8);
    }

    #[test]
    fn general_route_matches_series(gamma in angle(), w in omega()) {
        let closed = tilde_omega_general(gamma, &w).unwrap();
        prop_assert!(series_gap(gamma, &w, &closed) < 1e-8);
    }
}

proptest! {
    #[test]
    fn vanishes_at_origin(gamma in angle(), w in omega()) {
        let t = tilde_omega_general(gamma, &w).unwrap();
        prop_assert!(t.power() >= 1);
        prop_assert!(t.eval(Complex64::new(0.0, 0.0)).unwrap().norm() == 0.0);
    }

    #[test]
    fn left_halfplane_route_is_general_at_pi(w in omega()) {
        let left = tilde_omega_left_halfplane(&w).unwrap();
        let general = tilde_omega_general(PI, &w).unwrap();
        for z in sample_points(256, 0.95) {
            let (a, b) = (left.eval(z).unwrap(), general.eval(z).unwrap());
            prop_assert!((a - b).norm() <= 1e-12 * (1.0 + b.norm()));
        }
    }

    #[test]
    fn moebius_factored_form_matches_cleared_fraction(gamma in angle(), a in disk(0.95)) {
        let (factored, fac) = tilde_omega_moebius(gamma, a).unwrap();
        prop_assert!((Complex64::from_polar(1.0, fac.phi).norm() - 1.0).abs() < 1e-15);
        let cleared = tilde_omega_general(gamma, &Rational::moebius(a)).unwrap();
        for z in sample_points(64, 0.95) {
            let (x, y) = (factored.eval(z).unwrap(), cleared.eval(z).unwrap());
            prop_assert!((x - y).norm() <= 1e-10 * (1.0 + y.norm()));
        }
    }

    #[test]
    fn monomial_route_is_unimodular(gamma in angle(), theta in angle(), n in 1u32..=6) {
        let t = tilde_omega_monomial(gamma, theta, n).unwrap();
        for k in 0..1024 {
            let z = Complex64::from_polar(1.0, TAU * k as f64 / 1024.0);
            let Ok(v) = t.eval(z) else { continue };
            if !v.norm().is_finite() || v.norm() > 1e6 {
                continue;
            }
            prop_assert!((v.norm() - 1.0).abs() < 1e-9, "|ω̃| = {} at {z}", v.norm());
        }
    }
}
