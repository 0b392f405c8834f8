use std::f64::consts::TAU;

use harmconv::criteria::{
    claim_a_identity_residual, cond_10a, theorem1_check, theorem2_check, v_value, z0_closed, z0_from_roots,
    MoebiusParams,
};
use harmconv::dilatation::{monomial_numerator_factor, tilde_omega_moebius};
use harmconv::verify::check_local_univalence;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn angle() -> impl Strategy<Value = f64> {
    0.0..TAU
}

fn disk(max: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max, angle()).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn claim_a_root_location(a in disk(0.999), b in disk(3.0)) {
        prop_assume!((a * b).norm() < 1.0 - 1e-9);
        prop_assume!((b.norm() - 1.0).abs() > 1e-6);
        prop_assert!(claim_a_identity_residual(a, b) < 1e-10 * (1.0 + b.norm_sqr()).powi(2));
        let z0 = z0_from_roots(a, b).unwrap();
        prop_assume!((z0.norm() - 1.0).abs() > 1e-9);
        prop_assert_eq!(b.norm() <= 1.0, z0.norm() <= 1.0, "A = {}, B = {}, z0 = {}", a, b, z0);
    }

    #[test]
    fn first_degree_roots_in_closed_disk(gamma in angle(), theta in angle()) {
        let t = monomial_numerator_factor(gamma, theta, 1);
        for r in t.roots().unwrap().roots {
            prop_assert!(r.norm() <= 1.0 + 1e-9);
        }
        prop_assert!(theorem1_check(gamma, theta, 1).unwrap().all_roots_in_disk);
    }
}

#[test]
fn claim_b_z0_location_matches_condition() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let (mut compared, mut mismatches) = (0, Vec::new());
    for _ in 0..100_000 {
        let a = Complex64::from_polar(0.999 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU));
        let p = MoebiusParams::new(a, rng.gen_range(0.0..TAU)).unwrap();
        if v_value(&p).abs() < 1e-6 {
            continue;
        }
        let z0 = z0_closed(&p).unwrap();
        if (z0.norm() - 1.0).abs() < 1e-9 {
            continue;
        }
        compared += 1;
        if (z0.norm() <= 1.0) != cond_10a(&p) {
            mismatches.push((p.a(), p.gamma(), z0.norm()));
        }
    }
    assert!(compared > 90_000);
    assert!(mismatches.is_empty(), "{} mismatches, e.g. {:?}", mismatches.len(), &mismatches[..mismatches.len().min(3)]);
}

#[test]
fn applicable_moebius_parameters_are_locally_univalent() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut tested = 0;
    while tested < 12 {
        let a = Complex64::from_polar(0.95 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU));
        let p = MoebiusParams::new(a, rng.gen_range(0.0..TAU)).unwrap();
        if !theorem2_check(&p).unwrap().theorem2_applicable {
            continue;
        }
        tested += 1;
        let (w, _) = tilde_omega_moebius(p.gamma(), a).unwrap();
        let lu = check_local_univalence(&w, 0.995, 201, 201, 4096).unwrap();
        assert!(lu.sup_omega_tilde_interior < 1.0, "a = {a}, γ = {}: {lu:?}", p.gamma());
        assert_eq!(lu.poles_in_disk, 0);
    }
}
