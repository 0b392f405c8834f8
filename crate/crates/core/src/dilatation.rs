//! Closed-form dilatations `ω̃` of `f₀ ∗ f` for a slanted half-plane map `f`
//! with dilatation `ω`.

use num_complex::Complex;
use thiserror::Error;

use crate::polyrat::{quadratic_roots, PolyError, Polynomial, RationalMap};
use crate::scalar::{cis, lex_cmp, real, Scalar};

/// Below this `|1 + conj(a) e^{2iγ}|` the Möbius normalization breaks down.
pub const MOEBIUS_DEGENERACY: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DilatationError {
    #[error("denominator of the dilatation vanishes identically")]
    DegenerateDenominator,
    #[error("Möbius normalization is degenerate: |1 + conj(a) e^(2iγ)| = {modulus}")]
    DegenerateMoebius { modulus: f64 },
    #[error("Möbius parameter |a| = {modulus} is not inside the unit disk")]
    ParameterOutsideDisk { modulus: f64 },
    #[error("monomial degree must be at least 1")]
    ZeroDegree,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `ω̃` for a Möbius dilatation, `-z e^{-i(γ-φ)} (z+A)(z+B)/((1+Āz)(1+B̄z))`.
#[derive(Clone, Debug, PartialEq)]
pub struct MoebiusFactorization<T: Scalar> {
    pub phi: T,
    /// `A ≤ B` in lexicographic `(re, im)` order.
    pub a: Complex<T>,
    pub b: Complex<T>,
    /// Monic `t(z) = (z+A)(z+B)`.
    pub t_coeffs: Polynomial<T>,
}

fn half<T: Scalar>() -> T {
    T::lit(0.5)
}

/// `ω̃ = -e^{-iγ} z (ω² + e^{2iγ}[ω - ½zω'] + ½e^{iγ}ω') / (1 + e^{-2iγ}[ω - ½zω'] + ½e^{-iγ}z²ω')`,
/// cleared of the denominator of `ω` and reduced.
pub fn tilde_omega_general<T: Scalar>(
    gamma: T,
    omega: &RationalMap<T>,
) -> Result<RationalMap<T>, DilatationError> {
    if omega.is_zero() {
        return Ok(RationalMap::zero());
    }
    let (p, q) = omega.to_fraction();
    let r = p.derivative().mul(&q).sub(&p.mul(&q.derivative()));
    let z = Polynomial::monomial(real(T::one()), 1);
    let h = real(half::<T>());
    // PQ - ½zR
    let core = p.mul(&q).sub(&z.mul(&r).scale(h));
    let num = p
        .mul(&p)
        .add(&core.scale(cis(T::lit(2.0) * gamma)))
        .add(&r.scale(cis(gamma) * h));
    let den = q
        .mul(&q)
        .add(&core.scale(cis(-T::lit(2.0) * gamma)))
        .add(&z.mul(&z).mul(&r).scale(cis(-gamma) * h));
    assemble(num, den, 1, -cis(-gamma))
}

/// The `γ = π` case, `z (ω² + [ω - ½zω'] - ½ω') / (1 + [ω - ½zω'] - ½z²ω')`.
pub fn tilde_omega_left_halfplane<T: Scalar>(
    omega: &RationalMap<T>,
) -> Result<RationalMap<T>, DilatationError> {
    if omega.is_zero() {
        return Ok(RationalMap::zero());
    }
    let (p, q) = omega.to_fraction();
    let r = p.derivative().mul(&q).sub(&p.mul(&q.derivative()));
    let z = Polynomial::monomial(real(T::one()), 1);
    let h = real(half::<T>());
    let core = p.mul(&q).sub(&z.mul(&r).scale(h));
    let num = p.mul(&p).add(&core).sub(&r.scale(h));
    let den = q.mul(&q).add(&core).sub(&z.mul(&z).mul(&r).scale(h));
    assemble(num, den, 1, real(T::one()))
}

fn assemble<T: Scalar>(
    num: Polynomial<T>,
    den: Polynomial<T>,
    power: u32,
    unit: Complex<T>,
) -> Result<RationalMap<T>, DilatationError> {
    if den.is_zero() {
        return Err(DilatationError::DegenerateDenominator);
    }
    if num.is_zero() {
        return Ok(RationalMap::zero());
    }
    let map = RationalMap::new(num, den, power, unit)?;
    Ok(map.cancel_common_factors()?)
}

/// `z^{n+1} + e^{(2γ-θ)i}(1 - n/2) z + (n/2) e^{(γ-θ)i}`, the numerator factor of `ω̃` for `ω = e^{iθ}zⁿ`.
pub fn monomial_numerator_factor<T: Scalar>(gamma: T, theta: T, n: u32) -> Polynomial<T> {
    let nh = T::lit(n as f64) * half::<T>();
    let two = T::lit(2.0);
    let mut p = Polynomial::monomial(real(T::one()), n as usize + 1);
    p.set_coeff(1, p.coeff(1) + cis(two * gamma - theta) * (T::one() - nh));
    p.set_coeff(0, p.coeff(0) + cis(gamma - theta) * nh);
    p
}

/// `ω̃` for `ω = e^{iθ}zⁿ`, with common factors cancelled.
pub fn tilde_omega_monomial<T: Scalar>(
    gamma: T,
    theta: T,
    n: u32,
) -> Result<RationalMap<T>, DilatationError> {
    if n == 0 {
        return Err(DilatationError::ZeroDegree);
    }
    let nh = T::lit(n as f64) * half::<T>();
    let two = T::lit(2.0);
    let num = monomial_numerator_factor(gamma, theta, n);
    let mut den = Polynomial::monomial(cis(theta - gamma) * nh, n as usize + 1);
    den.set_coeff(n as usize, den.coeff(n as usize) + cis(theta - two * gamma) * (T::one() - nh));
    den.set_coeff(0, den.coeff(0) + real(T::one()));
    assemble(num, den, n, -cis(two * theta - gamma))
}

/// `ω̃` for `ω = (z + a)/(1 + conj(a) z)` together with its factorization.
pub fn tilde_omega_moebius<T: Scalar>(
    gamma: T,
    a: Complex<T>,
) -> Result<(RationalMap<T>, MoebiusFactorization<T>), DilatationError> {
    if a.norm() >= T::one() {
        return Err(DilatationError::ParameterOutsideDisk {
            modulus: a.norm().to_f64_lossy(),
        });
    }
    let two = T::lit(2.0);
    let e2 = cis(two * gamma);
    let norm = real(T::one()) + a.conj() * e2;
    if norm.norm() < T::tol(MOEBIUS_DEGENERACY) {
        return Err(DilatationError::DegenerateMoebius {
            modulus: norm.norm().to_f64_lossy(),
        });
    }
    let aa = a.norm_sqr();
    let c1 = (a * T::lit(4.0) + e2 * (T::one() + T::lit(3.0) * aa)) / (norm * two);
    let c0 = (a * a * two + a * e2 * two + cis(gamma) * (T::one() - aa)) / (norm * two);
    let mut roots = quadratic_roots(c1, c0);
    roots.sort_by(|x, y| lex_cmp(&-*x, &-*y));
    let (big_a, big_b) = (-roots[0], -roots[1]);
    let phase = norm / (real(T::one()) + a * cis(-two * gamma));
    let phi = phase.arg();
    let one = real(T::one());
    let num = Polynomial::new(vec![big_a, one])?.mul(&Polynomial::new(vec![big_b, one])?);
    let den = Polynomial::new(vec![one, big_a.conj()])?.mul(&Polynomial::new(vec![one, big_b.conj()])?);
    let map = RationalMap::new(num, den, 1, -cis(phi - gamma))?;
    let t_coeffs = Polynomial::new(vec![c0, c1, one])?;
    Ok((
        map,
        MoebiusFactorization {
            phi,
            a: big_a,
            b: big_b,
            t_coeffs,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    type C = Complex<f64>;

    fn rat(num: &[C], den: &[C], power: u32, unit: C) -> RationalMap<f64> {
        RationalMap::new(
            Polynomial::new(num.to_vec()).unwrap(),
            Polynomial::new(den.to_vec()).unwrap(),
            power,
            unit,
        )
        .unwrap()
    }

    fn max_pointwise(a: &RationalMap<f64>, b: &RationalMap<f64>) -> f64 {
        (0..256)
            .map(|k| {
                let z = C::from_polar(0.9 * ((k % 16) as f64 + 1.0) / 16.0, 0.37 * k as f64);
                (a.eval(z).unwrap() - b.eval(z).unwrap()).norm()
            })
            .fold(0.0, f64::max)
    }

    fn example_4_1() -> RationalMap<f64> {
        let i = C::new(0.0, 1.0);
        rat(
            &[i * 0.5, C::new(-0.5, 0.0), C::new(1.0, 0.0)],
            &[C::new(1.0, 0.0), C::new(-0.5, 0.0), -i * 0.5],
            1,
            i,
        )
    }

    #[test]
    fn general_example_4_1() {
        let w = tilde_omega_general(FRAC_PI_2, &RationalMap::monomial(C::new(1.0, 0.0), 1)).unwrap();
        let want = example_4_1();
        assert_eq!(w.power(), 1);
        assert!(w.coefficient_distance(&want).unwrap() < 1e-12);
    }

    #[test]
    fn general_f0_f0_cancels() {
        let w = tilde_omega_general(0.0, &RationalMap::monomial(C::new(-1.0, 0.0), 1)).unwrap();
        let want = rat(&[C::new(0.5, 0.0), C::new(1.0, 0.0)], &[C::new(1.0, 0.0), C::new(0.5, 0.0)], 1, C::new(1.0, 0.0));
        assert_eq!(w.den().degree(), 1);
        assert!(max_pointwise(&w, &want) < 1e-12);
        assert!((w.sup_modulus_on_circle(1.0, 1024).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_dilatation() {
        assert!(tilde_omega_general(1.0, &RationalMap::<f64>::zero()).unwrap().is_zero());
        assert!(tilde_omega_left_halfplane(&RationalMap::<f64>::zero()).unwrap().is_zero());
    }

    #[test]
    fn left_halfplane_examples() {
        let w = tilde_omega_left_halfplane(&RationalMap::monomial(C::new(1.0, 0.0), 1)).unwrap();
        let want = rat(
            &[C::new(-0.5, 0.0), C::new(0.5, 0.0), C::new(1.0, 0.0)],
            &[C::new(1.0, 0.0), C::new(0.5, 0.0), C::new(-0.5, 0.0)],
            1,
            C::new(1.0, 0.0),
        );
        // the displayed form shares the factor (z + 1)
        assert!(max_pointwise(&w, &want) < 1e-12);
        assert_eq!(w.den().degree(), 1);
        assert!(w.coefficient_distance(&want.cancel_common_factors().unwrap()).unwrap() < 1e-12);

        let w = tilde_omega_left_halfplane(&RationalMap::monomial(C::new(-1.0, 0.0), 2)).unwrap();
        let z2 = RationalMap::monomial(C::new(1.0, 0.0), 2);
        assert!(w.coefficient_distance(&z2).unwrap() < 1e-10);
    }

    #[test]
    fn left_halfplane_matches_general() {
        for omega in [
            RationalMap::monomial(C::from_polar(0.7, 1.0), 1),
            RationalMap::moebius(C::new(0.3, -0.4)),
            RationalMap::monomial(C::new(0.0, 1.0), 3),
        ] {
            let a = tilde_omega_left_halfplane(&omega).unwrap();
            let b = tilde_omega_general(PI, &omega).unwrap();
            assert!(max_pointwise(&a, &b) < 1e-12);
        }
    }

    #[test]
    fn monomial_examples() {
        let w = tilde_omega_monomial(FRAC_PI_2, 0.0, 1).unwrap();
        assert!(w.coefficient_distance(&example_4_1()).unwrap() < 1e-12);

        let w = tilde_omega_monomial(PI, PI, 2).unwrap();
        assert!(w.coefficient_distance(&RationalMap::monomial(C::new(1.0, 0.0), 2)).unwrap() < 1e-10);

        let w = tilde_omega_monomial(0.0, PI, 1).unwrap();
        let g = tilde_omega_general(0.0, &RationalMap::monomial(C::new(-1.0, 0.0), 1)).unwrap();
        assert!(max_pointwise(&w, &g) < 1e-12);
        assert!(matches!(tilde_omega_monomial(0.0, 0.0, 0), Err(DilatationError::ZeroDegree)));
    }

    #[test]
    fn monomial_matches_general() {
        for (gamma, theta, n) in [(0.3, 1.2, 1), (2.0, -0.4, 2), (4.0, 2.5, 3), (1.0, 0.0, 5)] {
            let a = tilde_omega_monomial(gamma, theta, n).unwrap();
            let b = tilde_omega_general(gamma, &RationalMap::monomial(cis(theta), n)).unwrap();
            assert!(max_pointwise(&a, &b) < 1e-12, "{gamma} {theta} {n}");
        }
    }

    #[test]
    fn monomial_is_unimodular_on_circle() {
        let w = tilde_omega_monomial(0.9, 2.1, 3).unwrap();
        for k in 0..1024 {
            let z = cis(2.0 * PI * k as f64 / 1024.0);
            if let Ok(v) = w.eval(z) {
                assert!((v.norm() - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn moebius_examples() {
        let gamma = 0.7;
        let (_, f) = tilde_omega_moebius(gamma, C::new(0.0, 0.0)).unwrap();
        assert!((f.a + f.b - cis(2.0 * gamma) * 0.5).norm() < 1e-12);
        assert!((f.a * f.b - cis(gamma) * 0.5).norm() < 1e-12);

        let (_, f) = tilde_omega_moebius(0.0, C::new(0.0, 0.0)).unwrap();
        assert!(f.t_coeffs.max_abs_diff(&Polynomial::from_real(&[0.5, 0.5, 1.0]).unwrap()) < 1e-15);
        assert!(((f.a * f.b).norm() - 0.5).abs() < 1e-12);

        let (_, f) = tilde_omega_moebius(0.0, C::new(0.5, 0.0)).unwrap();
        assert!(((f.a * f.b).norm() - 0.75).abs() < 1e-12);
    }

    #[test]
    fn moebius_matches_general() {
        for (gamma, a) in [(0.0, C::new(0.5, 0.0)), (1.3, C::new(-0.2, 0.6)), (4.4, C::new(0.7, -0.1))] {
            let (map, f) = tilde_omega_moebius(gamma, a).unwrap();
            let g = tilde_omega_general(gamma, &RationalMap::moebius(a)).unwrap();
            assert!(max_pointwise(&map, &g) < 1e-10);
            let expanded = Polynomial::from_roots(&[-f.a, -f.b]);
            assert!(expanded.max_abs_diff(&f.t_coeffs) < 1e-10);
            let want = (C::new(1.0, 0.0) + a.conj() * cis(2.0 * gamma)) / (C::new(1.0, 0.0) + a * cis(-2.0 * gamma));
            assert!((cis(f.phi) - want).norm() < 1e-12);
            assert!(lex_cmp(&f.a, &f.b).is_le());
        }
    }

    #[test]
    fn moebius_errors() {
        // 1 + conj(a) e^{2iγ} = 0 needs |a| = 1, so it is rejected as outside the disk
        assert!(matches!(
            tilde_omega_moebius(0.0, C::new(-1.0, 0.0)),
            Err(DilatationError::ParameterOutsideDisk { .. })
        ));
        assert!(tilde_omega_moebius(0.0, C::new(-1.0 + 1e-13, 0.0)).is_err());
    }
}
