//! Scalar criteria for univalence and directional convexity of `f₀ ∗ f`.
//!
//! For the Möbius dilatation `ω = (z + a)/(1 + ā z)` everything is phrased in
//! terms of `a = |a|e^{iθ}` and `γ`.

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dilatation::{
    monomial_numerator_factor, tilde_omega_moebius, tilde_omega_monomial, DilatationError,
    MOEBIUS_DEGENERACY,
};
use crate::polyrat::{PolyError, RationalMap};
use crate::scalar::{cis, real, wrap_angle, Scalar};

/// Slack on the non-strict ellipse inequalities.
pub const ELLIPSE_SLACK: f64 = 1e-12;
/// Tolerance on each equation of the `|AB| = 1` locus.
pub const LOCUS_TOL: f64 = 1e-10;
/// Below this `|v|` (or `|1 - |AB|²|`) the point `z₀` is undefined.
pub const BOUNDARY_EPS: f64 = 1e-12;
pub const ANGLE_TOL: f64 = 1e-12;
pub const BOUNDARY_SAMPLES: usize = 4096;
pub const WITNESS_GRID: usize = 400;
pub const WITNESS_RADIUS: f64 = 0.999;
pub const ASCENT_STEPS: usize = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CriteriaError {
    #[error("|a| = {modulus} is not inside the unit disk")]
    ParameterOutsideDisk { modulus: f64 },
    #[error("z0 is undefined on the |AB| = 1 locus (denominator {denominator})")]
    BoundaryCase { denominator: f64 },
    #[error("no point with |ω̃| > 1 found (best {best})")]
    WitnessNotFound { best: f64 },
    #[error("degree must be at least {min}, got {n}")]
    DegreeTooSmall { n: u32, min: u32 },
    #[error(transparent)]
    Dilatation(#[from] DilatationError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `a = |a|e^{iθ}` with `|a| < 1`, and the slant `γ ∈ [0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MoebiusParams<T: Scalar> {
    a: Complex<T>,
    theta: T,
    gamma: T,
}

impl<T: Scalar> MoebiusParams<T> {
    pub fn new(a: Complex<T>, gamma: T) -> Result<Self, CriteriaError> {
        let theta = if a.is_zero() { T::zero() } else { a.arg() };
        Self::checked(a, theta, gamma)
    }

    /// From `|a|`, `θ` and `γ`; `θ` is kept as given.
    pub fn from_polar(modulus: T, theta: T, gamma: T) -> Result<Self, CriteriaError> {
        Self::checked(Complex::from_polar(modulus, theta), theta, gamma)
    }

    fn checked(a: Complex<T>, theta: T, gamma: T) -> Result<Self, CriteriaError> {
        if !(a.norm() < T::one()) {
            return Err(CriteriaError::ParameterOutsideDisk {
                modulus: a.norm().to_f64_lossy(),
            });
        }
        Ok(Self {
            a,
            theta,
            gamma: wrap_angle(gamma),
        })
    }

    pub fn a(&self) -> Complex<T> {
        self.a
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    fn modulus(&self) -> T {
        self.a.norm()
    }

    /// `θ - γ/2`.
    fn psi(&self) -> T {
        self.theta - self.gamma * T::lit(0.5)
    }
}

/// `v(a) = 4|a|²cos(2θ-γ) + 4|a|cos(θ+γ) - 8|a|cos(θ-2γ) - 3 - 5|a|²`.
pub fn v_value<T: Scalar>(p: &MoebiusParams<T>) -> T {
    let (r, th, g) = (p.modulus(), p.theta, p.gamma);
    let two = T::lit(2.0);
    T::lit(4.0) * r * r * (two * th - g).cos() + T::lit(4.0) * r * (th + g).cos()
        - T::lit(8.0) * r * (th - two * g).cos()
        - T::lit(3.0)
        - T::lit(5.0) * r * r
}

/// `v(a)` as `1 - (|a|cos ψ + 2cos(3γ/2))² - (3|a|sin ψ + 2sin(3γ/2))²`, `ψ = θ - γ/2`.
pub fn v_completed_square<T: Scalar>(p: &MoebiusParams<T>) -> T {
    let (r, psi) = (p.modulus(), p.psi());
    let g3 = T::lit(1.5) * p.gamma;
    let two = T::lit(2.0);
    let x = r * psi.cos() + two * g3.cos();
    let y = T::lit(3.0) * r * psi.sin() + two * g3.sin();
    T::one() - x * x - y * y
}

/// `u(a) = 6a²e^{-iγ} + 8ae^{iγ} - 4āe^{2iγ} - 3|a|² + 2e^{3iγ} - 1`.
pub fn u_value<T: Scalar>(p: &MoebiusParams<T>) -> Complex<T> {
    let (a, g) = (p.a, p.gamma);
    a * a * cis(-g) * T::lit(6.0) + a * cis(g) * T::lit(8.0)
        - a.conj() * cis(T::lit(2.0) * g) * T::lit(4.0)
        - real(T::lit(3.0) * a.norm_sqr())
        + cis(T::lit(3.0) * g) * T::lit(2.0)
        - real(T::one())
}

/// `|a|²(cos²ψ + 9 sin²ψ) ≤ 1`.
pub fn cond_10a<T: Scalar>(p: &MoebiusParams<T>) -> bool {
    ellipse_lhs(p) <= T::one() + T::tol(ELLIPSE_SLACK)
}

fn ellipse_lhs<T: Scalar>(p: &MoebiusParams<T>) -> T {
    let (r, psi) = (p.modulus(), p.psi());
    let (s, c) = psi.sin_cos();
    r * r * (c * c + T::lit(9.0) * s * s)
}

/// `|a|cos ψ = -cos(3γ/2)` and `3|a|sin ψ = -sin(3γ/2)`.
pub fn cond_11<T: Scalar>(p: &MoebiusParams<T>) -> bool {
    let (r, psi) = (p.modulus(), p.psi());
    let g3 = T::lit(1.5) * p.gamma;
    let tol = T::tol(LOCUS_TOL);
    (r * psi.cos() + g3.cos()).abs() <= tol
        && (T::lit(3.0) * r * psi.sin() + g3.sin()).abs() <= tol
}

/// `|AB|` from the constant term of `t(z)`.
pub fn ab_modulus<T: Scalar>(p: &MoebiusParams<T>) -> Result<T, CriteriaError> {
    let (a, g) = (p.a, p.gamma);
    let two = T::lit(2.0);
    let e2 = cis(two * g);
    let norm = real(T::one()) + a.conj() * e2;
    if norm.norm() < T::tol(MOEBIUS_DEGENERACY) {
        return Err(DilatationError::DegenerateMoebius {
            modulus: norm.norm().to_f64_lossy(),
        }
        .into());
    }
    let c0 = a * a * two + a * e2 * two + cis(g) * (T::one() - a.norm_sqr());
    Ok(c0.norm() / (two * norm.norm()))
}

/// `z₀ = e^{-iγ} u(a) / v(a)`.
pub fn z0_closed<T: Scalar>(p: &MoebiusParams<T>) -> Result<Complex<T>, CriteriaError> {
    let v = v_value(p);
    if v.abs() <= T::tol(BOUNDARY_EPS) {
        return Err(CriteriaError::BoundaryCase {
            denominator: v.to_f64_lossy(),
        });
    }
    Ok(cis(-p.gamma) * u_value(p) / v)
}

/// `z₀ = (A(|B|² - 1) + B(|A|² - 1)) / (1 - |AB|²)`.
pub fn z0_from_roots<T: Scalar>(a: Complex<T>, b: Complex<T>) -> Result<Complex<T>, CriteriaError> {
    let den = T::one() - (a * b).norm_sqr();
    if den.abs() <= T::tol(BOUNDARY_EPS) {
        return Err(CriteriaError::BoundaryCase {
            denominator: den.to_f64_lossy(),
        });
    }
    Ok((a * (b.norm_sqr() - T::one()) + b * (a.norm_sqr() - T::one())) / den)
}

/// `| |u|² - |v|² - 8(|a|cos ψ + cos(3γ/2))²((cos²ψ + 9sin²ψ)|a|² - 1) |`.
pub fn factorization_residual<T: Scalar>(p: &MoebiusParams<T>) -> T {
    let u = u_value(p);
    let v = v_value(p);
    let lhs = u.norm_sqr() - v * v;
    let k = p.modulus() * p.psi().cos() + (T::lit(1.5) * p.gamma).cos();
    let rhs = T::lit(8.0) * k * k * (ellipse_lhs(p) - T::one());
    (lhs - rhs).abs()
}

/// Residual of `|A(|B|²-1) + B(|A|²-1)|² - (1-|AB|²)² = -(1-|A|²)(1-|B|²)|1-AB̄|²`.
pub fn claim_a_identity_residual<T: Scalar>(a: Complex<T>, b: Complex<T>) -> T {
    let one = T::one();
    let lhs = (a * (b.norm_sqr() - one) + b * (a.norm_sqr() - one)).norm_sqr()
        - (one - (a * b).norm_sqr()).powi(2);
    let rhs = -(one - a.norm_sqr()) * (one - b.norm_sqr()) * (real(one) - a * b.conj()).norm_sqr();
    (lhs - rhs).abs()
}

/// Outcome of [`theorem1_check`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Theorem1Check {
    pub applicable: bool,
    /// Zero of the Cohn-reduced numerator factor (`n = 1` only).
    pub witness: Option<[f64; 2]>,
    pub witness_modulus: Option<f64>,
    /// `max |ω̃|` over 4096 samples of the unit circle.
    pub sup_boundary: f64,
    pub all_roots_in_disk: bool,
}

/// Checks the monomial case `ω = e^{iθ}zⁿ`.
pub fn theorem1_check<T: Scalar>(gamma: T, theta: T, n: u32) -> Result<Theorem1Check, CriteriaError> {
    if n < 1 {
        return Err(CriteriaError::DegreeTooSmall { n, min: 1 });
    }
    let map = tilde_omega_monomial(gamma, theta, n)?;
    let t = monomial_numerator_factor(gamma, theta, n);
    let all_roots_in_disk = t.zeros_in_closed_disk()?.all_inside;
    let witness = (n == 1).then(|| {
        cis(-gamma) * T::lit(1.0 / 3.0) - cis(T::lit(2.0) * gamma - theta) * T::lit(2.0 / 3.0)
    });
    Ok(Theorem1Check {
        applicable: n <= 2,
        witness: witness.map(to_pair),
        witness_modulus: witness.map(|w| w.norm().to_f64_lossy()),
        sup_boundary: boundary_sup(&map, BOUNDARY_SAMPLES).to_f64_lossy(),
        all_roots_in_disk,
    })
}

/// `max |r|` over `samples` points of the unit circle, skipping exact poles.
pub fn boundary_sup<T: Scalar>(map: &RationalMap<T>, samples: usize) -> T {
    let step = T::TAU() / T::lit(samples as f64);
    (0..samples)
        .filter_map(|j| map.eval(cis(step * T::lit(j as f64))).ok())
        .map(|v| v.norm())
        .fold(T::zero(), T::max)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryFlags {
    pub c31: bool,
    pub c32: bool,
    pub c33: bool,
}

/// Scalar quantities deciding the Möbius case.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub a: [f64; 2],
    pub theta: f64,
    pub gamma: f64,
    pub v: f64,
    pub u: [f64; 2],
    pub z0_closed: Option<[f64; 2]>,
    pub z0_roots: Option<[f64; 2]>,
    #[serde(rename = "AB_modulus")]
    pub ab_modulus: f64,
    pub cond_10a: bool,
    pub cond_11: bool,
    pub theorem2_applicable: bool,
    /// Both zeros of `t` in the closed disk, one strictly inside; only when applicable.
    pub roots_in_disk: Option<bool>,
    pub corollary_flags: CorollaryFlags,
    /// `b₁ = g'(0) ≠ 0` for the sheared map, so it is not normalized in the usual class.
    pub b1_warning: bool,
}

fn to_pair<T: Scalar>(z: Complex<T>) -> [f64; 2] {
    [z.re.to_f64_lossy(), z.im.to_f64_lossy()]
}

pub fn theorem2_check<T: Scalar>(p: &MoebiusParams<T>) -> Result<CriterionReport, CriteriaError> {
    let (_, fact) = tilde_omega_moebius(p.gamma, p.a)?;
    let ab = ab_modulus(p)?;
    let c10 = cond_10a(p);
    let c11 = cond_11(p);
    let applicable = c10 && !c11;
    let roots_in_disk = if applicable {
        let loc = fact.t_coeffs.zeros_in_closed_disk()?;
        let strictly = fact.a.norm() < T::one() || fact.b.norm() < T::one();
        Some(loc.all_inside && strictly)
    } else {
        None
    };
    Ok(CriterionReport {
        a: to_pair(p.a),
        theta: p.theta.to_f64_lossy(),
        gamma: p.gamma.to_f64_lossy(),
        v: v_value(p).to_f64_lossy(),
        u: to_pair(u_value(p)),
        z0_closed: z0_closed(p).ok().map(to_pair),
        z0_roots: z0_from_roots(fact.a, fact.b).ok().map(to_pair),
        ab_modulus: ab.to_f64_lossy(),
        cond_10a: c10,
        cond_11: c11,
        theorem2_applicable: applicable,
        roots_in_disk,
        corollary_flags: corollary_checks(p),
        b1_warning: !p.a.is_zero(),
    })
}

fn angle_is<T: Scalar>(gamma: T, target: T) -> bool {
    let d = wrap_angle(gamma - target);
    d.min(T::TAU() - d) <= T::tol(ANGLE_TOL)
}

pub fn corollary_checks<T: Scalar>(p: &MoebiusParams<T>) -> CorollaryFlags {
    let g = p.gamma;
    let third = T::TAU() / T::lit(3.0);
    let limit = T::one() + T::tol(ELLIPSE_SLACK);
    let (x, y) = (p.a.re, p.a.im);
    let nine = T::lit(9.0);
    CorollaryFlags {
        c31: [T::zero(), third, third + third].iter().any(|&t| angle_is(g, t)) && cond_10a(p),
        c32: angle_is(g, T::zero()) && x * x + nine * y * y <= limit,
        c33: angle_is(g, T::PI()) && y != T::zero() && nine * x * x + y * y <= limit,
    }
}

/// Point of largest `|r(z)|` for `|z| ≤ 0.999`: polar grid search, then coordinate ascent.
pub fn max_modulus_search<T: Scalar>(map: &RationalMap<T>) -> (Complex<T>, T) {
    let r_max = T::lit(WITNESS_RADIUS);
    let size = |z: Complex<T>| map.eval(z).map(|v| v.norm()).unwrap_or(T::zero());
    let dr = r_max / T::lit(WITNESS_GRID as f64);
    let dt = T::TAU() / T::lit(WITNESS_GRID as f64);
    let point = |r: T, t: T| Complex::from_polar(r, t);
    let pick = |acc: (T, T, T), x: (T, T, T)| if x.0 > acc.0 { x } else { acc };
    let (mut best, mut r, mut t) = (0..WITNESS_GRID)
        .into_par_iter()
        .map(|i| {
            let r = dr * T::lit((i + 1) as f64);
            (0..WITNESS_GRID)
                .map(|j| {
                    let t = dt * T::lit(j as f64);
                    (size(point(r, t)), r, t)
                })
                .fold((T::zero(), r, T::zero()), pick)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((T::zero(), T::zero(), T::zero()), pick);

    let (mut sr, mut st) = (dr, dt);
    for _ in 0..ASCENT_STEPS {
        for (cr, ct) in [(r + sr, t), (r - sr, t), (r, t + st), (r, t - st)] {
            let cr = cr.min(r_max).max(T::zero());
            let v = size(point(cr, ct));
            if v > best {
                best = v;
                r = cr;
                t = ct;
            }
        }
        sr = sr * T::lit(0.5);
        st = st * T::lit(0.5);
    }
    (point(r, t), best)
}

/// Evidence that the monomial case fails for `ω = -zⁿ`, `n ≥ 3`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlaschkeWitness {
    pub n: u32,
    pub gamma: f64,
    /// Product of the moduli of all zeros of the numerator factor, `n/2`.
    pub root_moduli_product: f64,
    pub witness: [f64; 2],
    pub witness_modulus_of_omega_tilde: f64,
}

pub fn blaschke_counterexample<T: Scalar>(n: u32, gamma: T) -> Result<BlaschkeWitness, CriteriaError> {
    if n < 3 {
        return Err(CriteriaError::DegreeTooSmall { n, min: 3 });
    }
    let theta = T::PI();
    let map = tilde_omega_monomial(gamma, theta, n)?;
    let product = monomial_numerator_factor(gamma, theta, n)
        .roots()?
        .product_of_moduli();

    let (z, best) = max_modulus_search(&map);
    if !(best > T::one()) {
        return Err(CriteriaError::WitnessNotFound {
            best: best.to_f64_lossy(),
        });
    }
    Ok(BlaschkeWitness {
        n,
        gamma: wrap_angle(gamma).to_f64_lossy(),
        root_moduli_product: product.to_f64_lossy(),
        witness: to_pair(z),
        witness_modulus_of_omega_tilde: best.to_f64_lossy(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    type C = Complex<f64>;

    fn params(a: C, gamma: f64) -> MoebiusParams<f64> {
        MoebiusParams::new(a, gamma).unwrap()
    }

    fn locus_point() -> MoebiusParams<f64> {
        MoebiusParams::from_polar(1.0 / 3.0, FRAC_PI_3 / 2.0 - FRAC_PI_2, FRAC_PI_3).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(MoebiusParams::new(C::new(1.0, 0.0), 0.0).is_err());
        let p = params(C::new(0.0, 0.0), 7.0);
        assert_eq!(p.theta(), 0.0);
        assert!((p.gamma() - (7.0 - 2.0 * PI)).abs() < 1e-15);
        assert!((params(C::new(0.0, 0.5), 0.0).theta() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn v_examples() {
        assert!((v_value(&params(C::new(0.0, 0.0), 1.3)) + 3.0).abs() < 1e-12);
        assert!(v_value(&locus_point()).abs() < 1e-12);
        let p = params(C::new(0.5, 0.0), 0.0);
        assert!((v_value(&p) + 5.25).abs() < 1e-12);
        for p in [p, locus_point(), params(C::new(-0.3, 0.7), 2.2)] {
            assert!((v_value(&p) - v_completed_square(&p)).abs() < 1e-10);
        }
    }

    #[test]
    fn u_examples() {
        assert!((u_value(&params(C::new(0.0, 0.0), 0.0)) - C::new(1.0, 0.0)).norm() < 1e-12);
        assert!((u_value(&params(C::new(0.0, 0.0), FRAC_PI_3)) - C::new(-3.0, 0.0)).norm() < 1e-12);
        assert!((u_value(&params(C::new(0.5, 0.0), 0.0)) - C::new(3.75, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn condition_examples() {
        assert!(cond_10a(&params(C::new(0.0, 0.0), 2.0)));
        assert!(cond_10a(&params(C::new(0.95, 0.0), 0.0)));
        assert!(!cond_10a(&params(C::new(0.0, 0.9), 0.0)));
        assert!(cond_10a(&locus_point()));

        assert!(!cond_11(&params(C::new(-0.99, 0.0), 0.0)));
        assert!(cond_11(&locus_point()));
        assert!(!cond_11(&params(C::new(0.0, 0.0), FRAC_PI_2)));
    }

    #[test]
    fn ab_examples() {
        assert!((ab_modulus(&params(C::new(0.0, 0.0), 1.0)).unwrap() - 0.5).abs() < 1e-12);
        assert!((ab_modulus(&params(C::new(0.5, 0.0), 0.0)).unwrap() - 0.75).abs() < 1e-12);
        assert!((ab_modulus(&locus_point()).unwrap() - 1.0).abs() < 1e-9);
        let (_, f) = tilde_omega_moebius(0.4, C::new(0.2, -0.6)).unwrap();
        let p = params(C::new(0.2, -0.6), 0.4);
        assert!((ab_modulus(&p).unwrap() - (f.a * f.b).norm()).abs() < 1e-12);
    }

    #[test]
    fn z0_examples() {
        let z = z0_closed(&params(C::new(0.0, 0.0), 0.0)).unwrap();
        assert!((z - C::new(-1.0 / 3.0, 0.0)).norm() < 1e-12);
        let z = z0_closed(&params(C::new(0.0, 0.0), PI)).unwrap();
        assert!((z - C::new(-1.0, 0.0)).norm() < 1e-12);
        let z = z0_closed(&params(C::new(0.5, 0.0), 0.0)).unwrap();
        assert!((z - C::new(-5.0 / 7.0, 0.0)).norm() < 1e-12);
        assert!(matches!(z0_closed(&locus_point()), Err(CriteriaError::BoundaryCase { .. })));

        assert_eq!(z0_from_roots(C::new(0.0, 0.0), C::new(0.0, 0.0)).unwrap(), C::new(0.0, 0.0));
        let (_, f) = tilde_omega_moebius(0.0, C::new(0.0, 0.0)).unwrap();
        assert!((z0_from_roots(f.a, f.b).unwrap() - C::new(-1.0 / 3.0, 0.0)).norm() < 1e-12);

        let a = cis(0.8);
        let b = C::new(0.3, 0.2);
        let z = z0_from_roots(a, b).unwrap();
        assert!((z.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_residuals() {
        assert!(factorization_residual(&params(C::new(0.0, 0.0), 0.0)) < 1e-12);
        assert!(factorization_residual(&params(C::new(0.5, 0.0), 0.0)) < 1e-12);
        assert!(factorization_residual(&params(C::new(-0.4, 0.8), 5.0)) < 1e-12);
        assert!(claim_a_identity_residual(C::new(0.0, 0.0), C::new(0.0, 0.0)) < 1e-15);
        assert!(claim_a_identity_residual(cis(2.0), C::new(0.5, -0.1)) < 1e-14);
        assert!(claim_a_identity_residual(C::new(1.5, 0.3), C::new(-0.2, 2.0)) < 1e-10);
    }

    #[test]
    fn theorem1_examples() {
        let c = theorem1_check(0.0, 0.0, 1).unwrap();
        assert!(c.applicable && c.all_roots_in_disk);
        let w = c.witness.unwrap();
        assert!((w[0] + 1.0 / 3.0).abs() < 1e-15 && w[1].abs() < 1e-15);
        assert!(c.sup_boundary <= 1.0 + 1e-9);

        let c = theorem1_check(1.1, -2.0, 2).unwrap();
        assert!(c.applicable && c.all_roots_in_disk && c.witness.is_none());
        assert!(c.sup_boundary <= 1.0 + 1e-9);

        let c = theorem1_check(0.0, PI, 3).unwrap();
        assert!(!c.applicable && !c.all_roots_in_disk);
    }

    #[test]
    fn theorem1_witness_is_cohn_zero() {
        for (gamma, theta) in [(0.3, 1.0), (2.5, -0.7), (5.0, 3.0)] {
            let t = monomial_numerator_factor(gamma, theta, 1);
            let reduced = t.cohn_reduce().unwrap();
            let zero = -reduced.coeff(0) / reduced.coeff(1);
            let w = theorem1_check(gamma, theta, 1).unwrap().witness.unwrap();
            assert!((zero - C::new(w[0], w[1])).norm() < 1e-14);
        }
    }

    #[test]
    fn theorem2_examples() {
        let r = theorem2_check(&params(C::new(0.0, 0.0), 1.7)).unwrap();
        assert!(r.theorem2_applicable && r.roots_in_disk == Some(true) && !r.b1_warning);
        let r = theorem2_check(&params(C::new(0.0, 0.9), 0.0)).unwrap();
        assert!(!r.cond_10a && !r.theorem2_applicable && r.b1_warning);
        let r = theorem2_check(&locus_point()).unwrap();
        assert!(r.cond_10a && r.cond_11 && !r.theorem2_applicable);
        assert!(r.z0_closed.is_none());
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"AB_modulus\""));
    }

    #[test]
    fn corollary_examples() {
        assert!(corollary_checks(&params(C::new(0.8, 0.0), 0.0)).c32);
        assert!(corollary_checks(&params(C::new(0.0, 0.5), PI)).c33);
        assert!(!corollary_checks(&params(C::new(0.0, 0.5), 0.0)).c32);
        assert!(!corollary_checks(&params(C::new(0.5, 0.0), PI)).c33);
        assert!(corollary_checks(&params(C::new(0.2, 0.1), 4.0 * PI / 3.0)).c31);
        assert!(corollary_checks(&params(C::new(0.2, 0.1), 2.0 * PI - 1e-13)).c32);
    }

    #[test]
    fn blaschke_examples() {
        let w = blaschke_counterexample(3, 0.0).unwrap();
        assert!((w.root_moduli_product - 1.5).abs() < 1e-8);
        assert!(w.witness_modulus_of_omega_tilde > 1.0);
        assert!(C::new(w.witness[0], w.witness[1]).norm() < 1.0);
        let w = blaschke_counterexample(4, 0.0).unwrap();
        assert!((w.root_moduli_product - 2.0).abs() < 1e-8);
        assert!(matches!(
            blaschke_counterexample(2, 0.0),
            Err(CriteriaError::DegreeTooSmall { .. })
        ));
    }
}
