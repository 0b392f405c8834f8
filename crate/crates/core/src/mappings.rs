//! Harmonic maps `f = h + conj(g)` on the unit disk.
//!
//! Slanted half-plane maps are built by shearing: given `γ` and a dilatation
//! `ω`, the analytic parts satisfy `h + e^{-2iγ} g = z/(1 - e^{iγ} z)` and
//! `g' = ω h'`, so `h' = 1/((1 + e^{-2iγ}ω)(1 - e^{iγ}z)²)` is rational and
//! both parts follow by term-by-term integration.

use num_complex::Complex;
use num_traits::Zero;
use thiserror::Error;

use crate::polyrat::{PolyError, Polynomial, RationalMap};
use crate::scalar::{cis, real, wrap_angle, Scalar};
use crate::series::{PowerSeries, SeriesError};

/// Default truncation order for constructed maps.
pub const DEFAULT_ORDER: usize = 64;
/// Truncation order for high-precision oracle runs.
pub const ORACLE_ORDER: usize = 256;
/// Hard cap used by [`order_for_radius`].
pub const MAX_EVAL_ORDER: usize = 16384;
/// Radius at which a prescribed dilatation is checked to stay below one.
pub const SCHLICHT_RADIUS: f64 = 1.0 - 1e-6;
const SCHLICHT_SAMPLES: usize = 1024;
const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MapError {
    #[error("dilatation is not bounded by one in the disk (sup {sup})")]
    DilatationNotSchlicht { sup: f64 },
    #[error("shear is degenerate: 1 + e^(-2iγ) ω(0) vanishes")]
    DegenerateShear,
    #[error("point {at:?} is outside the unit disk")]
    OutsideDomain { at: [f64; 2] },
    #[error("map is not normalized: {0}")]
    NotNormalized(&'static str),
    #[error("truncation order {order} too small (need at least {min})")]
    OrderTooSmall { order: usize, min: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Smallest order `N ≥ 64` with `N³ r^N / (1 - r) < 1e-10`, capped at 16384.
///
/// Convolved maps near a boundary pole have coefficients growing like `n²`
/// and derivatives like `n³`, so this bounds the truncation error of
/// values and Jacobians on `|z| ≤ r`.
pub fn order_for_radius(r: f64) -> usize {
    let r = r.clamp(0.0, 1.0 - 1e-12);
    let ln_r = r.ln();
    let scale = 1.0 / (1.0 - r);
    (DEFAULT_ORDER..=MAX_EVAL_ORDER)
        .step_by(16)
        .find(|&n| {
            let n = n as f64;
            3.0 * n.ln() + n * ln_r + scale.ln() < (1e-10f64).ln()
        })
        .unwrap_or(MAX_EVAL_ORDER)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicMap<T: Scalar> {
    h: PowerSeries<T>,
    g: PowerSeries<T>,
    gamma: T,
    omega: Option<RationalMap<T>>,
}

/// A source point together with its image.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointImage<T: Scalar> {
    pub z: Complex<T>,
    pub w: Complex<T>,
}

impl<T: Scalar> HarmonicMap<T> {
    /// Assembles a map from its parts, checking `h(0) = g(0) = 0`.
    pub fn from_parts(
        h: PowerSeries<T>,
        g: PowerSeries<T>,
        gamma: T,
        omega: Option<RationalMap<T>>,
    ) -> Result<Self, MapError> {
        let tol = T::tol(NORMALIZATION_TOL);
        if h.coeff(0).norm() > tol || g.coeff(0).norm() > tol {
            return Err(MapError::NotNormalized("h(0) and g(0) must vanish"));
        }
        let order = h.order().min(g.order());
        Ok(Self {
            h: h.with_order(order),
            g: g.with_order(order),
            gamma: wrap_angle(gamma),
            omega,
        })
    }

    /// The canonical right half-plane map `f₀` with `ω = -z`.
    pub fn f0(order: usize) -> Result<Self, MapError> {
        if order < 2 {
            return Err(MapError::OrderTooSmall { order, min: 2 });
        }
        let half = T::lit(0.5);
        let h = (0..=order)
            .map(|n| if n == 0 { T::zero() } else { T::lit((n + 1) as f64) * half })
            .collect::<Vec<_>>();
        let g = (0..=order)
            .map(|n| if n == 0 { T::zero() } else { -T::lit((n - 1) as f64) * half })
            .collect::<Vec<_>>();
        Ok(Self {
            h: PowerSeries::from_real(&h)?,
            g: PowerSeries::from_real(&g)?,
            gamma: T::zero(),
            omega: Some(RationalMap::monomial(real(-T::one()), 1)),
        })
    }

    /// Shear construction onto `{Re(e^{iγ} w) > -1/2}` with dilatation `ω`.
    pub fn shear(gamma: T, omega: &RationalMap<T>, order: usize) -> Result<Self, MapError> {
        if order < 1 {
            return Err(MapError::OrderTooSmall { order, min: 1 });
        }
        check_schlicht(omega)?;
        let rot = cis(-T::lit(2.0) * gamma);
        let (p, q) = omega.to_fraction();
        // h' = Q / D, g' = P / D with D = (Q + e^{-2iγ} P)(1 - e^{iγ} z)²
        let base = q.add(&p.scale(rot));
        if base.coeff(0).norm() <= T::tol(1e-12) {
            return Err(MapError::DegenerateShear);
        }
        let lin = Polynomial::new(vec![real(T::one()), -cis(gamma)])?;
        let d = base.mul(&lin).mul(&lin);
        let inv = d.to_series(order - 1).reciprocal()?;
        let dh = q.to_series(order - 1).mul(&inv);
        let dg = p.to_series(order - 1).mul(&inv);
        Ok(Self {
            h: dh.integrate(),
            g: dg.integrate(),
            gamma: wrap_angle(gamma),
            omega: Some(omega.clone()),
        })
    }

    /// Harmonic (Hadamard) convolution; `γ` of the result is the sum of the inputs'.
    pub fn convolve(&self, other: &Self) -> Self {
        Self {
            h: self.h.hadamard(&other.h),
            g: self.g.hadamard(&other.g),
            gamma: wrap_angle(self.gamma + other.gamma),
            omega: None,
        }
    }

    /// `f₀ ∗ f = (h + z h')/2 + conj((g - z g')/2)`, coefficientwise.
    pub fn convolve_f0(&self) -> Self {
        let half = T::lit(0.5);
        let scale = |s: &PowerSeries<T>, sign: T| {
            PowerSeries::from_vec(
                s.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(n, &c)| c * ((T::one() + sign * T::lit(n as f64)) * half))
                    .collect(),
            )
        };
        Self {
            h: scale(&self.h, T::one()),
            g: scale(&self.g, -T::one()),
            gamma: self.gamma,
            omega: None,
        }
    }

    pub fn h(&self) -> &PowerSeries<T> {
        &self.h
    }

    pub fn g(&self) -> &PowerSeries<T> {
        &self.g
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn omega(&self) -> Option<&RationalMap<T>> {
        self.omega.as_ref()
    }

    pub fn with_omega(mut self, omega: Option<RationalMap<T>>) -> Self {
        self.omega = omega;
        self
    }

    pub fn order(&self) -> usize {
        self.h.order().min(self.g.order())
    }

    /// Co-analytic coefficient `b₁ = g'(0)`; nonzero when `ω(0) ≠ 0`.
    pub fn b1(&self) -> Complex<T> {
        self.g.coeff(1)
    }

    pub fn eval(&self, z: Complex<T>) -> Result<PointImage<T>, MapError> {
        check_domain(z)?;
        Ok(PointImage {
            z,
            w: self.h.eval(z) + self.g.eval(z).conj(),
        })
    }

    /// `J = |h'|² - |g'|²`.
    pub fn jacobian(&self, z: Complex<T>) -> Result<T, MapError> {
        check_domain(z)?;
        let dh = self.h.derivative().eval(z);
        let dg = self.g.derivative().eval(z);
        Ok(dh.norm_sqr() - dg.norm_sqr())
    }

    /// Series dilatation `g'(z)/h'(z)`.
    pub fn dilatation_at(&self, z: Complex<T>) -> Result<Complex<T>, MapError> {
        check_domain(z)?;
        Ok(self.g.derivative().eval(z) / self.h.derivative().eval(z))
    }

    /// `f(r e^{2πij/m})` for `j = 0..m`.
    pub fn eval_on_circle(&self, r: T, m: usize) -> Vec<Complex<T>> {
        let hv = self.h.eval_on_circle(r, m);
        let gv = self.g.eval_on_circle(r, m);
        hv.into_iter().zip(gv).map(|(a, b)| a + b.conj()).collect()
    }

    /// Jacobian on the same circle samples as [`HarmonicMap::eval_on_circle`].
    pub fn jacobian_on_circle(&self, r: T, m: usize) -> Vec<T> {
        let hv = self.h.derivative().eval_on_circle(r, m);
        let gv = self.g.derivative().eval_on_circle(r, m);
        hv.into_iter()
            .zip(gv)
            .map(|(a, b)| a.norm_sqr() - b.norm_sqr())
            .collect()
    }

    /// `max_n |hₙ + e^{-2iγ} gₙ - e^{i(n-1)γ}|`, zero for an exact slanted half-plane map.
    pub fn shear_residual(&self) -> T {
        let rot = cis(-T::lit(2.0) * self.gamma);
        let lhs = self.h.add(&self.g.scale(rot));
        lhs.max_abs_diff(&PowerSeries::geometric(self.gamma, self.order()))
    }

    /// `max |g'(z) - ω(z) h'(z)|` over `samples` points of `|z| = radius`.
    pub fn dilatation_residual(&self, radius: T, samples: usize) -> Result<Option<T>, MapError> {
        let Some(omega) = &self.omega else {
            return Ok(None);
        };
        let dh = self.h.derivative();
        let dg = self.g.derivative();
        let mut worst = T::zero();
        for j in 0..samples {
            let z = Complex::from_polar(radius, T::TAU() * T::lit(j as f64 / samples as f64));
            let r = (dg.eval(z) - omega.eval(z)? * dh.eval(z)).norm();
            worst = worst.max(r);
        }
        Ok(Some(worst))
    }
}

fn check_domain<T: Scalar>(z: Complex<T>) -> Result<(), MapError> {
    if z.norm() >= T::one() {
        return Err(MapError::OutsideDomain {
            at: [z.re.to_f64_lossy(), z.im.to_f64_lossy()],
        });
    }
    Ok(())
}

fn check_schlicht<T: Scalar>(omega: &RationalMap<T>) -> Result<(), MapError> {
    if omega.is_zero() {
        return Ok(());
    }
    let radius = T::lit(SCHLICHT_RADIUS);
    if omega.poles_within(T::one())? > 0 {
        return Err(MapError::DilatationNotSchlicht { sup: f64::INFINITY });
    }
    let sup = omega
        .sup_modulus_on_circle(radius, SCHLICHT_SAMPLES)
        .map_err(|_| MapError::DilatationNotSchlicht { sup: f64::INFINITY })?;
    if sup >= T::one() {
        return Err(MapError::DilatationNotSchlicht {
            sup: sup.to_f64_lossy(),
        });
    }
    Ok(())
}

impl<T: Scalar> Default for PointImage<T> {
    fn default() -> Self {
        Self {
            z: Complex::zero(),
            w: Complex::zero(),
        }
    }
}
