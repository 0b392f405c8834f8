use num_complex::Complex;
use num_traits::Zero;

use super::{PolyError, Polynomial};
use crate::scalar::{cis, real, Scalar};
use crate::series::PowerSeries;

/// `|den(z)|` at or below this is treated as a pole.
pub const POLE_EPS: f64 = 1e-13;
/// Roots of numerator and denominator closer than this are cancelled.
pub const CANCEL_TOL: f64 = 1e-8;
pub const UNIT_TOL: f64 = 1e-12;
/// Minimum number of samples accepted by [`RationalMap::sup_modulus_on_circle`].
pub const MIN_CIRCLE_SAMPLES: usize = 256;
/// A denominator root this close to the sampling circle is rejected.
pub const CIRCLE_POLE_MARGIN: f64 = 1e-6;

/// `unit · z^power · num(z) / den(z)`.
///
/// Normalised on construction: low-order zeros of `num` move into `power`,
/// and when `den(0) ≠ 0` the denominator is scaled so that `den(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap<T: Scalar> {
    num: Polynomial<T>,
    den: Polynomial<T>,
    power: u32,
    unit: Complex<T>,
}

impl<T: Scalar> RationalMap<T> {
    pub fn new(
        num: Polynomial<T>,
        den: Polynomial<T>,
        power: u32,
        unit: Complex<T>,
    ) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DegenerateDenominator);
        }
        if (unit.norm() - T::one()).abs() > T::tol(UNIT_TOL) {
            return Err(PolyError::NonUnimodularPrefactor {
                modulus: unit.norm().to_f64_lossy(),
            });
        }
        Ok(Self::normalized(num, den, power, unit))
    }

    fn normalized(num: Polynomial<T>, den: Polynomial<T>, power: u32, unit: Complex<T>) -> Self {
        let mut num = num.trimmed();
        let mut den = den.trimmed();
        let mut power = power as usize;
        if num.is_zero() {
            return Self {
                num: Polynomial::constant(Complex::zero()),
                den: Polynomial::one(),
                power: 0,
                unit: real(T::one()),
            };
        }
        let kn = num.low_order_zeros();
        num = num.shift_down(kn);
        power += kn;
        let kd = den.low_order_zeros().min(power);
        den = den.shift_down(kd);
        power -= kd;
        let d0 = den.coeff(0);
        if !d0.is_zero() {
            let s = d0.inv();
            num = num.scale(s);
            den = den.scale(s);
            den.set_coeff(0, real(T::one()));
        }
        Self {
            num,
            den,
            power: power as u32,
            unit,
        }
    }

    pub fn from_polynomial(p: Polynomial<T>) -> Self {
        Self::normalized(p, Polynomial::one(), 0, real(T::one()))
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::constant(Complex::zero()))
    }

    /// `c · z^n`.
    pub fn monomial(c: Complex<T>, n: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let (r, arg) = c.to_polar();
        Self::normalized(Polynomial::constant(real(r)), Polynomial::one(), n, cis(arg))
    }

    /// Disk automorphism `(z + a) / (1 + conj(a) z)`.
    pub fn moebius(a: Complex<T>) -> Self {
        let num = Polynomial::from_vec(vec![a, real(T::one())]);
        let den = Polynomial::from_vec(vec![real(T::one()), a.conj()]);
        Self::normalized(num, den, 0, real(T::one()))
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn unit(&self) -> Complex<T> {
        self.unit
    }

    /// `unit · num`, the numerator with the phase folded in.
    pub fn scaled_numerator(&self) -> Polynomial<T> {
        self.num.scale(self.unit)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Single fraction `P/Q` with `P = unit · z^power · num` and `Q = den`.
    pub fn to_fraction(&self) -> (Polynomial<T>, Polynomial<T>) {
        (
            self.scaled_numerator().shift_up(self.power as usize),
            self.den.clone(),
        )
    }

    pub fn eval(&self, z: Complex<T>) -> Result<Complex<T>, PolyError> {
        let d = self.den.eval(z);
        if d.norm() <= T::tol(POLE_EPS) {
            return Err(PolyError::NearPole {
                at: [z.re.to_f64_lossy(), z.im.to_f64_lossy()],
            });
        }
        Ok(self.unit * z.powu(self.power) * self.num.eval(z) / d)
    }

    /// Poles (denominator roots); empty for a polynomial map.
    pub fn poles(&self) -> Result<Vec<Complex<T>>, PolyError> {
        if self.den.degree() == 0 {
            return Ok(Vec::new());
        }
        Ok(self.den.roots()?.roots)
    }

    /// Number of poles with `|p| < bound`.
    pub fn poles_within(&self, bound: T) -> Result<usize, PolyError> {
        Ok(self.poles()?.iter().filter(|p| p.norm() < bound).count())
    }

    /// `max |r(radius·e^{iθ})|` over `samples` equally spaced angles.
    pub fn sup_modulus_on_circle(&self, radius: T, samples: usize) -> Result<T, PolyError> {
        if samples < MIN_CIRCLE_SAMPLES {
            return Err(PolyError::TooFewSamples { samples });
        }
        let margin = T::tol(CIRCLE_POLE_MARGIN);
        if let Some(p) = self
            .poles()?
            .into_iter()
            .find(|p| (p.norm() - radius).abs() < margin)
        {
            return Err(PolyError::NearPole {
                at: [p.re.to_f64_lossy(), p.im.to_f64_lossy()],
            });
        }
        let step = T::TAU() / T::lit(samples as f64);
        let mut best = T::zero();
        for j in 0..samples {
            let z = Complex::from_polar(radius, step * T::lit(j as f64));
            let v = self.eval(z)?.norm();
            if v > best {
                best = v;
            }
        }
        Ok(best)
    }

    /// Cancels numerator/denominator factor pairs whose roots agree to `1e-8`.
    pub fn cancel_common_factors(&self) -> Result<Self, PolyError> {
        if self.num.degree() == 0 || self.den.degree() == 0 {
            return Ok(self.clone());
        }
        let num_roots = self.num.roots()?.roots;
        let mut den_roots: Vec<Option<Complex<T>>> =
            self.den.roots()?.roots.into_iter().map(Some).collect();
        let tol = T::tol(CANCEL_TOL);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for rn in num_roots {
            let hit = den_roots
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.map(|r| (i, (r - rn).norm())))
                .filter(|&(_, dist)| dist < tol * T::one().max(rn.norm()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
            if let Some((i, _)) = hit {
                let rd = den_roots[i].take().expect("unmatched root");
                num = num.deflate(rn);
                den = den.deflate(rd);
            }
        }
        Ok(Self::normalized(num, den, self.power, self.unit))
    }

    /// Taylor series about the origin; requires `den(0) ≠ 0`.
    pub fn to_series(&self, order: usize) -> Result<PowerSeries<T>, PolyError> {
        let (p, q) = self.to_fraction();
        let inv = q
            .to_series(order)
            .reciprocal()
            .map_err(|_| PolyError::PoleAtOrigin)?;
        Ok(p.to_series(order).mul(&inv))
    }

    /// Coefficient distance between two maps in normal form, comparing
    /// `unit·num` and `den`. `None` when the `z`-powers differ.
    pub fn coefficient_distance(&self, other: &Self) -> Option<T> {
        if self.power != other.power {
            return None;
        }
        let a = self.scaled_numerator().max_abs_diff(&other.scaled_numerator());
        let b = self.den.max_abs_diff(&other.den);
        Some(a.max(b))
    }
}
