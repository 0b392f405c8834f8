//! Truncated complex power series on the unit disk.
//!
//! A [`PowerSeries`] of order `N` stores the Taylor coefficients of `z^0..=z^N`.
//! Products truncate to the smaller order; everything else keeps the order
//! the operation implies (derivative drops one, integral adds one).

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;
use rustfft::FftPlanner;
use thiserror::Error;

use crate::scalar::{cis, is_finite, real, Scalar};

/// Constant terms smaller than this make the reciprocal ill-posed.
pub const RECIPROCAL_MIN_CONSTANT: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("power series needs at least one coefficient")]
    Empty,
    #[error("coefficient {index} is not finite")]
    NonFinite { index: usize },
    #[error("constant term {modulus:e} too close to zero for a reciprocal")]
    NearZeroConstantTerm { modulus: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<T: Scalar> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> PowerSeries<T> {
    /// Builds a series from `coeffs[n]` = coefficient of `z^n`; order is `len - 1`.
    pub fn new(coeffs: Vec<Complex<T>>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        if let Some(index) = coeffs.iter().position(|c| !is_finite(*c)) {
            return Err(SeriesError::NonFinite { index });
        }
        Ok(Self { coeffs })
    }

    /// Internal constructor for results of operations on finite inputs.
    pub(crate) fn from_vec(coeffs: Vec<Complex<T>>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[T]) -> Result<Self, SeriesError> {
        Self::new(coeffs.iter().map(|&x| real(x)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_vec(vec![Complex::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Complex::new(T::one(), T::zero());
        s
    }

    /// `c·z^k` truncated at `order` (zero when `k > order`).
    pub fn monomial(coeff: Complex<T>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = coeff;
        }
        s
    }

    /// Series of `z / (1 - e^{iγ} z)`: coefficient of `z^n` is `e^{i(n-1)γ}` for `n ≥ 1`.
    pub fn geometric(gamma: T, order: usize) -> Self {
        let mut coeffs = vec![Complex::zero(); order + 1];
        let step = cis(gamma);
        let mut w = Complex::new(T::one(), T::zero());
        for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
            // re-anchor the phase every 64 terms so drift stays at rounding level
            if n % 64 == 1 {
                w = cis(gamma * T::lit((n - 1) as f64));
            }
            *c = w;
            w = w * step;
        }
        Self::from_vec(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex<T>> {
        self.coeffs
    }

    /// Coefficient of `z^n`, zero beyond the stored order.
    pub fn coeff(&self, n: usize) -> Complex<T> {
        self.coeffs.get(n).copied().unwrap_or_else(Complex::zero)
    }

    /// Number of leading coefficients up to and including the last nonzero one.
    fn support(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |i| i + 1)
    }

    /// Zero-pads or truncates to the requested order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex::zero());
        Self::from_vec(coeffs)
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        Self::from_vec(self.coeffs.iter().map(|&c| c * k).collect())
    }

    /// Coefficientwise sum; the shorter series is zero-padded.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().max(other.order());
        Self::from_vec((0..=order).map(|n| self.coeff(n) + other.coeff(n)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().max(other.order());
        Self::from_vec((0..=order).map(|n| self.coeff(n) - other.coeff(n)).collect())
    }

    /// Cauchy product truncated to `min(order p, order q)`.
    ///
    /// Trailing zero coefficients are skipped, so polynomial factors cost
    /// `O(N·deg)` instead of `O(N²)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let (sp, sq) = (self.support(), other.support());
        let mut out = vec![Complex::zero(); order + 1];
        if sp == 0 || sq == 0 {
            return Self::from_vec(out);
        }
        for (n, slot) in out.iter_mut().enumerate() {
            let lo = (n + 1).saturating_sub(sq);
            let hi = n.min(sp - 1);
            let mut acc: Complex<T> = Complex::zero();
            for k in lo..=hi {
                acc = acc + self.coeffs[k] * other.coeffs[n - k];
            }
            *slot = acc;
        }
        Self::from_vec(out)
    }

    /// Hadamard (coefficientwise) product, truncated to the smaller order.
    pub fn hadamard(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_vec((0..=order).map(|n| self.coeffs[n] * other.coeffs[n]).collect())
    }

    /// Term-by-term derivative; order drops by one (a constant maps to `[0]`).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_vec(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, &c)| c * T::lit(n as f64))
                .collect(),
        )
    }

    /// Antiderivative vanishing at the origin; order grows by one.
    pub fn integrate(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Complex::zero());
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| c / T::lit((n + 1) as f64)),
        );
        Self::from_vec(out)
    }

    /// Multiplicative inverse via the forward recurrence
    /// `c₀ = 1/p₀`, `cₙ = -(1/p₀) Σ_{k=1..n} pₖ c_{n-k}`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let p0 = self.coeffs[0];
        if p0.norm() <= T::tol(RECIPROCAL_MIN_CONSTANT) {
            return Err(SeriesError::NearZeroConstantTerm {
                modulus: p0.norm().to_f64_lossy(),
            });
        }
        let inv0 = p0.inv();
        let sp = self.support();
        let mut out = vec![Complex::zero(); self.coeffs.len()];
        out[0] = inv0;
        for n in 1..out.len() {
            let mut acc: Complex<T> = Complex::zero();
            for k in 1..=n.min(sp.saturating_sub(1)) {
                acc = acc + self.coeffs[k] * out[n - k];
            }
            out[n] = -acc * inv0;
        }
        Ok(Self::from_vec(out))
    }

    /// Horner evaluation of the truncated sum.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        if z.norm() > T::one() {
            log::warn!("evaluating truncated series outside the closed unit disk");
        }
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::zero(), |acc, &c| acc * z + c)
    }

    /// Values at `r·e^{2πij/m}`, `j = 0..m`.
    ///
    /// Coefficients are folded modulo `m` and pushed through one inverse DFT,
    /// which is exact for the truncated sum and costs `O(N + m log m)`.
    pub fn eval_on_circle(&self, r: T, m: usize) -> Vec<Complex<T>> {
        if m == 0 {
            return Vec::new();
        }
        let mut bins = vec![Complex::zero(); m];
        let mut rn = T::one();
        for (n, &c) in self.coeffs.iter().enumerate() {
            bins[n % m] = bins[n % m] + c * rn;
            rn = rn * r;
        }
        let mut planner = FftPlanner::new();
        planner.plan_fft_inverse(m).process(&mut bins);
        bins
    }

    /// Largest coefficient modulus of `self - other` (shorter one zero-padded).
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let order = self.order().max(other.order());
        (0..=order)
            .map(|n| (self.coeff(n) - other.coeff(n)).norm())
            .fold(T::zero(), T::max)
    }
}

impl<T: Scalar> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn add(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn sub(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn mul(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn neg(self) -> PowerSeries<T> {
        self.scale(Complex::new(-T::one(), T::zero()))
    }
}
