use num_complex::Complex;
use num_traits::Zero;

use super::PolyError;
use crate::scalar::{is_finite, real, Scalar};
use crate::series::PowerSeries;

/// Coefficients with modulus below this are ignored when reporting degree.
pub const DEGREE_EPS: f64 = 1e-14;

/// Dense polynomial, `coeffs[k]` is the coefficient of `z^k`.
///
/// Trailing (high-order) zeros are allowed; [`Polynomial::degree`] ignores
/// entries with modulus below [`DEGREE_EPS`].
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T: Scalar> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(coeffs: Vec<Complex<T>>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::Empty);
        }
        if let Some(index) = coeffs.iter().position(|c| !is_finite(*c)) {
            return Err(PolyError::NonFinite { index });
        }
        Ok(Self { coeffs })
    }

    pub(crate) fn from_vec(coeffs: Vec<Complex<T>>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[T]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&x| real(x)).collect())
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::from_vec(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(real(T::one()))
    }

    /// `c·z^k`.
    pub fn monomial(c: Complex<T>, k: usize) -> Self {
        let mut coeffs = vec![Complex::zero(); k + 1];
        coeffs[k] = c;
        Self::from_vec(coeffs)
    }

    /// Monic polynomial `Π (z - r)`.
    pub fn from_roots(roots: &[Complex<T>]) -> Self {
        let mut p = Self::one();
        for &r in roots {
            p = p.mul(&Self::from_vec(vec![-r, real(T::one())]));
        }
        p
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub(crate) fn set_coeff(&mut self, k: usize, v: Complex<T>) {
        if k >= self.coeffs.len() {
            self.coeffs.resize(k + 1, Complex::zero());
        }
        self.coeffs[k] = v;
    }

    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs.get(k).copied().unwrap_or_else(Complex::zero)
    }

    /// Highest index whose coefficient has modulus `≥ 1e-14`; `0` for a zero polynomial.
    pub fn degree(&self) -> usize {
        let eps = T::tol(DEGREE_EPS);
        self.coeffs.iter().rposition(|c| c.norm() >= eps).unwrap_or(0)
    }

    pub fn leading(&self) -> Complex<T> {
        self.coeffs[self.degree()]
    }

    pub fn is_zero(&self) -> bool {
        let eps = T::tol(DEGREE_EPS);
        self.coeffs.iter().all(|c| c.norm() < eps)
    }

    /// Copy with coefficients beyond [`Polynomial::degree`] removed.
    pub fn trimmed(&self) -> Self {
        Self::from_vec(self.coeffs[..=self.degree()].to_vec())
    }

    pub fn max_abs_coeff(&self) -> T {
        self.coeffs.iter().map(|c| c.norm()).fold(T::zero(), T::max)
    }

    /// Number of low-order coefficients that vanish relative to the largest one.
    pub(crate) fn low_order_zeros(&self) -> usize {
        let scale = self.max_abs_coeff();
        if scale.is_zero() {
            return 0;
        }
        let eps = T::tol(DEGREE_EPS) * scale;
        let d = self.degree();
        self.coeffs[..d]
            .iter()
            .position(|c| c.norm() >= eps)
            .unwrap_or(d)
    }

    /// Divides by `z^k`, discarding the lowest `k` coefficients.
    pub(crate) fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if k >= self.coeffs.len() {
            return Self::constant(Complex::zero());
        }
        Self::from_vec(self.coeffs[k..].to_vec())
    }

    /// Multiplies by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Complex::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_vec(coeffs)
    }

    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::zero(), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::constant(Complex::zero());
        }
        Self::from_vec(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * T::lit(k as f64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_vec((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_vec((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Complex::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Self::from_vec(out)
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        Self::from_vec(self.coeffs.iter().map(|&c| c * k).collect())
    }

    /// Star adjoint `z^d · conj(p(1/conj z))`: reversed, conjugated coefficients.
    pub fn star(&self) -> Self {
        let d = self.degree();
        Self::from_vec((0..=d).rev().map(|k| self.coeffs[k].conj()).collect())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let t = self.trimmed();
        let lead = t.leading();
        Ok(t.scale(lead.inv()))
    }

    /// Quotient of synthetic division by `(z - r)`; the remainder is dropped.
    pub fn deflate(&self, r: Complex<T>) -> Self {
        let t = self.trimmed();
        let d = t.coeffs.len() - 1;
        if d == 0 {
            return Self::constant(Complex::zero());
        }
        let mut q = vec![Complex::zero(); d];
        let mut carry = Complex::zero();
        for k in (0..d).rev() {
            carry = t.coeffs[k + 1] + carry * r;
            q[k] = carry;
        }
        Self::from_vec(q)
    }

    /// The polynomial as a power series of the given order.
    pub fn to_series(&self, order: usize) -> PowerSeries<T> {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex::zero());
        PowerSeries::from_vec(coeffs)
    }

    /// Largest coefficient difference, shorter operand zero-padded.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(T::zero(), T::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    #[test]
    fn degree_ignores_tiny_trailing() {
        let p = Polynomial::new(vec![C::new(1.0, 0.0), C::new(2.0, 0.0), C::new(1e-15, 0.0)]).unwrap();
        assert_eq!(p.degree(), 1);
        assert_eq!(p.trimmed().coeffs().len(), 2);
        assert!(Polynomial::<f64>::constant(C::new(0.0, 0.0)).is_zero());
    }

    #[test]
    fn star_reverses_and_conjugates() {
        let p = Polynomial::new(vec![C::new(1.0, 2.0), C::new(0.0, -1.0), C::new(3.0, 0.5)]).unwrap();
        let s = p.star();
        assert_eq!(s.coeffs(), &[C::new(3.0, -0.5), C::new(0.0, 1.0), C::new(1.0, -2.0)]);
        assert_eq!(s.star(), p);
        assert_eq!(Polynomial::<f64>::one().star(), Polynomial::one());
    }

    #[test]
    fn deflate_divides_out_root() {
        let p = Polynomial::from_roots(&[C::new(1.0, 0.0), C::new(-2.0, 0.5), C::new(0.3, 0.3)]);
        let q = p.deflate(C::new(1.0, 0.0));
        let want = Polynomial::from_roots(&[C::new(-2.0, 0.5), C::new(0.3, 0.3)]);
        assert!(q.max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn low_order_zero_count() {
        let p = Polynomial::from_real(&[0.0, 1e-18, 2.0, 1.0]).unwrap();
        assert_eq!(p.low_order_zeros(), 2);
        assert_eq!(p.shift_down(2).coeffs(), &[C::new(2.0, 0.0), C::new(1.0, 0.0)]);
    }
}
