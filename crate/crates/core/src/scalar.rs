//! Scalar abstraction shared by the generic numeric modules.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use rustfft::FftNum;

/// Real floating-point type the toolkit can run on (`f32` or `f64`).
///
/// Tolerances throughout the crate are calibrated for `f64`; with `f32`
/// every threshold is floored at a small multiple of machine epsilon.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + FftNum + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Absolute threshold `x`, but never below `64·ε` of this type.
    #[inline]
    fn tol(x: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(64.0);
        let t = Self::lit(x);
        if t < floor {
            floor
        } else {
            t
        }
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `e^{iθ}`.
#[inline]
pub fn cis<T: Scalar>(theta: T) -> Complex<T> {
    Complex::from_polar(T::one(), theta)
}

#[inline]
pub(crate) fn real<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

#[inline]
pub(crate) fn is_finite<T: Scalar>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Reduces an angle into `[0, 2π)`.
pub fn wrap_angle<T: Scalar>(theta: T) -> T {
    let two_pi = T::TAU();
    let r = theta % two_pi;
    let r = if r < T::zero() { r + two_pi } else { r };
    // `-0.0 + 2π` style rounding can land exactly on 2π
    if r >= two_pi {
        T::zero()
    } else {
        r
    }
}

/// Lexicographic (re, im) ordering used wherever root order must be stable.
pub(crate) fn lex_cmp<T: Scalar>(a: &Complex<T>, b: &Complex<T>) -> std::cmp::Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(std::cmp::Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
}
