//! Three worked examples with closed-form parts, used as oracles for the
//! series pipeline.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use thiserror::Error;

use crate::dilatation::{tilde_omega_general, DilatationError};
use crate::mappings::{HarmonicMap, MapError};
use crate::polyrat::{PolyError, Polynomial, RationalMap};
use crate::scalar::wrap_angle;

pub const CROSS_CHECK_POINTS: usize = 128;
pub const CROSS_CHECK_RADIUS: f64 = 0.8;
pub const MIN_CROSS_CHECK_ORDER: usize = 64;
const SLIT_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GalleryError {
    #[error("unknown example {id} (expected 1, 2 or 3)")]
    UnknownCase { id: u32 },
    #[error("θ = {theta} is an endpoint of the boundary arcs")]
    OnSlitPoint { theta: f64 },
    #[error("order {order} too small (need at least {min})")]
    OrderTooSmall { order: usize, min: usize },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Dilatation(#[from] DilatationError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GalleryCase {
    pub id: u32,
    pub gamma: f64,
    pub omega: RationalMap<f64>,
    pub expected_tilde_omega: RationalMap<f64>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn example_case(id: u32) -> Result<GalleryCase, GalleryError> {
    let z = RationalMap::monomial(ONE, 1);
    let (gamma, omega, expected) = match id {
        1 => (
            FRAC_PI_2,
            z,
            RationalMap::new(
                Polynomial::new(vec![I * 0.5, c(-0.5, 0.0), ONE])?,
                Polynomial::new(vec![ONE, c(-0.5, 0.0), -I * 0.5])?,
                1,
                I,
            )?,
        ),
        2 => (
            PI,
            z,
            RationalMap::new(
                Polynomial::from_real(&[-0.5, 0.5, 1.0])?,
                Polynomial::from_real(&[1.0, 0.5, -0.5])?,
                1,
                ONE,
            )?,
        ),
        3 => (
            PI,
            RationalMap::monomial(c(-1.0, 0.0), 2),
            RationalMap::monomial(ONE, 2),
        ),
        _ => return Err(GalleryError::UnknownCase { id }),
    };
    Ok(GalleryCase {
        id,
        gamma,
        omega,
        expected_tilde_omega: expected,
    })
}

impl GalleryCase {
    pub fn closed_h(&self, z: Complex64) -> Complex64 {
        match self.id {
            1 => I * 0.5 * log1(z) + c(0.5, -0.5) * z / (ONE - I * z),
            2 => (z * z + z * 2.0) / ((ONE + z).powi(2) * 2.0),
            _ => log3(z) / 8.0 + (z / (ONE + z) - (ONE + z).powi(-2) + ONE) / 4.0,
        }
    }

    pub fn closed_g(&self, z: Complex64) -> Complex64 {
        match self.id {
            1 => I * 0.5 * log1(z) - c(0.5, 0.5) * z / (ONE - I * z),
            2 => z * z / ((ONE + z).powi(2) * 2.0),
            _ => -log3(z) / 8.0 + (z * 3.0 / (ONE + z) + (ONE + z).powi(-2) - ONE) / 4.0,
        }
    }

    /// `h₀ ∗ h`.
    pub fn closed_conv_h(&self, z: Complex64) -> Complex64 {
        match self.id {
            1 => {
                I * 0.25 * log1(z)
                    + c(0.25, -0.25) * z / (ONE - I * z)
                    + z / ((ONE - z) * (ONE - I * z).powi(2) * 2.0)
            }
            2 => z * (z * z + z * 3.0 + 4.0) / ((ONE + z).powi(3) * 4.0),
            _ => {
                log3(z) / 16.0
                    + (z / (ONE + z) - (ONE + z).powi(-2) + ONE) / 8.0
                    + z / ((ONE - z) * (ONE + z).powi(3) * 2.0)
            }
        }
    }

    /// `g₀ ∗ g`.
    pub fn closed_conv_g(&self, z: Complex64) -> Complex64 {
        match self.id {
            1 => {
                I * 0.25 * log1(z)
                    - c(0.25, 0.25) * z / (ONE - I * z)
                    - z * z / ((ONE - z) * (ONE - I * z).powi(2) * 2.0)
            }
            2 => -z * z * (ONE - z) / ((ONE + z).powi(3) * 4.0),
            _ => {
                -log3(z) / 16.0
                    + (z * 3.0 / (ONE + z) + (ONE + z).powi(-2) - ONE) / 8.0
                    + z.powi(3) / ((ONE - z) * (ONE + z).powi(3) * 2.0)
            }
        }
    }

    pub fn closed_f(&self, z: Complex64) -> Complex64 {
        self.closed_h(z) + self.closed_g(z).conj()
    }

    pub fn closed_conv_f(&self, z: Complex64) -> Complex64 {
        self.closed_conv_h(z) + self.closed_conv_g(z).conj()
    }

    /// `Re(f₀ ∗ f)` and `Im(f₀ ∗ f)` from simplified single-expression forms.
    pub fn conv_re_im(&self, z: Complex64) -> (f64, f64) {
        match self.id {
            1 => (
                (I * 0.5 * log1(z) + z * (c(1.0, -1.0) - z) / ((ONE - I * z).powi(2) * 2.0)).re,
                (z / ((ONE - I * z) * 2.0) + (z + z * z) / ((ONE - z) * (ONE - I * z).powi(2) * 2.0)).im,
            ),
            2 => (
                (z * (z * z + z + 2.0) / ((ONE + z).powi(3) * 2.0)).re,
                (z / (ONE + z).powi(2)).im,
            ),
            _ => {
                let zeta = (ONE + z) / (ONE - z);
                (
                    (zeta + 4.0 - zeta.inv() * 4.0 - zeta.powi(-3)).re / 16.0,
                    (zeta.ln() / 8.0 - zeta.powi(-2) * (3.0 / 16.0)).im,
                )
            }
        }
    }

    /// The same map as a truncated series, built by shearing.
    pub fn series_map(&self, order: usize) -> Result<HarmonicMap<f64>, GalleryError> {
        Ok(HarmonicMap::shear(self.gamma, &self.omega, order)?)
    }
}

/// `log((1 - iz)/(1 - z))`, principal branch.
fn log1(z: Complex64) -> Complex64 {
    ((ONE - I * z) / (ONE - z)).ln()
}

/// `log((1 + z)/(1 - z))`, principal branch.
fn log3(z: Complex64) -> Complex64 {
    ((ONE + z) / (ONE - z)).ln()
}

/// Deterministic points filling `|z| ≤ radius` (sunflower pattern).
pub fn sample_points(count: usize, radius: f64) -> Vec<Complex64> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|k| Complex64::from_polar(radius * ((k as f64 + 0.5) / count as f64).sqrt(), golden * k as f64))
        .collect()
}

/// Largest disagreement between the closed forms and the series/rational pipeline.
pub fn cross_check_case(case: &GalleryCase, order: usize) -> Result<f64, GalleryError> {
    if order < MIN_CROSS_CHECK_ORDER {
        return Err(GalleryError::OrderTooSmall {
            order,
            min: MIN_CROSS_CHECK_ORDER,
        });
    }
    let f = case.series_map(order)?;
    let conv = f.convolve_f0();
    let tw = tilde_omega_general(case.gamma, &case.omega)?;
    let mut worst = 0.0f64;
    for z in sample_points(CROSS_CHECK_POINTS, CROSS_CHECK_RADIUS) {
        let residuals = [
            (f.h().eval(z) - case.closed_h(z)).norm(),
            (f.g().eval(z) - case.closed_g(z)).norm(),
            (conv.h().eval(z) - case.closed_conv_h(z)).norm(),
            (conv.g().eval(z) - case.closed_conv_g(z)).norm(),
            (tw.eval(z)? - case.expected_tilde_omega.eval(z)?).norm(),
        ];
        worst = residuals.into_iter().fold(worst, f64::max);
    }
    Ok(worst)
}

/// Boundary value of the third example's map on the open arcs, as displayed.
pub fn example3_boundary(theta: f64) -> Result<Complex64, GalleryError> {
    let t = wrap_angle(theta);
    if t < SLIT_TOL || (t - PI).abs() < SLIT_TOL || 2.0 * PI - t < SLIT_TOL {
        return Err(GalleryError::OnSlitPoint { theta });
    }
    let sign = if t < PI { 1.0 } else { -1.0 };
    Ok(c(0.5, sign * PI / 16.0 + 0.25 * (t / 2.0).tan()))
}
