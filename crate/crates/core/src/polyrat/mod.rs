//! Polynomials and rational maps with complex coefficients: star adjoint,
//! roots, Cohn reduction and unit-disk zero location.

mod poly;
mod rational;
mod roots;

use thiserror::Error;

pub use poly::{Polynomial, DEGREE_EPS};
pub use rational::{RationalMap, CANCEL_TOL, MIN_CIRCLE_SAMPLES, POLE_EPS};
pub use roots::{quadratic_roots, DiskLocation, RootSet, BOUNDARY_TOL, COHN_MARGIN};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("polynomial needs at least one coefficient")]
    Empty,
    #[error("coefficient {index} is not finite")]
    NonFinite { index: usize },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("operation needs degree at least one")]
    ConstantPolynomial,
    #[error("root iteration did not converge (best residual {residual:e})")]
    NoConvergence { residual: f64 },
    #[error("polynomial is not monic (leading coefficient {leading:?})")]
    NotMonic { leading: [f64; 2] },
    #[error("|p(0)| = {modulus} is not inside the unit disk")]
    ConstantTermNotInDisk { modulus: f64 },
    #[error("rational map has a pole near {at:?}")]
    NearPole { at: [f64; 2] },
    #[error("rational map has a pole at the origin")]
    PoleAtOrigin,
    #[error("denominator vanishes identically")]
    DegenerateDenominator,
    #[error("prefactor must be unimodular, got modulus {modulus}")]
    NonUnimodularPrefactor { modulus: f64 },
    #[error("need at least 256 circle samples, got {samples}")]
    TooFewSamples { samples: usize },
}
