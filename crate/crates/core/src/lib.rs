//! Harmonic shear construction, convolution with the half-plane map `f₀`,
//! and numerical criteria for univalence and directional convexity of `f₀ ∗ f`.

pub mod criteria;
pub mod dilatation;
pub mod gallery;
pub mod io;
pub mod mappings;
pub mod omega_spec;
pub mod plot;
pub mod polyrat;
pub mod scalar;
pub mod scan;
pub mod series;
pub mod verify;

pub use scalar::Scalar;

pub type Series = series::PowerSeries<f64>;
pub type Poly = polyrat::Polynomial<f64>;
pub type Rational = polyrat::RationalMap<f64>;
pub type Map = mappings::HarmonicMap<f64>;
pub type Params = criteria::MoebiusParams<f64>;
