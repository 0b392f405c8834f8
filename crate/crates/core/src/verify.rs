//! Numerical checks of local univalence, half-plane range and directional
//! convexity for concrete maps.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::criteria::boundary_sup;
use crate::mappings::{order_for_radius, HarmonicMap, MapError};
use crate::polyrat::{PolyError, RationalMap};
use crate::scalar::wrap_angle;

/// Poles with modulus below `1 - POLE_MARGIN` count as inside the disk.
pub const POLE_MARGIN: f64 = 1e-9;
pub const MIN_CONVEXITY_SAMPLES: usize = 1024;
/// Differences below this fraction of the range of `s` are treated as flat.
pub const FLATNESS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("radius {r} must lie in (0, 1)")]
    BadRadius { r: f64 },
    #[error("need at least {min} samples, got {samples}")]
    TooFewSamples { samples: usize, min: usize },
    #[error("projected boundary curve is degenerate (total variation {variation})")]
    DegenerateCurve { variation: f64 },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckParams {
    pub r_max: f64,
    pub grid_r: usize,
    pub grid_t: usize,
    pub tol: f64,
    pub boundary_samples: usize,
    pub convex_radius: f64,
    pub convex_samples: usize,
}

impl Default for CheckParams {
    fn default() -> Self {
        Self {
            r_max: 0.995,
            grid_r: 201,
            grid_t: 201,
            tol: 1e-9,
            boundary_samples: 4096,
            convex_radius: 0.99,
            convex_samples: 4096,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalUnivalence {
    pub sup_omega_tilde_interior: f64,
    pub sup_omega_tilde_boundary: f64,
    pub poles_in_disk: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub sup_omega_tilde_interior: f64,
    pub sup_omega_tilde_boundary: f64,
    pub poles_in_disk: usize,
    pub min_jacobian: f64,
    pub halfplane_residual: f64,
    pub direction: f64,
    pub monotone_arc_count: usize,
    pub passed: bool,
    pub params: CheckParams,
}

fn check_radius(r: f64) -> Result<(), VerifyError> {
    if !(r > 0.0 && r < 1.0) {
        return Err(VerifyError::BadRadius { r });
    }
    Ok(())
}

/// Radii `r_max·k/(n-1)` for `k = 0..n`, so both `0` and `r_max` are included.
pub fn grid_radii(r_max: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![r_max];
    }
    (0..n).map(|k| r_max * k as f64 / (n - 1) as f64).collect()
}

pub fn check_local_univalence(
    omega_tilde: &RationalMap<f64>,
    r_max: f64,
    grid_r: usize,
    grid_t: usize,
    boundary_samples: usize,
) -> Result<LocalUnivalence, VerifyError> {
    check_radius(r_max)?;
    let poles_in_disk = omega_tilde.poles_within(1.0 - POLE_MARGIN)?;
    let step = std::f64::consts::TAU / grid_t as f64;
    let sup_interior = grid_radii(r_max, grid_r)
        .into_par_iter()
        .map(|r| {
            (0..grid_t)
                .map(|j| {
                    omega_tilde
                        .eval(Complex64::from_polar(r, step * j as f64))
                        .map_or(f64::INFINITY, |v| v.norm())
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    Ok(LocalUnivalence {
        sup_omega_tilde_interior: sup_interior,
        sup_omega_tilde_boundary: boundary_sup(omega_tilde, boundary_samples),
        poles_in_disk,
    })
}

/// Number of maximal monotone arcs of `s(t) = Im(e^{-i·direction} f(r e^{it}))`.
///
/// `f` must be truncated at an order adequate for `r` (see [`order_for_radius`]).
pub fn check_convex_in_direction(
    f: &HarmonicMap<f64>,
    direction: f64,
    r: f64,
    samples: usize,
) -> Result<usize, VerifyError> {
    check_radius(r)?;
    if samples < MIN_CONVEXITY_SAMPLES {
        return Err(VerifyError::TooFewSamples {
            samples,
            min: MIN_CONVEXITY_SAMPLES,
        });
    }
    let rot = Complex64::from_polar(1.0, -direction);
    let s: Vec<f64> = f
        .eval_on_circle(r, samples)
        .into_iter()
        .map(|w| (rot * w).im)
        .collect();
    count_monotone_arcs(&s)
}

/// Circular count of monotone arcs, merging flat steps.
pub fn count_monotone_arcs(s: &[f64]) -> Result<usize, VerifyError> {
    let n = s.len();
    let diffs: Vec<f64> = (0..n).map(|j| s[(j + 1) % n] - s[j]).collect();
    let variation: f64 = diffs.iter().map(|d| d.abs()).sum();
    if !(variation >= 1e-9) {
        return Err(VerifyError::DegenerateCurve { variation });
    }
    let hi = s.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = s.iter().copied().fold(f64::INFINITY, f64::min);
    let flat = FLATNESS * (hi - lo);
    let signs: Vec<bool> = diffs
        .iter()
        .filter(|d| d.abs() >= flat)
        .map(|&d| d > 0.0)
        .collect();
    let m = signs.len();
    Ok((0..m).filter(|&j| signs[j] != signs[(j + 1) % m]).count())
}

/// `min Re(e^{iγ} f(z)) + 1/2` over the polar grid of radius `r`.
pub fn check_halfplane_range(
    f: &HarmonicMap<f64>,
    gamma: f64,
    r: f64,
    grid_r: usize,
    grid_t: usize,
) -> Result<f64, VerifyError> {
    check_radius(r)?;
    let rot = Complex64::from_polar(1.0, gamma);
    Ok(grid_radii(r, grid_r)
        .into_par_iter()
        .map(|rad| {
            f.eval_on_circle(rad, grid_t)
                .into_iter()
                .map(|w| (rot * w).re + 0.5)
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min))
}

/// Smallest Jacobian of `f` over the polar grid of radius `r`.
pub fn min_jacobian(f: &HarmonicMap<f64>, r: f64, grid_r: usize, grid_t: usize) -> f64 {
    grid_radii(r, grid_r)
        .into_par_iter()
        .map(|rad| {
            f.jacobian_on_circle(rad, grid_t)
                .into_iter()
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min)
}

/// Runs every check on `f₀ ∗ f` for a sheared source map `f`.
///
/// A source map carrying its dilatation is rebuilt at the order needed for
/// `params.r_max` before convolving.
pub fn full_report(
    f: &HarmonicMap<f64>,
    omega_tilde: &RationalMap<f64>,
    direction: f64,
    params: &CheckParams,
) -> Result<VerificationReport, VerifyError> {
    check_radius(params.r_max)?;
    check_radius(params.convex_radius)?;
    let needed = order_for_radius(params.r_max.max(params.convex_radius));
    let source = match f.omega() {
        Some(omega) if f.order() < needed => HarmonicMap::shear(f.gamma(), omega, needed)?,
        _ => f.clone(),
    };
    let conv = source.convolve_f0();
    let lu = check_local_univalence(
        omega_tilde,
        params.r_max,
        params.grid_r,
        params.grid_t,
        params.boundary_samples,
    )?;
    let min_j = min_jacobian(&conv, params.r_max, params.grid_r, params.grid_t);
    let halfplane = check_halfplane_range(
        &source,
        source.gamma(),
        params.r_max,
        params.grid_r,
        params.grid_t,
    )?;
    let direction = wrap_angle(direction);
    let arcs = check_convex_in_direction(&conv, direction, params.convex_radius, params.convex_samples)?;
    let passed =
        lu.sup_omega_tilde_interior < 1.0 && lu.poles_in_disk == 0 && min_j > 0.0 && arcs == 2;
    Ok(VerificationReport {
        sup_omega_tilde_interior: lu.sup_omega_tilde_interior,
        sup_omega_tilde_boundary: lu.sup_omega_tilde_boundary,
        poles_in_disk: lu.poles_in_disk,
        min_jacobian: min_j,
        halfplane_residual: halfplane,
        direction,
        monotone_arc_count: arcs,
        passed,
        params: params.clone(),
    })
}
