//! Sweep of the Möbius parameter `a` over a cartesian grid in the disk.

use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::criteria::{cond_10a, cond_11, v_value, MoebiusParams};
use crate::dilatation::tilde_omega_moebius;

pub const CSV_HEADER: &str = "re_a,im_a,gamma,v,cond_10a,cond_11,applicable,sup_omega_tilde";
pub const SUP_SAMPLES: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScanError {
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(&'static str),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanConfig {
    pub gamma: f64,
    /// Grid intervals per axis; the grid has `grid_n + 1` points per axis on `[-1, 1]`.
    pub grid_n: usize,
    pub r_eval: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            gamma: 0.0,
            grid_n: 200,
            r_eval: 0.995,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub a: Complex64,
    pub gamma: f64,
    pub v: f64,
    pub cond_10a: bool,
    pub cond_11: bool,
    pub applicable: bool,
    pub sup_omega_tilde: f64,
}

/// `max |ω̃|` on `|z| ≤ r`: infinite if a pole lies there, else the maximum on `|z| = r`.
pub fn sup_on_disk(a: Complex64, gamma: f64, r: f64) -> f64 {
    let Ok((map, _)) = tilde_omega_moebius(gamma, a) else {
        return f64::NAN;
    };
    match map.poles_within(r) {
        Ok(0) => {}
        Ok(_) => return f64::INFINITY,
        Err(_) => return f64::NAN,
    }
    map.sup_modulus_on_circle(r, SUP_SAMPLES)
        .unwrap_or(f64::INFINITY)
}

pub fn grid_points(n: usize) -> Vec<Complex64> {
    let coord = |k: usize| -1.0 + 2.0 * k as f64 / n as f64;
    (0..=n)
        .flat_map(|i| (0..=n).map(move |j| Complex64::new(coord(j), coord(i))))
        .filter(|a| a.norm() < 1.0)
        .collect()
}

/// Rows in row-major order: `Im a` outer, `Re a` inner, both ascending.
pub fn run_scan(cfg: &ScanConfig) -> Result<Vec<ScanRow>, ScanError> {
    if cfg.grid_n < 10 {
        return Err(ScanError::InvalidConfig("grid_n must be at least 10"));
    }
    if !(cfg.r_eval > 0.0 && cfg.r_eval < 1.0) {
        return Err(ScanError::InvalidConfig("r_eval must lie in (0, 1)"));
    }
    Ok(grid_points(cfg.grid_n)
        .into_par_iter()
        .map(|a| {
            let p = MoebiusParams::new(a, cfg.gamma).expect("grid point inside the disk");
            let (c10, c11) = (cond_10a(&p), cond_11(&p));
            ScanRow {
                a,
                gamma: p.gamma(),
                v: v_value(&p),
                cond_10a: c10,
                cond_11: c11,
                applicable: c10 && !c11,
                sup_omega_tilde: sup_on_disk(a, cfg.gamma, cfg.r_eval),
            }
        })
        .collect())
}

fn num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

pub fn to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            num(r.a.re),
            num(r.a.im),
            num(r.gamma),
            num(r.v),
            r.cond_10a,
            r.cond_11,
            r.applicable,
            num(r.sup_omega_tilde)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_excludes_boundary_and_includes_origin() {
        let pts = grid_points(50);
        assert!(pts.iter().all(|a| a.norm() < 1.0));
        assert!(pts.contains(&Complex64::new(0.0, 0.0)));
        assert!(!pts.contains(&Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn small_scan() {
        let cfg = ScanConfig {
            gamma: 0.0,
            grid_n: 20,
            r_eval: 0.995,
        };
        let rows = run_scan(&cfg).unwrap();
        assert_eq!(rows.len(), grid_points(20).len());
        let origin = rows.iter().find(|r| r.a == Complex64::new(0.0, 0.0)).unwrap();
        assert!((origin.v + 3.0).abs() < 1e-12 && origin.applicable);
        for r in rows.iter().filter(|r| r.cond_10a) {
            assert!(r.sup_omega_tilde < 1.0, "{r:?}");
        }
        let csv = to_csv(&rows);
        assert!(csv.starts_with(CSV_HEADER));
        assert_eq!(csv.lines().count(), rows.len() + 1);
        assert!(run_scan(&ScanConfig { grid_n: 5, ..cfg }).is_err());
    }

    #[test]
    fn rows_near_locus_have_unit_ab() {
        use crate::criteria::ab_modulus;
        let gamma = std::f64::consts::FRAC_PI_3;
        // |a| = 1/3, θ = γ/2 - π/2
        let locus = Complex64::from_polar(1.0 / 3.0, gamma / 2.0 - std::f64::consts::FRAC_PI_2);
        let rows = run_scan(&ScanConfig {
            gamma,
            grid_n: 100,
            r_eval: 0.995,
        })
        .unwrap();
        let near = rows
            .iter()
            .min_by(|x, y| (x.a - locus).norm().total_cmp(&(y.a - locus).norm()))
            .unwrap();
        let d = (near.a - locus).norm();
        let ab = ab_modulus(&MoebiusParams::new(near.a, gamma).unwrap()).unwrap();
        assert!((ab - 1.0).abs() <= 2.0 * d, "d = {d}, |AB| = {ab}");
    }
}
