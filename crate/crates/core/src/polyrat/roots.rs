//! Root finding and unit-disk zero location.

use num_complex::Complex;
use num_traits::Zero;

use super::{PolyError, Polynomial};
use crate::scalar::{lex_cmp, real, Scalar};

pub const MAX_ITERATIONS: usize = 500;
pub const UPDATE_TOL: f64 = 1e-13;
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Roots within this distance of the unit circle count as inside.
pub const BOUNDARY_TOL: f64 = 1e-9;
/// Cohn reduction hands over to the root oracle once `|p(0)| ≥ 1 - CohnMargin`.
pub const COHN_MARGIN: f64 = 1e-10;
pub const MONIC_TOL: f64 = 1e-12;

/// All roots of a polynomial, with multiplicity, sorted by (re, im).
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet<T: Scalar> {
    pub roots: Vec<Complex<T>>,
    /// `max |p(root)|` with `p` normalised to leading coefficient one.
    pub residual: T,
}

impl<T: Scalar> RootSet<T> {
    pub fn product_of_moduli(&self) -> T {
        self.roots.iter().fold(T::one(), |acc, r| acc * r.norm())
    }
}

impl<T: Scalar> Polynomial<T> {
    /// Roots by closed formula up to degree two, Durand–Kerner above.
    pub fn roots(&self) -> Result<RootSet<T>, PolyError> {
        let p = self.monic()?;
        let d = p.degree();
        if d == 0 {
            return Err(PolyError::ConstantPolynomial);
        }
        let mut roots = match d {
            1 => vec![-p.coeff(0)],
            2 => quadratic_roots(p.coeff(1), p.coeff(0)).to_vec(),
            _ => durand_kerner(&p)?,
        };
        roots.sort_by(lex_cmp);
        let residual = roots
            .iter()
            .map(|&r| p.eval(r).norm())
            .fold(T::zero(), T::max);
        if !(residual < T::tol(RESIDUAL_TOL)) {
            return Err(PolyError::NoConvergence {
                residual: residual.to_f64_lossy(),
            });
        }
        Ok(RootSet { roots, residual })
    }

    /// One step of Cohn's rule: `(p - p(0)·p*) / z` for monic `p` with `|p(0)| < 1`.
    pub fn cohn_reduce(&self) -> Result<Self, PolyError> {
        let t = self.trimmed();
        let lead = t.leading();
        if (lead - real(T::one())).norm() > T::tol(MONIC_TOL) {
            return Err(PolyError::NotMonic {
                leading: [lead.re.to_f64_lossy(), lead.im.to_f64_lossy()],
            });
        }
        let a0 = t.coeff(0);
        if a0.norm() >= T::one() {
            return Err(PolyError::ConstantTermNotInDisk {
                modulus: a0.norm().to_f64_lossy(),
            });
        }
        let q = t.sub(&t.star().scale(a0));
        Ok(q.shift_down(1))
    }

    /// Decides whether every zero lies in the closed unit disk.
    ///
    /// Runs Cohn reductions while the hypothesis `|p(0)| < 1` holds with margin;
    /// the remaining polynomial (if any) is settled by explicit roots.
    pub fn zeros_in_closed_disk(&self) -> Result<DiskLocation, PolyError> {
        let mut q = self.monic()?;
        let degree = q.degree();
        if degree == 0 {
            return Err(PolyError::ConstantPolynomial);
        }
        let mut steps = 0usize;
        loop {
            if q.degree() == 0 {
                return Ok(DiskLocation {
                    all_inside: true,
                    count_inside: degree,
                    degree,
                    cohn_steps: steps,
                    used_root_oracle: false,
                });
            }
            let a0 = q.coeff(0).norm();
            if a0 >= T::one() - T::tol(COHN_MARGIN) {
                let inside = q.roots()?.count_in_closed_disk();
                let count_inside = steps + inside;
                return Ok(DiskLocation {
                    all_inside: count_inside == degree,
                    count_inside,
                    degree,
                    cohn_steps: steps,
                    used_root_oracle: true,
                });
            }
            q = q.cohn_reduce()?.monic()?;
            steps += 1;
        }
    }
}

impl<T: Scalar> RootSet<T> {
    pub fn count_in_closed_disk(&self) -> usize {
        let bound = T::one() + T::tol(BOUNDARY_TOL);
        self.roots.iter().filter(|r| r.norm() <= bound).count()
    }
}

/// Outcome of [`Polynomial::zeros_in_closed_disk`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiskLocation {
    pub all_inside: bool,
    /// Zeros in `|z| ≤ 1 + 1e-9`, with multiplicity.
    pub count_inside: usize,
    pub degree: usize,
    pub cohn_steps: usize,
    pub used_root_oracle: bool,
}

/// Roots of `z² + b z + c`, choosing the branch that avoids cancellation.
pub fn quadratic_roots<T: Scalar>(b: Complex<T>, c: Complex<T>) -> [Complex<T>; 2] {
    let two = T::lit(2.0);
    let disc = (b * b - c * T::lit(4.0)).sqrt();
    let s = if (b.conj() * disc).re >= T::zero() { disc } else { -disc };
    let q = -(b + s) / two;
    if q.is_zero() {
        // b = 0 and c = 0
        return [Complex::zero(), Complex::zero()];
    }
    [q, c / q]
}

fn durand_kerner<T: Scalar>(monic: &Polynomial<T>) -> Result<Vec<Complex<T>>, PolyError> {
    let d = monic.degree();
    let p = monic.trimmed();
    let seed = Complex::new(T::lit(0.4), T::lit(0.9));
    // put the seeds on the scale of the roots
    let c0 = p.coeff(0).norm();
    let radius = if c0 > T::zero() {
        c0.powf(T::one() / T::lit(d as f64)).max(T::lit(1e-3))
    } else {
        T::one()
    };
    let mut z: Vec<Complex<T>> = (0..d)
        .map(|k| seed.powu(k as u32) * radius)
        .collect();
    let tol = T::tol(UPDATE_TOL);
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = T::zero();
        for i in 0..d {
            let mut denom = real(T::one());
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    denom = denom * (z[i] - zj);
                }
            }
            if denom.is_zero() {
                denom = real(T::tol(1e-300));
            }
            let step = p.eval(z[i]) / denom;
            z[i] = z[i] - step;
            let rel = step.norm() / T::one().max(z[i].norm());
            if rel > max_step {
                max_step = rel;
            }
        }
        if max_step.is_nan() {
            return Err(PolyError::NoConvergence { residual: f64::NAN });
        }
        if max_step <= tol {
            break;
        }
    }
    // guarded Newton polish
    let dp = p.derivative();
    for r in z.iter_mut() {
        for _ in 0..3 {
            let v = p.eval(*r);
            let dv = dp.eval(*r);
            if dv.is_zero() {
                break;
            }
            let cand = *r - v / dv;
            if p.eval(cand).norm() < v.norm() {
                *r = cand;
            } else {
                break;
            }
        }
    }
    Ok(z)
}
