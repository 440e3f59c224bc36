//! Floating-point sampler for upper half-plane zeros of `G(x, w)`.
//!
//! For each sampled `w` with `Im w > 0`, every zero `x` of `G(., w)` is found
//! with Aberth-Ehrlich iteration. A zero with `Im x > IM_MARGIN` and a small
//! relative residual falsifies stability. Finding nothing certifies nothing.

use std::fmt;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::diffop::BivariateSymbol;
use crate::error::{Error, Result};

/// Relative residual below which a numerical zero is accepted.
pub const RESIDUAL_TOL: f64 = 1e-9;
/// `Im x` must exceed this for a zero to count as a violation.
pub const IM_MARGIN: f64 = 1e-6;

const MAX_ITERATIONS: usize = 500;

/// Product grid of sample points `re + i im`.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityGrid {
    pub re: Vec<f64>,
    /// Must all be positive.
    pub im: Vec<f64>,
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

impl StabilityGrid {
    pub fn new(re: Vec<f64>, im: Vec<f64>) -> Result<Self> {
        if im.iter().any(|v| v.is_nan() || *v <= 0.0) || re.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "grid needs finite real parts and positive imaginary parts".into(),
            ));
        }
        Ok(StabilityGrid { re, im })
    }

    /// `n_re x n_im` points over `[re_lo, re_hi] x [im_lo, im_hi]`.
    pub fn uniform(re: (f64, f64), im: (f64, f64), n_re: usize, n_im: usize) -> Result<Self> {
        Self::new(linspace(re.0, re.1, n_re), linspace(im.0, im.1, n_im))
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.re
            .iter()
            .flat_map(move |&r| self.im.iter().map(move |&i| Complex64::new(r, i)))
    }

    pub fn len(&self) -> usize {
        self.re.len() * self.im.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for StabilityGrid {
    /// 10 x 10 over `[-3, 3] x [0.1, 3]`.
    fn default() -> Self {
        StabilityGrid {
            re: linspace(-3.0, 3.0, 10),
            im: linspace(0.1, 3.0, 10),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StabilityVerdict {
    Falsified,
    NoViolationFound,
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityVerdict::Falsified => "FALSIFIED",
            StabilityVerdict::NoViolationFound => "NO_VIOLATION_FOUND",
        })
    }
}

/// A pair with `Im w > 0`, `Im x > IM_MARGIN` and `G(x, w) ~ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Violation {
    pub w: Complex64,
    pub x: Complex64,
    /// `|G(x, w)| / sum |c_i| |x|^i`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityReport {
    pub sampled_w: usize,
    /// Smallest `|G(x, w)|` with both `x` and `w` on the grid.
    pub min_modulus_seen: f64,
    /// First violation in grid order.
    pub violation: Option<Violation>,
    pub verdict: StabilityVerdict,
}

fn to_f64(r: &crate::exactmath::Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `G(., w)` as complex coefficients in `x`, lowest degree first.
fn coefficients_at(g: &[Vec<f64>], w: Complex64) -> Vec<Complex64> {
    g.iter()
        .map(|row| {
            row.iter()
                .rev()
                .fold(Complex64::zero(), |acc, &c| acc * w + c)
        })
        .collect()
}

fn horner(c: &[Complex64], x: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::zero(), |acc, &v| acc * x + v)
}

fn relative_residual(c: &[Complex64], x: Complex64) -> f64 {
    let scale: f64 = c
        .iter()
        .enumerate()
        .map(|(i, v)| v.norm() * x.norm().powi(i as i32))
        .sum();
    if scale == 0.0 {
        0.0
    } else {
        horner(c, x).norm() / scale
    }
}

/// Drops leading coefficients that are negligible next to the largest one.
fn trim(mut c: Vec<Complex64>) -> Vec<Complex64> {
    let big = c.iter().map(|v| v.norm()).fold(0.0, f64::max);
    while c.last().is_some_and(|v| v.norm() <= 1e-14 * big) {
        c.pop();
    }
    c
}

/// All zeros of `sum c_i x^i` by Aberth-Ehrlich iteration. `c` must have a
/// nonzero last entry.
pub fn polynomial_roots(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![-c[0] / c[1]];
    }
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|v| v / lead).collect();
    let deriv: Vec<Complex64> = (1..=n).map(|i| monic[i] * i as f64).collect();
    // Cauchy bound
    let radius = 1.0 + monic[..n].iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut biggest_step: f64 = 0.0;
        for k in 0..n {
            let p = horner(&monic, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / horner(&deriv, z[k]);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                biggest_step = biggest_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if biggest_step < 1e-15 {
            break;
        }
    }
    z
}

/// Samples `G` over `grid` in the `w` variable (`y` in [`BivariateSymbol`]).
pub fn bb_stability_sample(g: &BivariateSymbol, grid: &StabilityGrid) -> Result<StabilityReport> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rows: Vec<Vec<f64>> = g.rows().iter().map(|r| r.iter().map(to_f64).collect()).collect();
    let mut min_modulus_seen = f64::INFINITY;
    let mut violation = None;
    for w in grid.points() {
        let coeffs = coefficients_at(&rows, w);
        for x in grid.points() {
            min_modulus_seen = min_modulus_seen.min(horner(&coeffs, x).norm());
        }
        if violation.is_some() {
            continue;
        }
        let trimmed = trim(coeffs.clone());
        if trimmed.is_empty() {
            // G(., w) vanishes identically, so any x in the upper half-plane works.
            violation = Some(Violation {
                w,
                x: Complex64::new(0.0, 1.0),
                residual: 0.0,
            });
            continue;
        }
        violation = polynomial_roots(&trimmed)
            .into_iter()
            .filter(|x| x.im > IM_MARGIN)
            .map(|x| Violation {
                w,
                x,
                residual: relative_residual(&coeffs, x),
            })
            .find(|v| v.residual < RESIDUAL_TOL);
    }
    let verdict = if violation.is_some() {
        StabilityVerdict::Falsified
    } else {
        StabilityVerdict::NoViolationFound
    };
    Ok(StabilityReport {
        sampled_w: grid.len(),
        min_modulus_seen,
        violation,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop::{delta, falling_factorial_operator};
    use crate::exactmath::{int, rat};
    use crate::laguerre::LaguerreParams;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn roots_of_known_cubic() {
        // (x - 1)(x + 2)(x - i)
        let coeffs = vec![c(0.0, 2.0), c(-2.0, -1.0), c(1.0, -1.0), c(1.0, 0.0)];
        let mut r = polynomial_roots(&coeffs);
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        let expected = [c(-2.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)];
        for (got, want) in r.iter().zip(expected) {
            assert!((got - want).norm() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn roots_with_multiplicity() {
        // (x - 2)^3
        let coeffs = vec![c(-8.0, 0.0), c(12.0, 0.0), c(-6.0, 0.0), c(1.0, 0.0)];
        for z in polynomial_roots(&coeffs) {
            assert!(relative_residual(&coeffs, z) < 1e-12);
        }
    }

    #[test]
    fn default_grid_shape() {
        let g = StabilityGrid::default();
        assert_eq!(g.len(), 100);
        assert!((g.re[0] + 3.0).abs() < 1e-15 && (g.re[9] - 3.0).abs() < 1e-15);
        assert!((g.im[0] - 0.1).abs() < 1e-15);
        assert!(StabilityGrid::new(vec![0.0], vec![0.0]).is_err());
    }

    #[test]
    fn delta_shift_above_range_is_falsified() {
        let g = delta(&LaguerreParams::simple(), &int(3)).exp_symbol();
        let rep = bb_stability_sample(&g, &StabilityGrid::default()).unwrap();
        assert_eq!(rep.verdict, StabilityVerdict::Falsified);
        let v = rep.violation.unwrap();
        assert!(v.w.im > 0.0 && v.x.im > IM_MARGIN && v.residual < RESIDUAL_TOL);
    }

    #[test]
    fn delta_shift_in_range_survives() {
        let g = delta(&LaguerreParams::simple(), &rat(1, 2)).exp_symbol();
        let rep = bb_stability_sample(&g, &StabilityGrid::default()).unwrap();
        assert_eq!(rep.verdict, StabilityVerdict::NoViolationFound);
        assert!(rep.min_modulus_seen > 0.0);
    }

    #[test]
    fn falling_factorial_survives() {
        let g = falling_factorial_operator(2, &LaguerreParams::simple())
            .unwrap()
            .exp_symbol();
        let rep = bb_stability_sample(&g, &StabilityGrid::default()).unwrap();
        assert_eq!(rep.verdict, StabilityVerdict::NoViolationFound);
    }

    #[test]
    fn constant_in_x() {
        // G = 1 + w^2 has no x-dependence and no zero for w on the grid
        let g = BivariateSymbol::new(vec![vec![int(1), int(0), int(1)]]);
        let rep = bb_stability_sample(&g, &StabilityGrid::default()).unwrap();
        assert_eq!(rep.verdict, StabilityVerdict::NoViolationFound);
        assert!(bb_stability_sample(&BivariateSymbol::zero(), &StabilityGrid::default()).is_err());
    }
}
