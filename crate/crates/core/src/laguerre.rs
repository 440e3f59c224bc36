//! Generalized Laguerre polynomials with rational parameter, and conversion
//! between the monomial and Laguerre bases.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{factorial, int, serde_rational, Polynomial, Rational};

/// The Laguerre parameter `alpha`, constrained to `alpha > -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct LaguerreParams {
    #[serde(with = "serde_rational")]
    alpha: Rational,
}

#[derive(Deserialize)]
struct RawParams {
    #[serde(with = "serde_rational")]
    alpha: Rational,
}

impl TryFrom<RawParams> for LaguerreParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        LaguerreParams::new(raw.alpha)
    }
}

impl LaguerreParams {
    pub fn new(alpha: Rational) -> Result<Self> {
        if alpha <= int(-1) {
            return Err(Error::AlphaOutOfRange(alpha.to_string()));
        }
        Ok(LaguerreParams { alpha })
    }

    /// `alpha = 0`, the simple Laguerre polynomials.
    pub fn simple() -> Self {
        LaguerreParams { alpha: int(0) }
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }
}

/// Generalized binomial `binom(n + alpha, j)` evaluated at `top = n + alpha`.
fn binom_rational(top: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j {
        acc *= top - int(i as i64);
    }
    acc / factorial(j)
}

/// `L_n^(alpha)(x) = sum_k binom(n + alpha, n - k) (-x)^k / k!`.
pub fn laguerre_poly(n: usize, params: &LaguerreParams) -> Polynomial {
    let top = &params.alpha + int(n as i64);
    let coeffs = (0..=n)
        .map(|k| {
            let c = binom_rational(&top, n - k) / factorial(k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Polynomial::new(coeffs)
}

/// `L_n^(alpha)(0) = prod_{k=1..n} (alpha + k) / n!`.
pub fn laguerre_at_zero(n: usize, params: &LaguerreParams) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * (&params.alpha + int(k as i64))) / factorial(n)
}

/// Expansion coefficients in the Laguerre basis: `sum_k coeffs[k] L_k^(alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaguerreCoeffs {
    #[serde(flatten)]
    pub params: LaguerreParams,
    #[serde(with = "serde_rational::vec")]
    coefficients: Vec<Rational>,
}

impl LaguerreCoeffs {
    pub fn new(params: LaguerreParams, mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        LaguerreCoeffs {
            params,
            coefficients,
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }
}

/// `L_0 .. L_n` for one `alpha`, built once and reused by the hot paths
/// (basis conversion inside the search loops).
#[derive(Clone, Debug)]
pub struct LaguerreBasis {
    params: LaguerreParams,
    polys: Vec<Polynomial>,
}

impl LaguerreBasis {
    pub fn new(params: &LaguerreParams, max_degree: usize) -> Self {
        let polys = (0..=max_degree).map(|n| laguerre_poly(n, params)).collect();
        LaguerreBasis {
            params: params.clone(),
            polys,
        }
    }

    pub fn params(&self) -> &LaguerreParams {
        &self.params
    }

    pub fn max_degree(&self) -> usize {
        self.polys.len() - 1
    }

    /// `L_n`, extending the cache view if `n` exceeds it.
    pub fn poly(&self, n: usize) -> std::borrow::Cow<'_, Polynomial> {
        match self.polys.get(n) {
            Some(p) => std::borrow::Cow::Borrowed(p),
            None => std::borrow::Cow::Owned(laguerre_poly(n, &self.params)),
        }
    }

    /// Back-substitution against the triangular change of basis.
    pub fn to_laguerre(&self, p: &Polynomial) -> Vec<Rational> {
        let Some(deg) = p.degree() else {
            return Vec::new();
        };
        let mut rest: Vec<Rational> = p.coeffs().to_vec();
        let mut out = vec![Rational::zero(); deg + 1];
        for k in (0..=deg).rev() {
            if rest[k].is_zero() {
                continue;
            }
            let lk = self.poly(k);
            let c = &rest[k] / lk.leading_coeff().expect("L_k has degree k");
            for (i, lc) in lk.coeffs().iter().enumerate() {
                rest[i] -= &c * lc;
            }
            out[k] = c;
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    pub fn from_laguerre(&self, coeffs: &[Rational]) -> Polynomial {
        let mut acc = vec![Rational::zero(); coeffs.len()];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, lc) in self.poly(k).coeffs().iter().enumerate() {
                acc[i] += c * lc;
            }
        }
        Polynomial::new(acc)
    }
}

pub fn to_laguerre_basis(p: &Polynomial, params: &LaguerreParams) -> LaguerreCoeffs {
    let basis = LaguerreBasis::new(params, p.degree().unwrap_or(0));
    LaguerreCoeffs::new(params.clone(), basis.to_laguerre(p))
}

pub fn from_laguerre_basis(c: &LaguerreCoeffs) -> Polynomial {
    let basis = LaguerreBasis::new(&c.params, c.coefficients.len().saturating_sub(1));
    basis.from_laguerre(&c.coefficients)
}

/// Checks `n L_n = (x - alpha - 1) L_n' - x L_n''` as a polynomial identity.
pub fn check_ode(n: usize, params: &LaguerreParams) -> bool {
    let l = laguerre_poly(n, params);
    let d1 = l.derivative();
    let d2 = d1.derivative();
    let shift = Polynomial::new(vec![-(&params.alpha + int(1)), int(1)]);
    let rhs = &(&shift * &d1) - &(&Polynomial::x() * &d2);
    l.scale(&int(n as i64)) == rhs
}

/// Checks `x L_n' = n L_n - (alpha + n) L_{n-1}` and `L_n' = L_{n-1}' - L_{n-1}`.
pub fn check_recurrences(n: usize, params: &LaguerreParams) -> Result<bool> {
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            reason: "recurrences relate L_n to L_{n-1} and need n >= 1",
        });
    }
    let ln = laguerre_poly(n, params);
    let lm = laguerre_poly(n - 1, params);
    let dln = ln.derivative();
    let first = &Polynomial::x() * &dln
        == &ln.scale(&int(n as i64)) - &lm.scale(&(&params.alpha + int(n as i64)));
    let second = dln == &lm.derivative() - &lm;
    Ok(first && second)
}
