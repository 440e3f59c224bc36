use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{int, parse_rational, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q in the monomial basis.
///
/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are always
/// stripped, so the zero polynomial is the empty list and the degree of a
/// nonzero polynomial is `coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(int(1), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `prod (x - r)` over the given roots (repeats allowed).
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), int(1)])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self(inner(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `self(c x + d)`.
    pub fn compose_affine(&self, c: &Rational, d: &Rational) -> Self {
        self.compose(&Self::new(vec![d.clone(), c.clone()]))
    }

    /// Euclidean division over Q: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dr < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); dr - dd + 1];
        for k in (dd..=dr).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let f = &rem[k] / lc;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] -= &f * dc;
            }
            quot[k - dd] = f;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of a division known to be exact. Panics on a zero divisor.
    pub(crate) fn exact_quotient(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Scaled to leading coefficient 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Renders lowest degree first, e.g. `1 - 2x + 1/2 x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{var}")?;
            } else {
                write!(f, "{mag} {var}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Accepts a coefficient list, lowest degree first, either comma-separated
    /// (`1,-2,1/2`) or as a JSON array of strings/integers.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let v: serde_json::Value =
                serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            let items = v
                .as_array()
                .ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
            let coeffs = items
                .iter()
                .map(|item| match item {
                    serde_json::Value::String(s) => parse_rational(s),
                    serde_json::Value::Number(n) => parse_rational(&n.to_string()),
                    other => Err(Error::Parse(format!("bad coefficient {other}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Self::new(coeffs));
        }
        if t.is_empty() {
            return Ok(Self::zero());
        }
        let coeffs = t
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        super::serde_rational::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        super::serde_rational::vec::deserialize(d).map(Polynomial::new)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn product_of_linears() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn zero_absorbs() {
        let q = &p(&[3, 0, 7]) * &Polynomial::zero();
        assert!(q.is_zero());
        assert!(q.coeffs().is_empty());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn degree_adds_under_multiplication() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 0, 0, 5]);
        assert_eq!((&a * &b).degree(), Some(5));
    }

    #[test]
    fn canonical_strip() {
        let q = Polynomial::new(vec![int(1), int(0), int(0)]);
        assert_eq!(q.degree(), Some(0));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), Polynomial::zero());
    }

    #[test]
    fn affine_compose() {
        // (x - 10)^2
        let sq = p(&[0, 0, 1]);
        assert_eq!(sq.compose_affine(&int(1), &int(-10)), p(&[100, -20, 1]));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert!(p(&[7]).derivative().is_zero());
        // 1/2 x^2 - (n+alpha) x + c  ->  x - (n+alpha), with n + alpha = 7/2, c = 5
        let s = rat(7, 2);
        let q = Polynomial::new(vec![int(5), -s.clone(), rat(1, 2)]);
        assert_eq!(q.derivative(), Polynomial::new(vec![-s, int(1)]));
    }

    #[test]
    fn division() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.div_rem(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        let l2 = Polynomial::new(vec![int(1), int(-2), rat(1, 2)]);
        assert_eq!(l2.to_string(), "1 - 2x + 1/2 x^2");
        assert_eq!(p(&[2, -1]).to_string(), "2 - x");
        assert_eq!(p(&[0, 0, -3]).to_string(), "-3x^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn parse() {
        let a: Polynomial = "1,-2,1/2".parse().unwrap();
        let b: Polynomial = r#"["1", -2, "1/2"]"#.parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeff(2), rat(1, 2));
        assert!("1,x".parse::<Polynomial>().is_err());
    }

    #[test]
    fn serde_roundtrip() {
        let a = Polynomial::new(vec![rat(-3, 4), int(0), int(2)]);
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"["-3/4","0","2"]"#);
        let back: Polynomial = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);
    }
}
