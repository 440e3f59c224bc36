//! Exact rational scalars, dense univariate polynomials over Q, and an exact
//! real-rootedness decision procedure (Yun square-free decomposition followed
//! by Sturm counting on each part).
//!
//! Nothing in this module touches floating point.

mod polynomial;
mod realroots;

pub use polynomial::Polynomial;
pub use realroots::{
    discriminant_quadratic, is_real_rooted, poly_gcd, squarefree_decomposition,
    sturm_distinct_real_roots, RootednessVerdict, SquareFreeDecomposition,
};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"num/den"` or an integer string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    t.parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(int(1), |acc, k| acc * int(k as i64))
}

/// Serde adapters that write rationals as `"num/den"` strings.
pub mod serde_rational {
    use super::{parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = RawRational::deserialize(d)?;
        raw.into_rational().map_err(D::Error::custom)
    }

    /// Accepts either a string or a JSON integer.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RawRational {
        Text(String),
        Int(i64),
    }

    impl RawRational {
        pub(crate) fn into_rational(self) -> Result<Rational, String> {
            match self {
                RawRational::Text(s) => parse_rational(&s).map_err(|e| e.to_string()),
                RawRational::Int(i) => Ok(super::int(i)),
            }
        }
    }

    pub mod vec {
        use super::{RawRational, Rational};
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&r.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw = Vec::<RawRational>::deserialize(d)?;
            raw.into_iter()
                .map(|r| r.into_rational().map_err(D::Error::custom))
                .collect()
        }
    }
}
