use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{int, Polynomial, Rational};
use crate::error::{Error, Result};

/// `content * prod part_i ^ mult_i`, with every part monic, square-free and
/// pairwise coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeDecomposition {
    pub content: Rational,
    pub parts: Vec<(Polynomial, usize)>,
}

impl SquareFreeDecomposition {
    pub fn reconstruct(&self) -> Polynomial {
        self.parts
            .iter()
            .fold(Polynomial::constant(self.content.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }
}

/// Outcome of the exact real-rootedness test.
///
/// The zero polynomial reports degree 0 and `all_real = true`; so do nonzero
/// constants, which have no zeros at all.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootednessVerdict {
    pub all_real: bool,
    pub degree: usize,
    pub real_count_with_multiplicity: usize,
}

/// Monic gcd over Q. Rejects `gcd(0, 0)`.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = p.monic();
    let mut b = q.monic();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

/// Yun's square-free decomposition.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<SquareFreeDecomposition> {
    let content = p.leading_coeff().ok_or(Error::ZeroPolynomial)?.clone();
    let f = p.monic();
    let mut parts = Vec::new();
    if f.is_constant() {
        return Ok(SquareFreeDecomposition { content, parts });
    }

    let df = f.derivative();
    let a0 = poly_gcd(&f, &df)?;
    let mut b = f.exact_quotient(&a0);
    let c = df.exact_quotient(&a0);
    let mut d = &c - &b.derivative();
    let mut mult = 1;
    while !b.is_constant() {
        let a = poly_gcd(&b, &d)?;
        b = b.exact_quotient(&a);
        let c = d.exact_quotient(&a);
        d = &c - &b.derivative();
        if !a.is_constant() {
            parts.push((a, mult));
        }
        mult += 1;
    }
    Ok(SquareFreeDecomposition { content, parts })
}

/// Number of distinct real roots of a square-free polynomial, from sign
/// variations of its Sturm chain at -inf and +inf.
///
/// The chain is built over Z: every element is made primitive, and
/// remainders come from pseudo-division scaled by `|lc|` so each one is a
/// positive multiple of the true Euclidean remainder.
pub fn sturm_distinct_real_roots(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_chain(p);
    if chain.last().is_some_and(|last| last.len() > 1) {
        return Err(Error::NotSquareFree);
    }
    let at_pos_inf = sign_variations(chain.iter().map(|c| sign(c.last().unwrap())));
    let at_neg_inf = sign_variations(chain.iter().map(|c| {
        let s = sign(c.last().unwrap());
        if (c.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Ok(at_neg_inf - at_pos_inf)
}

/// Exact decision: does every complex zero of `p` lie on the real line?
pub fn is_real_rooted(p: &Polynomial) -> RootednessVerdict {
    let Some(degree) = p.degree() else {
        return RootednessVerdict {
            all_real: true,
            degree: 0,
            real_count_with_multiplicity: 0,
        };
    };
    let sqf = squarefree_decomposition(p).expect("nonzero input");
    let count = sqf
        .parts
        .iter()
        .map(|(f, m)| m * sturm_distinct_real_roots(f).expect("square-free part"))
        .sum::<usize>();
    RootednessVerdict {
        all_real: count == degree,
        degree,
        real_count_with_multiplicity: count,
    }
}

/// `b^2 - 4ac` for `ax^2 + bx + c`.
pub fn discriminant_quadratic(p: &Polynomial) -> Result<Rational> {
    if p.degree() != Some(2) {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: p.degree(),
        });
    }
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    Ok(&b * &b - int(4) * a * c)
}

type IntPoly = Vec<BigInt>;

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Positive rational multiple of `p` with coprime integer coefficients.
fn primitive_integer(p: &Polynomial) -> IntPoly {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    v
}

/// Positive multiple of `a mod b` (Euclidean remainder over Q).
fn positive_pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let lc_abs = lc.abs();
    let lc_neg = lc.is_negative();
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lc_abs;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &lead * bc;
            if lc_neg {
                r[dr - db + i] += t;
            } else {
                r[dr - db + i] -= t;
            }
        }
        debug_assert!(r[dr].is_zero());
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn sturm_chain(p: &Polynomial) -> Vec<IntPoly> {
    let p0 = primitive_integer(p);
    let p1 = primitive_integer(&p.derivative());
    let mut chain = vec![p0];
    if p1.is_empty() {
        return chain;
    }
    chain.push(p1);
    loop {
        let n = chain.len();
        let r = positive_pseudo_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        let next: IntPoly = make_primitive(r).into_iter().map(|c| -c).collect();
        chain.push(next);
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn roots(r: &[i64]) -> Polynomial {
        Polynomial::from_roots(&r.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        let q = p(&[4, 0, 2]);
        assert_eq!(poly_gcd(&q, &Polynomial::zero()).unwrap(), q.monic());
        assert_eq!(
            poly_gcd(&roots(&[2, 2, -1]), &roots(&[2, -3])).unwrap(),
            p(&[-2, 1])
        );
        assert_eq!(
            poly_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_examples() {
        let d = squarefree_decomposition(&roots(&[1, 1, -2])).unwrap();
        assert_eq!(d.content, int(1));
        assert_eq!(d.parts, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);

        let d = squarefree_decomposition(&p(&[1, 0, 1])).unwrap();
        assert_eq!(d.parts, vec![(p(&[1, 0, 1]), 1)]);

        let sq = p(&[-4, 0, 1]).pow(2);
        let d = squarefree_decomposition(&sq).unwrap();
        assert_eq!(d.parts, vec![(p(&[-4, 0, 1]), 2)]);
        assert_eq!(d.reconstruct(), sq);

        assert_eq!(
            squarefree_decomposition(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_keeps_content() {
        let q = roots(&[3, 3, 3]).scale(&rat(-5, 7));
        let d = squarefree_decomposition(&q).unwrap();
        assert_eq!(d.content, rat(-5, 7));
        assert_eq!(d.parts, vec![(p(&[-3, 1]), 3)]);
        assert_eq!(d.reconstruct(), q);
        let c = squarefree_decomposition(&p(&[9])).unwrap();
        assert!(c.parts.is_empty());
        assert_eq!(c.content, int(9));
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_distinct_real_roots(&p(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_distinct_real_roots(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_distinct_real_roots(&p(&[0, -1, 0, 1])).unwrap(), 3);
        assert_eq!(sturm_distinct_real_roots(&p(&[5])).unwrap(), 0);
        assert_eq!(
            sturm_distinct_real_roots(&roots(&[1, 1])),
            Err(Error::NotSquareFree)
        );
        // negative leading coefficient
        assert_eq!(sturm_distinct_real_roots(&p(&[1, 0, -1])).unwrap(), 2);
    }

    #[test]
    fn rootedness_examples() {
        let v = is_real_rooted(&roots(&[10, 10]));
        assert!(v.all_real);
        assert_eq!(v.real_count_with_multiplicity, 2);
        assert!(!is_real_rooted(&p(&[56, 20, 3])).all_real);
        let z = is_real_rooted(&Polynomial::zero());
        assert!(z.all_real);
        assert!(is_real_rooted(&p(&[-3])).all_real);
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant_quadratic(&p(&[-1, 0, 1])).unwrap(), int(4));
        assert_eq!(discriminant_quadratic(&p(&[56, 20, 3])).unwrap(), int(-272));
        assert_eq!(discriminant_quadratic(&p(&[0, 0, 1])).unwrap(), int(0));
        assert!(matches!(
            discriminant_quadratic(&p(&[1, 1])),
            Err(Error::DegreeMismatch { expected: 2, found: Some(1) })
        ));
    }
}
