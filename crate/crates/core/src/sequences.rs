//! Candidate sequences `{gamma_k}`, their diagonal action in the Laguerre and
//! monomial bases, classical necessary conditions, and closed-form verdicts
//! for the families whose status is known.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{int, is_real_rooted, serde_rational, Polynomial, Rational};
use crate::laguerre::{LaguerreBasis, LaguerreParams};

/// What lies beyond the listed values of an explicit sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tail {
    Zero,
    #[default]
    Unspecified,
}

/// Symbolic description of a sequence `{gamma_k}_{k>=0}`.
///
/// JSON form is internally tagged, rationals as strings:
/// `{"type": "linear", "a": "3/2"}`,
/// `{"type": "explicit", "values": ["1", "-2", "3"], "tail": "zero"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SequenceSpec {
    /// Zero except `gamma_n = g_n` and `gamma_{n+1} = g_n1`.
    Trivial {
        n: usize,
        #[serde(with = "serde_rational")]
        g_n: Rational,
        #[serde(with = "serde_rational")]
        g_n1: Rational,
    },
    /// `r^k`.
    Geometric {
        #[serde(with = "serde_rational")]
        r: Rational,
    },
    /// `k + a`.
    Linear {
        #[serde(with = "serde_rational")]
        a: Rational,
    },
    /// `k (k-1) ... (k-n+1)`, `n >= 1`.
    FallingFactorial { n: usize },
    /// `k^2 + a k + b`.
    Quadratic {
        #[serde(with = "serde_rational")]
        a: Rational,
        #[serde(with = "serde_rational")]
        b: Rational,
    },
    Explicit {
        #[serde(with = "serde_rational::vec")]
        values: Vec<Rational>,
        #[serde(default)]
        tail: Tail,
    },
}

impl SequenceSpec {
    /// Parses and validates the JSON form.
    pub fn from_json(s: &str) -> Result<Self> {
        let spec: SequenceSpec =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceSpec::FallingFactorial { n: 0 } => Err(Error::InvalidArgument(
                "falling factorial sequence needs n >= 1".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn all_ones() -> Self {
        SequenceSpec::Geometric { r: int(1) }
    }

    /// Number of known terms; `None` when defined for every `k`.
    pub fn known_terms(&self) -> Option<usize> {
        match self {
            SequenceSpec::Explicit {
                values,
                tail: Tail::Unspecified,
            } => Some(values.len()),
            _ => None,
        }
    }

    /// `gamma_k`, or `None` past the end of an unspecified explicit prefix.
    pub fn value(&self, k: usize) -> Option<Rational> {
        let kk = int(k as i64);
        Some(match self {
            SequenceSpec::Trivial { n, g_n, g_n1 } => {
                if k == *n {
                    g_n.clone()
                } else if k == n + 1 {
                    g_n1.clone()
                } else {
                    Rational::zero()
                }
            }
            SequenceSpec::Geometric { r } => num_traits::pow(r.clone(), k),
            SequenceSpec::Linear { a } => kk + a,
            SequenceSpec::FallingFactorial { n } => {
                (0..*n).fold(Rational::one(), |acc, j| acc * (&kk - int(j as i64)))
            }
            SequenceSpec::Quadratic { a, b } => &kk * &kk + a * &kk + b,
            SequenceSpec::Explicit { values, tail } => match (values.get(k), tail) {
                (Some(v), _) => v.clone(),
                (None, Tail::Zero) => Rational::zero(),
                (None, Tail::Unspecified) => return None,
            },
        })
    }

    /// `gamma_0 ..= gamma_n`.
    pub fn values(&self, n: usize) -> Result<Vec<Rational>> {
        (0..=n)
            .map(|k| {
                self.value(k).ok_or(Error::InsufficientPrefix {
                    available: self.known_terms().unwrap_or(0),
                    requested: n,
                })
            })
            .collect()
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Trivial { n, g_n, g_n1 } => {
                write!(f, "trivial(gamma_{n} = {g_n}, gamma_{} = {g_n1})", n + 1)
            }
            SequenceSpec::Geometric { r } => write!(f, "{{({r})^k}}"),
            SequenceSpec::Linear { a } => write!(f, "{{k + {a}}}"),
            SequenceSpec::FallingFactorial { n } => write!(f, "{{k(k-1)...(k-{})}}", n - 1),
            SequenceSpec::Quadratic { a, b } => write!(f, "{{k^2 + {a} k + {b}}}"),
            SequenceSpec::Explicit { values, tail } => {
                let v: Vec<String> = values.iter().map(ToString::to_string).collect();
                let tail = match tail {
                    Tail::Zero => ", 0, ...",
                    Tail::Unspecified => ", ?",
                };
                write!(f, "[{}{tail}]", v.join(", "))
            }
        }
    }
}

pub fn sequence_values(spec: &SequenceSpec, n: usize) -> Result<Vec<Rational>> {
    spec.values(n)
}

/// `T_L` restricted to polynomials of degree at most the basis size.
#[derive(Clone, Debug)]
pub struct LaguerreMultiplier {
    basis: LaguerreBasis,
    gammas: Vec<Rational>,
}

impl LaguerreMultiplier {
    pub fn new(spec: &SequenceSpec, params: &LaguerreParams, max_degree: usize) -> Result<Self> {
        Ok(LaguerreMultiplier {
            basis: LaguerreBasis::new(params, max_degree),
            gammas: spec.values(max_degree)?,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.gammas.len() - 1
    }

    pub fn basis(&self) -> &LaguerreBasis {
        &self.basis
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gammas
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut c = self.basis.to_laguerre(p);
        if c.len() > self.gammas.len() {
            return Err(Error::InsufficientPrefix {
                available: self.gammas.len(),
                requested: c.len() - 1,
            });
        }
        for (ck, g) in c.iter_mut().zip(&self.gammas) {
            *ck *= g;
        }
        Ok(self.basis.from_laguerre(&c))
    }
}

/// `T_L[p]`: expand in the Laguerre basis, scale the k-th coefficient by
/// `gamma_k`, expand back.
pub fn apply_diagonal(
    spec: &SequenceSpec,
    params: &LaguerreParams,
    p: &Polynomial,
) -> Result<Polynomial> {
    let deg = p.degree().unwrap_or(0);
    LaguerreMultiplier::new(spec, params, deg)?.apply(p)
}

/// `T[x^k] = gamma_k x^k`.
pub fn apply_classical(spec: &SequenceSpec, p: &Polynomial) -> Result<Polynomial> {
    let gammas = spec.values(p.degree().unwrap_or(0))?;
    Ok(Polynomial::new(
        p.coeffs().iter().zip(&gammas).map(|(c, g)| c * g).collect(),
    ))
}

/// First violation found by a necessary-condition check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub detail: String,
    /// Real-rooted input and its image with non-real zeros, when the check
    /// produces one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Polynomial, Polynomial)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub checked_through: usize,
    pub failure: Option<Failure>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn pass(n: usize) -> Self {
        CheckOutcome {
            checked_through: n,
            failure: None,
        }
    }

    fn fail(n: usize, index: usize, detail: String, witness: Option<(Polynomial, Polynomial)>) -> Self {
        CheckOutcome {
            checked_through: n,
            failure: Some(Failure {
                index,
                detail,
                witness,
            }),
        }
    }
}

/// The classical necessary battery. Each of these is necessary for a
/// classical multiplier sequence and therefore for an `L^(alpha)` one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NecessaryReport {
    pub polya_schur: CheckOutcome,
    pub turan: CheckOutcome,
    pub sign_pattern: CheckOutcome,
    pub zero_pattern: CheckOutcome,
}

impl NecessaryReport {
    pub fn all_passed(&self) -> bool {
        self.polya_schur.passed()
            && self.turan.passed()
            && self.sign_pattern.passed()
            && self.zero_pattern.passed()
    }

    /// First failing check, in a fixed order.
    pub fn first_failure(&self) -> Option<(NecessaryCheck, &Failure)> {
        [
            (NecessaryCheck::ZeroPattern, &self.zero_pattern),
            (NecessaryCheck::SignPattern, &self.sign_pattern),
            (NecessaryCheck::Turan, &self.turan),
            (NecessaryCheck::PolyaSchur, &self.polya_schur),
        ]
        .into_iter()
        .find_map(|(c, o)| o.failure.as_ref().map(|f| (c, f)))
    }
}

fn binomial_row(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one()];
    for k in 1..=n {
        let prev = row[k - 1].clone();
        row.push(prev * int((n + 1 - k) as i64) / int(k as i64));
    }
    row
}

/// The Jensen polynomial `T[(1+x)^n] = sum_k binom(n, k) gamma_k x^k`.
pub fn jensen_polynomial(gammas: &[Rational], n: usize) -> Polynomial {
    Polynomial::new(
        binomial_row(n)
            .into_iter()
            .zip(gammas)
            .map(|(b, g)| b * g)
            .collect(),
    )
}

/// Real-rootedness of every Jensen polynomial of degree `0..=n`.
pub fn polya_schur_test(spec: &SequenceSpec, n: usize) -> Result<CheckOutcome> {
    let gammas = spec.values(n)?;
    for m in 0..=n {
        let jensen = jensen_polynomial(&gammas, m);
        if !is_real_rooted(&jensen).all_real {
            let input = Polynomial::from_ints(&[1, 1]).pow(m);
            return Ok(CheckOutcome::fail(
                n,
                m,
                format!("Jensen polynomial of degree {m} has non-real zeros"),
                Some((input, jensen)),
            ));
        }
    }
    Ok(CheckOutcome::pass(n))
}

/// `gamma_k^2 - gamma_{k-1} gamma_{k+1} >= 0` for `1 <= k <= n`.
///
/// A failure at `k` comes with a classical witness: the real-rooted
/// `x^{k-1} (1+x)^2` maps to `x^{k-1} (gamma_{k-1} + 2 gamma_k x + gamma_{k+1} x^2)`,
/// whose quadratic factor has discriminant `4 (gamma_k^2 - gamma_{k-1} gamma_{k+1})`.
pub fn turan_test(spec: &SequenceSpec, n: usize) -> Result<CheckOutcome> {
    let g = spec.values(n + 1)?;
    for k in 1..=n {
        let t = &g[k] * &g[k] - &g[k - 1] * &g[k + 1];
        if t.is_negative() {
            let shift = Polynomial::monomial(int(1), k - 1);
            let input = &shift * &Polynomial::from_ints(&[1, 2, 1]);
            let image = &shift
                * &Polynomial::new(vec![g[k - 1].clone(), &g[k] * int(2), g[k + 1].clone()]);
            return Ok(CheckOutcome::fail(
                n,
                k,
                format!("gamma_{k}^2 - gamma_{}*gamma_{} = {t} < 0", k - 1, k + 1),
                Some((input, image)),
            ));
        }
    }
    Ok(CheckOutcome::pass(n))
}

/// Nonzero terms are all of one sign, or alternate in sign by index.
pub fn sign_pattern_test(spec: &SequenceSpec, n: usize) -> Result<CheckOutcome> {
    let g = spec.values(n)?;
    let signed: Vec<(usize, bool)> = g
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (k, v.is_positive()))
        .collect();
    let Some(&(k0, pos0)) = signed.first() else {
        return Ok(CheckOutcome::pass(n));
    };
    let same = signed.iter().find(|&&(_, pos)| pos != pos0);
    let alternating = signed
        .iter()
        .find(|&&(k, pos)| pos != (pos0 == ((k - k0) % 2 == 0)));
    match (same, alternating) {
        (None, _) | (_, None) => Ok(CheckOutcome::pass(n)),
        (Some(&(a, _)), Some(&(b, _))) => Ok(CheckOutcome::fail(
            n,
            a.max(b),
            format!("terms neither share one sign nor alternate (first conflict by index {})", a.max(b)),
            None,
        )),
    }
}

/// Zero pattern of a multiplier sequence: after the first nonzero term, a
/// zero term forces every later term to vanish; and unless the support is at
/// most two consecutive terms (a trivial sequence), no zero may follow the
/// first nonzero term at all.
pub fn zero_pattern_test(spec: &SequenceSpec, n: usize) -> Result<CheckOutcome> {
    let g = spec.values(n)?;
    let Some(first) = g.iter().position(|v| !v.is_zero()) else {
        return Ok(CheckOutcome::pass(n));
    };
    let Some(gap) = g[first..].iter().position(Zero::is_zero).map(|i| i + first) else {
        return Ok(CheckOutcome::pass(n));
    };
    if let Some(k) = g[gap..].iter().position(|v| !v.is_zero()).map(|i| i + gap) {
        return Ok(CheckOutcome::fail(
            n,
            k,
            format!("gamma_{gap} = 0 but gamma_{k} != 0 after nonzero gamma_{first}"),
            None,
        ));
    }
    if gap - first > 2 {
        return Ok(CheckOutcome::fail(
            n,
            gap,
            format!(
                "nontrivial sequence (nonzero from index {first}) vanishes at index {gap}"
            ),
            None,
        ));
    }
    Ok(CheckOutcome::pass(n))
}

/// All four necessary checks at level `n` (Turan reads `gamma_{n+1}`).
pub fn necessary_battery(spec: &SequenceSpec, n: usize) -> Result<NecessaryReport> {
    Ok(NecessaryReport {
        polya_schur: polya_schur_test(spec, n)?,
        turan: turan_test(spec, n)?,
        sign_pattern: sign_pattern_test(spec, n)?,
        zero_pattern: zero_pattern_test(spec, n)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NecessaryCheck {
    PolyaSchur,
    Turan,
    SignPattern,
    ZeroPattern,
}

/// Closed-form bounds on `(a, b)` for `{k^2 + a k + b}` at `alpha = 0`, each
/// necessary for being a multiplier sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum QuadraticBound {
    AAtLeastMinusOne,
    BNonNegative,
    BAtMostQuarterSquare,
    AAtMostFour,
    BAtLeastAMinusOne,
}

impl QuadraticBound {
    pub const ALL: [QuadraticBound; 5] = [
        QuadraticBound::AAtLeastMinusOne,
        QuadraticBound::BNonNegative,
        QuadraticBound::BAtMostQuarterSquare,
        QuadraticBound::AAtMostFour,
        QuadraticBound::BAtLeastAMinusOne,
    ];

    pub fn token(self) -> &'static str {
        match self {
            QuadraticBound::AAtLeastMinusOne => "a>=-1",
            QuadraticBound::BNonNegative => "b>=0",
            QuadraticBound::BAtMostQuarterSquare => "b<=(a+1)^2/4",
            QuadraticBound::AAtMostFour => "a<=4",
            QuadraticBound::BAtLeastAMinusOne => "b>=a-1",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.token() == s)
    }

    pub fn holds(self, a: &Rational, b: &Rational) -> bool {
        match self {
            QuadraticBound::AAtLeastMinusOne => *a >= int(-1),
            QuadraticBound::BNonNegative => !b.is_negative(),
            QuadraticBound::BAtMostQuarterSquare => {
                let s = a + int(1);
                *b <= &s * &s / int(4)
            }
            QuadraticBound::AAtMostFour => *a <= int(4),
            QuadraticBound::BAtLeastAMinusOne => *b >= a - int(1),
        }
    }
}

/// First violated bound, in the order of [`QuadraticBound::ALL`].
pub fn violated_quadratic_bound(a: &Rational, b: &Rational) -> Option<QuadraticBound> {
    QuadraticBound::ALL.into_iter().find(|bd| !bd.holds(a, b))
}

/// `b = a - 1` with `1 <= a <= 3` gives a multiplier sequence at `alpha = 0`.
pub fn on_quadratic_line(a: &Rational, b: &Rational) -> bool {
    *b == a - int(1) && *a >= int(1) && *a <= int(3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    IsMs,
    NotMs,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::IsMs => "IS_MS",
            Verdict::NotMs => "NOT_MS",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

/// Why a verdict holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum Citation {
    /// Two consecutive nonzero terms: any combination of consecutive
    /// Laguerre polynomials is real-rooted.
    TrivialSequence,
    /// `{r^k}` works only for `r = 1`.
    GeometricOnlyOne,
    /// `{k + a}` works iff `0 <= a <= alpha + 1`.
    LinearRange,
    /// Falling factorial sequences always work.
    FallingFactorial,
    QuadraticBound(QuadraticBound),
    /// `b = a - 1`, `1 <= a <= 3`, `alpha = 0`.
    QuadraticLine,
    Necessary(NecessaryCheck),
}

impl Citation {
    pub fn token(self) -> &'static str {
        match self {
            Citation::TrivialSequence => "trivial-pair",
            Citation::GeometricOnlyOne => "geometric-r=1-only",
            Citation::LinearRange => "linear-0<=a<=alpha+1",
            Citation::FallingFactorial => "falling-factorial",
            Citation::QuadraticBound(b) => b.token(),
            Citation::QuadraticLine => "line-b=a-1",
            Citation::Necessary(NecessaryCheck::PolyaSchur) => "jensen-polynomials",
            Citation::Necessary(NecessaryCheck::Turan) => "turan-inequality",
            Citation::Necessary(NecessaryCheck::SignPattern) => "sign-pattern",
            Citation::Necessary(NecessaryCheck::ZeroPattern) => "zero-pattern",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl From<Citation> for String {
    fn from(c: Citation) -> String {
        c.token().to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub citation: Option<Citation>,
}

impl Classification {
    fn new(verdict: Verdict, citation: Citation) -> Self {
        Classification {
            verdict,
            citation: Some(citation),
        }
    }

    fn unknown() -> Self {
        Classification {
            verdict: Verdict::Unknown,
            citation: None,
        }
    }
}

/// Prefix length used when a verdict falls back to the pattern checks.
const PATTERN_PREFIX: usize = 12;

/// Verdict from known results, for the families that have one.
pub fn classify_known(spec: &SequenceSpec, params: &LaguerreParams) -> Classification {
    use SequenceSpec::*;
    match spec {
        Trivial { .. } => Classification::new(Verdict::IsMs, Citation::TrivialSequence),
        Geometric { r } => {
            if r.is_one() {
                Classification::new(Verdict::IsMs, Citation::GeometricOnlyOne)
            } else if r.is_zero() {
                // (1, 0, 0, ...) is a trivial sequence
                Classification::new(Verdict::IsMs, Citation::TrivialSequence)
            } else {
                Classification::new(Verdict::NotMs, Citation::GeometricOnlyOne)
            }
        }
        Linear { a } => {
            let ok = !a.is_negative() && *a <= params.alpha() + int(1);
            let v = if ok { Verdict::IsMs } else { Verdict::NotMs };
            Classification::new(v, Citation::LinearRange)
        }
        FallingFactorial { .. } => Classification::new(Verdict::IsMs, Citation::FallingFactorial),
        Quadratic { a, b } => {
            if *a == int(-1) && b.is_zero() {
                // k^2 - k = k (k - 1)
                return Classification::new(Verdict::IsMs, Citation::FallingFactorial);
            }
            if params.alpha().is_zero() {
                if let Some(bound) = violated_quadratic_bound(a, b) {
                    return Classification::new(Verdict::NotMs, Citation::QuadraticBound(bound));
                }
                if on_quadratic_line(a, b) {
                    return Classification::new(Verdict::IsMs, Citation::QuadraticLine);
                }
            }
            pattern_verdict(spec, PATTERN_PREFIX)
        }
        Explicit { values, tail } => {
            let support: Vec<usize> = values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, _)| k)
                .collect();
            let consecutive = match support.as_slice() {
                [] | [_] => true,
                [i, j] => j - i == 1,
                _ => false,
            };
            if *tail == Tail::Zero && consecutive {
                return Classification::new(Verdict::IsMs, Citation::TrivialSequence);
            }
            let n = match tail {
                Tail::Zero => values.len(),
                Tail::Unspecified => values.len().saturating_sub(1),
            };
            pattern_verdict(spec, n)
        }
    }
}

/// NOT_MS when the cheap sequence-pattern checks fail on the prefix through
/// `n`, otherwise UNKNOWN.
fn pattern_verdict(spec: &SequenceSpec, n: usize) -> Classification {
    type Check = fn(&SequenceSpec, usize) -> Result<CheckOutcome>;
    let checks: [(NecessaryCheck, Check, usize); 3] = [
        (NecessaryCheck::ZeroPattern, zero_pattern_test, n),
        (NecessaryCheck::SignPattern, sign_pattern_test, n),
        (NecessaryCheck::Turan, turan_test, n.saturating_sub(1)),
    ];
    for (which, check, level) in checks {
        if let Ok(outcome) = check(spec, level) {
            if !outcome.passed() {
                return Classification::new(Verdict::NotMs, Citation::Necessary(which));
            }
        }
    }
    Classification::unknown()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::laguerre::laguerre_poly;

    fn explicit(v: &[i64], tail: Tail) -> SequenceSpec {
        SequenceSpec::Explicit {
            values: v.iter().map(|&x| int(x)).collect(),
            tail,
        }
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn values_examples() {
        assert_eq!(
            SequenceSpec::Linear { a: int(1) }.values(3).unwrap(),
            ints(&[1, 2, 3, 4])
        );
        assert_eq!(
            SequenceSpec::FallingFactorial { n: 2 }.values(4).unwrap(),
            ints(&[0, 0, 2, 6, 12])
        );
        assert_eq!(
            SequenceSpec::Geometric { r: int(2) }.values(3).unwrap(),
            ints(&[1, 2, 4, 8])
        );
        let t = SequenceSpec::Trivial {
            n: 2,
            g_n: int(3),
            g_n1: int(-1),
        };
        assert_eq!(t.values(5).unwrap(), ints(&[0, 0, 3, -1, 0, 0]));
        let q = SequenceSpec::Quadratic { a: int(2), b: int(1) };
        assert_eq!(q.values(3).unwrap(), ints(&[1, 4, 9, 16]));
    }

    #[test]
    fn explicit_prefix_limits() {
        let e = explicit(&[1, 2, 3], Tail::Unspecified);
        assert!(e.values(2).is_ok());
        assert_eq!(
            e.values(3),
            Err(Error::InsufficientPrefix {
                available: 3,
                requested: 3
            })
        );
        let z = explicit(&[1, 2, 3], Tail::Zero);
        assert_eq!(z.values(4).unwrap(), ints(&[1, 2, 3, 0, 0]));
    }

    #[test]
    fn json_forms() {
        let s = SequenceSpec::from_json(r#"{"type": "linear", "a": "3/2"}"#).unwrap();
        assert_eq!(s, SequenceSpec::Linear { a: rat(3, 2) });
        let e = SequenceSpec::from_json(
            r#"{"type": "explicit", "values": ["1","-2","3"], "tail": "zero"}"#,
        )
        .unwrap();
        assert_eq!(e, explicit(&[1, -2, 3], Tail::Zero));
        let t = SequenceSpec::from_json(r#"{"type":"trivial","n":2,"g_n":"1","g_n1":"-1/2"}"#)
            .unwrap();
        assert_eq!(SequenceSpec::from_json(&t.to_json()).unwrap(), t);
        assert!(SequenceSpec::from_json(r#"{"type":"falling_factorial","n":0}"#).is_err());
        assert!(SequenceSpec::from_json(r#"{"type":"linear"}"#).is_err());
        assert!(SequenceSpec::from_json("not json").is_err());
        assert_eq!(
            SequenceSpec::Quadratic { a: int(2), b: rat(1, 4) }.to_json(),
            r#"{"type":"quadratic","a":"2","b":"1/4"}"#
        );
    }

    #[test]
    fn remark_reproduction() {
        let spec = explicit(&[1, -2, 3], Tail::Unspecified);
        let p = Polynomial::from_ints(&[100, -20, 1]);
        let img = apply_diagonal(&spec, &LaguerreParams::simple(), &p).unwrap();
        assert_eq!(img, Polynomial::from_ints(&[56, 20, 3]));
        assert!(!is_real_rooted(&img).all_real);
    }

    #[test]
    fn diagonal_identity_and_linear() {
        let p = Polynomial::new(vec![rat(1, 2), int(3), int(-1), rat(2, 7)]);
        let a = LaguerreParams::new(rat(1, 2)).unwrap();
        assert_eq!(apply_diagonal(&SequenceSpec::all_ones(), &a, &p).unwrap(), p);
        let shift = rat(5, 3);
        for k in 0..=6 {
            let l = laguerre_poly(k, &a);
            let img = apply_diagonal(&SequenceSpec::Linear { a: shift.clone() }, &a, &l).unwrap();
            assert_eq!(img, l.scale(&(&shift + int(k as i64))));
        }
        let short = explicit(&[1, 2], Tail::Unspecified);
        assert!(apply_diagonal(&short, &a, &p).is_err());
    }

    #[test]
    fn classical_action() {
        let p = Polynomial::from_ints(&[1, 1, 1]);
        assert_eq!(
            apply_classical(&SequenceSpec::Linear { a: int(0) }, &p).unwrap(),
            Polynomial::from_ints(&[0, 1, 2])
        );
        assert_eq!(apply_classical(&SequenceSpec::all_ones(), &p).unwrap(), p);
        let r = rat(-3, 2);
        let got = apply_classical(
            &SequenceSpec::Geometric { r: r.clone() },
            &Polynomial::from_ints(&[1, 2, 1]),
        )
        .unwrap();
        assert_eq!(got, Polynomial::new(vec![int(1), r.clone()]).pow(2));
    }

    #[test]
    fn polya_schur_examples() {
        let ok = polya_schur_test(&SequenceSpec::Linear { a: rat(1, 2) }, 10).unwrap();
        assert!(ok.passed());
        // {k + a} has Jensen polynomials (1+x)^{n-1} (a + (a+n) x): always
        // real-rooted, so a < 0 is only caught by the sign pattern.
        let neg = SequenceSpec::Linear { a: rat(-1, 2) };
        assert!(polya_schur_test(&neg, 10).unwrap().passed());
        let sign = sign_pattern_test(&neg, 2).unwrap();
        assert_eq!(sign.failure.unwrap().index, 2);
        // gamma = (1, 0, 1): degree-2 Jensen polynomial is 1 + x^2
        let bad = explicit(&[1, 0, 1], Tail::Zero);
        let out = polya_schur_test(&bad, 4).unwrap();
        let f = out.failure.unwrap();
        assert_eq!(f.index, 2);
        let (input, image) = f.witness.unwrap();
        assert!(is_real_rooted(&input).all_real);
        assert!(!is_real_rooted(&image).all_real);
    }

    #[test]
    fn turan_examples() {
        assert!(turan_test(&SequenceSpec::Linear { a: int(1) }, 10).unwrap().passed());
        let bad = explicit(&[1, 2, 3, 2, 5, 6, 7], Tail::Unspecified);
        let out = turan_test(&bad, 5).unwrap();
        let f = out.failure.unwrap();
        assert_eq!(f.index, 3);
        let (input, image) = f.witness.unwrap();
        assert!(is_real_rooted(&input).all_real);
        assert!(!is_real_rooted(&apply_classical(&bad, &input).unwrap()).all_real);
        assert_eq!(apply_classical(&bad, &input).unwrap(), image);
        assert!(turan_test(&explicit(&[1, 2], Tail::Unspecified), 1).is_err());
    }

    #[test]
    fn pattern_examples() {
        let out = zero_pattern_test(&explicit(&[1, 0, 5], Tail::Unspecified), 2).unwrap();
        assert_eq!(out.failure.unwrap().index, 2);
        assert!(sign_pattern_test(&explicit(&[1, -2, 3, -4], Tail::Unspecified), 3)
            .unwrap()
            .passed());
        assert!(!sign_pattern_test(&explicit(&[1, -2, -3], Tail::Unspecified), 2)
            .unwrap()
            .passed());
        assert!(zero_pattern_test(&SequenceSpec::FallingFactorial { n: 3 }, 10)
            .unwrap()
            .passed());
        let finite = explicit(&[1, 2, 3], Tail::Zero);
        assert_eq!(zero_pattern_test(&finite, 5).unwrap().failure.unwrap().index, 3);
        let pair = explicit(&[0, 4, 5], Tail::Zero);
        assert!(zero_pattern_test(&pair, 6).unwrap().passed());
    }

    #[test]
    fn classify_examples() {
        let a0 = LaguerreParams::simple();
        let a1 = LaguerreParams::new(int(1)).unwrap();
        assert_eq!(
            classify_known(&SequenceSpec::Geometric { r: int(2) }, &a0).verdict,
            Verdict::NotMs
        );
        assert_eq!(
            classify_known(&SequenceSpec::Geometric { r: int(1) }, &a0).verdict,
            Verdict::IsMs
        );
        let lin = SequenceSpec::Linear { a: rat(3, 2) };
        assert_eq!(classify_known(&lin, &a1).verdict, Verdict::IsMs);
        assert_eq!(classify_known(&lin, &a0).verdict, Verdict::NotMs);
        let q = classify_known(&SequenceSpec::Quadratic { a: int(2), b: int(1) }, &a0);
        assert_eq!(q.verdict, Verdict::IsMs);
        assert_eq!(q.citation, Some(Citation::QuadraticLine));
        let out = classify_known(&SequenceSpec::Quadratic { a: int(1), b: int(2) }, &a0);
        assert_eq!(
            out.citation,
            Some(Citation::QuadraticBound(QuadraticBound::BAtMostQuarterSquare))
        );
        // bounds are alpha = 0 only
        let q1 = classify_known(&SequenceSpec::Quadratic { a: int(1), b: int(2) }, &a1);
        assert_eq!(q1.verdict, Verdict::Unknown);
        let inside = classify_known(&SequenceSpec::Quadratic { a: int(0), b: rat(1, 8) }, &a0);
        assert_eq!(inside.verdict, Verdict::Unknown);
        let ff = classify_known(&SequenceSpec::Quadratic { a: int(-1), b: int(0) }, &a1);
        assert_eq!(ff.verdict, Verdict::IsMs);
        assert_eq!(
            classify_known(&explicit(&[0, 3, -2], Tail::Zero), &a0).verdict,
            Verdict::IsMs
        );
        assert_eq!(
            classify_known(&explicit(&[1, 0, 5], Tail::Unspecified), &a0).citation,
            Some(Citation::Necessary(NecessaryCheck::ZeroPattern))
        );
    }

    #[test]
    fn bound_tokens_round_trip() {
        for b in QuadraticBound::ALL {
            assert_eq!(QuadraticBound::from_token(b.token()), Some(b));
        }
    }
}
