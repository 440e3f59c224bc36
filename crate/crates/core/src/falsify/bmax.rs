use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::search::{Witness, WitnessFamily};
use crate::error::{Error, Result};
use crate::exactmath::{int, is_real_rooted, rat, Polynomial, Rational};
use crate::laguerre::{laguerre_poly, LaguerreParams};
use crate::sequences::{turan_test, LaguerreMultiplier, SequenceSpec};

/// Enclosure of a boundary point of `E_n = {b : L_n + b L_{n-2} is real-rooted}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmaxResult {
    pub n: usize,
    /// Member of `E_n`.
    pub lo: Rational,
    /// Non-member of `E_n`, with `hi - lo <= tol`.
    pub hi: Rational,
    /// Starting upper end, `(n + alpha)/2 + 1`, outside `E_n`.
    pub hi_start: Rational,
    pub scan_points: usize,
    /// A member of `E_n` found above `hi` by the validation scan. `Some`
    /// means the bisection stopped at an interior gap, not at the maximum.
    pub stray_member: Option<Rational>,
}

impl BmaxResult {
    pub fn validated(&self) -> bool {
        self.stray_member.is_none()
    }
}

struct PairFamily {
    ln: Polynomial,
    lm2: Polynomial,
}

impl PairFamily {
    fn new(n: usize, params: &LaguerreParams) -> Self {
        PairFamily {
            ln: laguerre_poly(n, params),
            lm2: laguerre_poly(n - 2, params),
        }
    }

    fn at(&self, b: &Rational) -> Polynomial {
        &self.ln + &self.lm2.scale(b)
    }

    fn contains(&self, b: &Rational) -> bool {
        is_real_rooted(&self.at(b)).all_real
    }
}

fn start_above(n: usize, params: &LaguerreParams) -> Rational {
    (params.alpha() + int(n as i64)) / int(2) + int(1)
}

/// Shrinks `[0, hi]` to width `<= tol`, keeping `lo` in `E_n` and `hi` out.
fn bisect(family: &PairFamily, mut hi: Rational, tol: &Rational) -> (Rational, Rational) {
    let mut lo = Rational::zero();
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / int(2);
        if family.contains(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Bisection for the top of `E_n` on the exact membership predicate, then a
/// fine scan with step `tol` over `[hi, hi_start]` that looks for members
/// the bisection may have jumped over.
///
/// The start `hi_start = (n + alpha)/2 + 1` lies outside `E_n`: the
/// `(n-2)`-th derivative of `L_n + b L_{n-2}` is, up to sign,
/// `x^2/2 - (n + alpha) x + (n + alpha)(n + alpha - 1)/2 + b`, whose
/// discriminant `(n + alpha) - 2b` is negative there.
///
/// The scan costs about `(hi_start - bmax) / tol` exact root counts.
pub fn compute_bmax(n: usize, params: &LaguerreParams, tol: &Rational) -> Result<BmaxResult> {
    if n < 2 {
        return Err(Error::IndexOutOfRange {
            index: n,
            reason: "E_n is defined for n >= 2",
        });
    }
    if !tol.is_positive() {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }
    let family = PairFamily::new(n, params);
    let hi_start = start_above(n, params);
    let (lo, hi) = bisect(&family, hi_start.clone(), tol);

    let steps = ((&hi_start - &hi) / tol).floor().to_integer();
    let steps: usize = steps.try_into().unwrap_or(usize::MAX);
    let stray_member = (0..=steps)
        .into_par_iter()
        .map(|j| &hi + tol * int(j as i64))
        .find_first(|b| family.contains(b));

    Ok(BmaxResult {
        n,
        lo,
        hi,
        hi_start,
        scan_points: steps + 1,
        stray_member,
    })
}

/// Witness from `L_n + b L_{n-2}` when `gamma_{n-2} > gamma_n > 0`: the image
/// is `gamma_n (L_n + (gamma_{n-2}/gamma_n) b L_{n-2})`, pushed above the top
/// of `E_n` when `b` is just below it. Uses bisection only: the witness is
/// certified exactly, so no validation scan is needed.
pub fn laguerre_pair_witness(
    multiplier: &LaguerreMultiplier,
    n: usize,
) -> Result<Option<Witness>> {
    let g = multiplier.gammas();
    if n < 2 || n > multiplier.max_degree() {
        return Err(Error::IndexOutOfRange {
            index: n,
            reason: "laguerre pair needs 2 <= n <= max_degree",
        });
    }
    let (gn, gm) = (&g[n], &g[n - 2]);
    if !gn.is_positive() || !gm.is_positive() || gm <= gn {
        return Ok(None);
    }
    let ratio = gm / gn;
    let params = multiplier.basis().params().clone();
    let family = PairFamily::new(n, &params);
    let mut tol = rat(1, 64);
    // 2^-40
    let floor = rat(1, 1 << 40);
    while tol >= floor {
        let (lo, hi) = bisect(&family, start_above(n, &params), &tol);
        if &ratio * &lo > hi && !lo.is_zero() {
            let input = family.at(&lo);
            let image = multiplier.apply(&input)?;
            let fp: BTreeMap<String, String> = [
                ("n".to_string(), n.to_string()),
                ("b".to_string(), lo.to_string()),
            ]
            .into_iter()
            .collect();
            if let Some(w) = Witness::certify(WitnessFamily::LaguerrePair, fp, input, image) {
                return Ok(Some(w));
            }
        }
        tol /= int(16);
    }
    Ok(None)
}

/// How a positive sequence fared against "multiplier sequences are
/// nondecreasing".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonotonicityOutcome {
    Nondecreasing,
    /// Some `gamma_{n-2} > gamma_n`, and the pair family produced a witness.
    LaguerrePairWitness(Box<Witness>),
    /// Every `gamma_{n-2} <= gamma_n`, so the decrease must break Turan's
    /// inequality; it does, at this index.
    TuranFailure { index: usize },
    /// A decrease that neither mechanism explains. Not expected to happen.
    Unexplained { index: usize },
}

impl MonotonicityOutcome {
    pub fn holds(&self) -> bool {
        !matches!(self, MonotonicityOutcome::Unexplained { .. })
    }
}

/// Checks the contrapositive of monotonicity on `gamma_0..=gamma_n`: if the
/// prefix ever decreases, expect a pair-family witness or a Turan failure.
pub fn verify_monotonicity_consequence(
    spec: &SequenceSpec,
    params: &LaguerreParams,
    n: usize,
) -> Result<MonotonicityOutcome> {
    let multiplier = LaguerreMultiplier::new(spec, params, n)?;
    let g = multiplier.gammas();
    if let Some(k) = g.iter().position(|v| !v.is_positive()) {
        return Err(Error::InvalidArgument(format!(
            "sequence must be positive through {n}, but gamma_{k} = {}",
            g[k]
        )));
    }
    let Some(drop) = g.windows(2).position(|w| w[1] < w[0]) else {
        return Ok(MonotonicityOutcome::Nondecreasing);
    };
    for m in 2..=n {
        if g[m - 2] > g[m] {
            if let Some(w) = laguerre_pair_witness(&multiplier, m)? {
                return Ok(MonotonicityOutcome::LaguerrePairWitness(Box::new(w)));
            }
        }
    }
    if n >= 2 {
        let turan = turan_test(spec, n - 1)?;
        if let Some(f) = turan.failure {
            return Ok(MonotonicityOutcome::TuranFailure { index: f.index });
        }
    }
    Ok(MonotonicityOutcome::Unexplained { index: drop + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::Tail;

    fn alpha(n: i64, d: i64) -> LaguerreParams {
        LaguerreParams::new(rat(n, d)).unwrap()
    }

    #[test]
    fn bmax_two_encloses_closed_form() {
        let tol = rat(1, 1000);
        for a in [alpha(0, 1), alpha(2, 1)] {
            let r = compute_bmax(2, &a, &tol).unwrap();
            let exact = (a.alpha() + int(2)) / int(2);
            assert!(r.lo <= exact && exact < r.hi, "{} {}", r.lo, r.hi);
            assert!(&r.hi - &r.lo <= tol);
            assert!(r.validated());
        }
    }

    #[test]
    fn bmax_rejects_bad_input() {
        assert!(compute_bmax(1, &LaguerreParams::simple(), &rat(1, 10)).is_err());
        assert!(compute_bmax(3, &LaguerreParams::simple(), &int(0)).is_err());
    }

    #[test]
    fn bmax_four_below_derivative_bound() {
        let r = compute_bmax(4, &LaguerreParams::simple(), &rat(1, 1000)).unwrap();
        assert!(r.lo.is_positive());
        assert!(r.hi <= int(2) + rat(1, 1000));
        assert!(r.validated());
    }

    #[test]
    fn monotone_linear() {
        let out = verify_monotonicity_consequence(
            &SequenceSpec::Linear { a: int(1) },
            &LaguerreParams::simple(),
            10,
        )
        .unwrap();
        assert_eq!(out, MonotonicityOutcome::Nondecreasing);
    }

    #[test]
    fn decreasing_geometric_gets_pair_witness() {
        let spec = SequenceSpec::Geometric { r: rat(1, 2) };
        let out = verify_monotonicity_consequence(&spec, &LaguerreParams::simple(), 6).unwrap();
        let MonotonicityOutcome::LaguerrePairWitness(w) = out else {
            panic!("expected witness, got {out:?}");
        };
        assert_eq!(w.family, WitnessFamily::LaguerrePair);
        assert_eq!(w.family_params["n"], "2");
        assert!(w.revalidate(&spec, &LaguerreParams::simple()));
    }

    #[test]
    fn dip_without_two_step_drop_breaks_turan() {
        let spec = SequenceSpec::Explicit {
            values: [1, 2, 3, 2, 5, 6, 7, 8, 9, 10, 11].iter().map(|&v| int(v)).collect(),
            tail: Tail::Unspecified,
        };
        let out = verify_monotonicity_consequence(&spec, &LaguerreParams::simple(), 10).unwrap();
        assert_eq!(out, MonotonicityOutcome::TuranFailure { index: 3 });
        assert!(out.holds());
    }

    #[test]
    fn monotonicity_needs_positive_terms() {
        let spec = SequenceSpec::FallingFactorial { n: 2 };
        assert!(verify_monotonicity_consequence(&spec, &LaguerreParams::simple(), 5).is_err());
    }
}
