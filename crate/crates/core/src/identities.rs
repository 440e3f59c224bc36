//! Exact identity checklist behind `lagms verify-identities`.
//!
//! Each item can be run with an injected fault: a unit offset added to one
//! side of the identity, which must make the item fail. This keeps the
//! checklist honest about actually comparing something.

use num_traits::Zero;
use serde::Serialize;

use crate::diffop::{
    commutator, delta, falling_factorial_exp_symbol_closed_form, falling_factorial_operator,
    falling_factorial_symbol_closed_form, symbol_sum_at_one, BivariateSymbol, DiffOperator,
};
use crate::error::Result;
use crate::exactmath::{int, is_real_rooted, rat, Polynomial, Rational};
use crate::laguerre::{check_ode, check_recurrences, laguerre_poly, to_laguerre_basis, LaguerreParams};
use crate::sequences::{apply_diagonal, SequenceSpec, Tail};

/// Largest Laguerre degree checked.
pub const MAX_N: usize = 12;
/// Largest `k` in the commutator identity.
pub const MAX_COMMUTATOR_K: usize = 6;
/// Largest falling factorial order whose symbols are checked.
pub const MAX_SYMBOL_N: usize = 5;

pub fn alphas() -> Vec<LaguerreParams> {
    [rat(0, 1), rat(1, 2), int(1), int(3), rat(-1, 2)]
        .into_iter()
        .map(|a| LaguerreParams::new(a).expect("alpha > -1"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    pub id: &'static str,
    pub statement: &'static str,
}

pub const IDENTITIES: [Identity; 9] = [
    Identity {
        id: "laguerre-ode",
        statement: "x y'' + (alpha + 1 - x) y' + n y = 0 for y = L_n",
    },
    Identity {
        id: "laguerre-recurrences",
        statement: "three-term and derivative recurrences for L_n",
    },
    Identity {
        id: "delta-eigen",
        statement: "delta L_n = n L_n",
    },
    Identity {
        id: "delta-commutator",
        statement: "[delta, D^k] = -k (1 - D) D^k",
    },
    Identity {
        id: "falling-factorial-diagonal",
        statement: "delta (delta - 1) ... (delta - n + 1) acts as the falling factorial sequence",
    },
    Identity {
        id: "falling-factorial-symbol",
        statement: "symbol = n! (-1)^n z^n L_n(x - x z)",
    },
    Identity {
        id: "falling-factorial-symbol-sum",
        statement: "sum_k q_k(x) = (-1)^n (alpha + 1) ... (alpha + n)",
    },
    Identity {
        id: "falling-factorial-exp-symbol",
        statement: "exponential symbol = n! (-1)^n (-w)^n L_n(x + x w)",
    },
    Identity {
        id: "nonpositive-example",
        statement: "{1, -2, 3} maps (x - 10)^2 = 82 L_0 + 16 L_1 + 2 L_2 to 3x^2 + 20x + 56",
    },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ItemOutcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    /// First failing case, if any.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub items: Vec<ItemOutcome>,
    pub all_passed: bool,
}

impl IdentityReport {
    pub fn first_failure(&self) -> Option<&ItemOutcome> {
        self.items.iter().find(|i| !i.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `None` if every case passes, else a description of the first failure.
type Check = fn(&Rational) -> Result<Option<String>>;

fn ode(bump: &Rational) -> Result<Option<String>> {
    for p in alphas() {
        for n in 0..=MAX_N {
            let y = laguerre_poly(n, &p) + Polynomial::constant(bump.clone());
            let lhs = Polynomial::x() * y.nth_derivative(2)
                + Polynomial::new(vec![p.alpha() + int(1), int(-1)]) * y.derivative()
                + y.scale(&int(n as i64));
            if !lhs.is_zero() || !check_ode(n, &p) {
                return Ok(Some(format!("n={n}, alpha={}", p.alpha())));
            }
        }
    }
    Ok(None)
}

fn recurrences(bump: &Rational) -> Result<Option<String>> {
    for p in alphas() {
        for n in 1..MAX_N {
            let a = p.alpha();
            let lhs = laguerre_poly(n + 1, &p).scale(&int(n as i64 + 1))
                + Polynomial::constant(bump.clone());
            let rhs = Polynomial::new(vec![int(2 * n as i64 + 1) + a, int(-1)]) * laguerre_poly(n, &p)
                - laguerre_poly(n - 1, &p).scale(&(a + int(n as i64)));
            if lhs != rhs || !check_recurrences(n, &p)? {
                return Ok(Some(format!("n={n}, alpha={a}")));
            }
        }
    }
    Ok(None)
}

fn eigen(bump: &Rational) -> Result<Option<String>> {
    for p in alphas() {
        let d = delta(&p, &int(0));
        for n in 0..=MAX_N {
            let l = laguerre_poly(n, &p);
            if d.apply(&l) != l.scale(&(int(n as i64) + bump)) {
                return Ok(Some(format!("n={n}, alpha={}", p.alpha())));
            }
        }
    }
    Ok(None)
}

fn commutators(bump: &Rational) -> Result<Option<String>> {
    for p in alphas() {
        let d = delta(&p, &int(0));
        for k in 0..=MAX_COMMUTATOR_K {
            let dk = DiffOperator::d_power(k);
            let one_minus_d = DiffOperator::identity().sub(&DiffOperator::d_power(1));
            let expected = one_minus_d
                .compose(&dk)
                .scale(&-(int(k as i64) + bump));
            if commutator(&d, &dk) != expected {
                return Ok(Some(format!("k={k}, alpha={}", p.alpha())));
            }
        }
    }
    Ok(None)
}

fn diagonal(bump: &Rational) -> Result<Option<String>> {
    let probes = [
        Polynomial::from_ints(&[1, 1]).pow(6),
        Polynomial::from_ints(&[-10, 1]).pow(2),
        Polynomial::from_roots(&[int(-3), rat(1, 2), int(2), int(7)]),
    ];
    for p in alphas() {
        for n in 1..=MAX_SYMBOL_N {
            let op = falling_factorial_operator(n, &p)?;
            let spec = SequenceSpec::FallingFactorial { n };
            for q in &probes {
                let want = apply_diagonal(&spec, &p, q)? + Polynomial::constant(bump.clone());
                if op.apply(q) != want {
                    return Ok(Some(format!("n={n}, alpha={}, p={q}", p.alpha())));
                }
            }
        }
    }
    Ok(None)
}

fn constant_symbol(c: &Rational) -> BivariateSymbol {
    BivariateSymbol::new(vec![vec![c.clone()]])
}

fn symbols(bump: &Rational) -> Result<Option<String>> {
    for p in alphas() {
        for n in 1..=MAX_SYMBOL_N {
            let got = falling_factorial_operator(n, &p)?.symbol();
            let want = falling_factorial_symbol_closed_form(n, &p).add(&constant_symbol(bump));
            if got != want {
                return Ok(Some(format!("n={n}, alpha={}", p.alpha())));
            }
        }
    }
    Ok(None)
}

fn symbol_sums(bump: &Rational) -> Result<Option<String>> {
    for p in alphas() {
        for n in 1..=MAX_SYMBOL_N {
            let sign = if n % 2 == 1 { int(-1) } else { int(1) };
            let product = (1..=n).fold(int(1), |acc, k| acc * (p.alpha() + int(k as i64)));
            if symbol_sum_at_one(n, &p)? != sign * product + bump {
                return Ok(Some(format!("n={n}, alpha={}", p.alpha())));
            }
        }
    }
    Ok(None)
}

fn exp_symbols(bump: &Rational) -> Result<Option<String>> {
    for p in alphas() {
        for n in 1..=MAX_SYMBOL_N {
            let got = falling_factorial_operator(n, &p)?.exp_symbol();
            let want = falling_factorial_exp_symbol_closed_form(n, &p).add(&constant_symbol(bump));
            if got != want {
                return Ok(Some(format!("n={n}, alpha={}", p.alpha())));
            }
        }
    }
    Ok(None)
}

fn nonpositive_example(bump: &Rational) -> Result<Option<String>> {
    let spec = SequenceSpec::Explicit {
        values: vec![int(1), int(-2), int(3)],
        tail: Tail::Unspecified,
    };
    let params = LaguerreParams::simple();
    let input = Polynomial::from_ints(&[-10, 1]).pow(2);
    let coeffs = to_laguerre_basis(&input, &params);
    if coeffs.coefficients() != [int(82), int(16), int(2) + bump] {
        return Ok(Some(format!("Laguerre coefficients {:?}", coeffs.coefficients())));
    }
    let image = apply_diagonal(&spec, &params, &input)?;
    if image != Polynomial::from_ints(&[56, 20, 3]) {
        return Ok(Some(format!("image {image}")));
    }
    let verdict = is_real_rooted(&image);
    if verdict.all_real || verdict.real_count_with_multiplicity != 0 {
        return Ok(Some(format!("image {image} should have two non-real zeros")));
    }
    Ok(None)
}

const CHECKS: [Check; 9] = [
    ode,
    recurrences,
    eigen,
    commutators,
    diagonal,
    symbols,
    symbol_sums,
    exp_symbols,
    nonpositive_example,
];

/// Runs the checklist. `fault` names an item whose identity gets a unit
/// offset on one side.
pub fn verify_identities(fault: Option<&str>) -> Result<IdentityReport> {
    let mut items = Vec::with_capacity(IDENTITIES.len());
    for (ident, check) in IDENTITIES.iter().zip(CHECKS) {
        let bump = if fault == Some(ident.id) { int(1) } else { Rational::zero() };
        let detail = check(&bump)?;
        items.push(ItemOutcome {
            id: ident.id,
            statement: ident.statement,
            passed: detail.is_none(),
            detail,
        });
    }
    let all_passed = items.iter().all(|i| i.passed);
    Ok(IdentityReport { items, all_passed })
}

pub fn is_identity_id(id: &str) -> bool {
    IDENTITIES.iter().any(|i| i.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_passes() {
        let r = verify_identities(None).unwrap();
        assert!(r.all_passed, "{:?}", r.first_failure());
        assert_eq!(r.items.len(), IDENTITIES.len());
    }

    #[test]
    fn every_fault_is_caught() {
        for ident in IDENTITIES {
            let r = verify_identities(Some(ident.id)).unwrap();
            assert!(!r.all_passed);
            assert_eq!(r.first_failure().unwrap().id, ident.id);
        }
    }
}
