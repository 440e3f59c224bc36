//! Finite-order linear differential operators `sum_k q_k(x) D^k` with
//! polynomial coefficients, kept in normal form (every `D` to the right).

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{factorial, int, Polynomial, Rational};
use crate::laguerre::{laguerre_poly, LaguerreParams};

/// `sum_k terms[k](x) D^k`. Trailing zero coefficients are stripped, so the
/// representation is unique.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiffOperator {
    terms: Vec<Polynomial>,
}

impl DiffOperator {
    pub fn new(mut terms: Vec<Polynomial>) -> Self {
        while terms.last().is_some_and(Polynomial::is_zero) {
            terms.pop();
        }
        DiffOperator { terms }
    }

    pub fn zero() -> Self {
        DiffOperator { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::multiplication(Polynomial::one())
    }

    /// Multiplication by `q(x)`.
    pub fn multiplication(q: Polynomial) -> Self {
        Self::new(vec![q])
    }

    pub fn scalar(c: Rational) -> Self {
        Self::multiplication(Polynomial::constant(c))
    }

    /// `D^k`.
    pub fn d_power(k: usize) -> Self {
        let mut terms = vec![Polynomial::zero(); k + 1];
        terms[k] = Polynomial::one();
        Self::new(terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    /// Coefficient of `D^k`.
    pub fn coeff(&self, k: usize) -> Polynomial {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    /// Nonzero `(order, coefficient)` pairs, ascending in order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.terms.iter().enumerate().filter(|(_, q)| !q.is_zero())
    }

    /// Lowest order with a nonzero coefficient.
    pub fn lowest_order(&self) -> Option<usize> {
        self.terms().next().map(|(k, _)| k)
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        let mut deriv = p.clone();
        for q in &self.terms {
            if deriv.is_zero() {
                break;
            }
            if !q.is_zero() {
                out = &out + &(q * &deriv);
            }
            deriv = deriv.derivative();
        }
        out
    }

    pub fn add(&self, other: &DiffOperator) -> DiffOperator {
        let n = self.terms.len().max(other.terms.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &DiffOperator) -> DiffOperator {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> DiffOperator {
        Self::new(self.terms.iter().map(|q| q.scale(c)).collect())
    }

    /// `self ∘ other`, normalized with `D^k q = sum_j binom(k, j) q^(j) D^(k-j)`.
    pub fn compose(&self, other: &DiffOperator) -> DiffOperator {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Polynomial::zero(); self.terms.len() + other.terms.len() - 1];
        for (k, a) in self.terms() {
            for (m, b) in other.terms() {
                // a D^k b D^m
                let mut deriv = b.clone();
                for j in 0..=k {
                    if deriv.is_zero() {
                        break;
                    }
                    let c = binom(k, j);
                    out[k - j + m] = &out[k - j + m] + &(a * &deriv).scale(&c);
                    deriv = deriv.derivative();
                }
            }
        }
        Self::new(out)
    }

    /// Replaces `D^k` by `z^k`.
    pub fn symbol(&self) -> BivariateSymbol {
        BivariateSymbol::from_columns(self.terms.iter().map(|q| q.coeffs().to_vec()).collect())
    }

    /// `G(x, w)` with `T[exp(-x w)] = G(x, w) exp(-x w)`, i.e. `sum_k q_k(x) (-w)^k`.
    pub fn exp_symbol(&self) -> BivariateSymbol {
        BivariateSymbol::from_columns(
            self.terms
                .iter()
                .enumerate()
                .map(|(k, q)| {
                    let s = if k % 2 == 1 { int(-1) } else { int(1) };
                    q.scale(&s).coeffs().to_vec()
                })
                .collect(),
        )
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(k, q)| match k {
                0 => format!("({q})"),
                1 => format!("({q}) D"),
                _ => format!("({q}) D^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn binom(n: usize, k: usize) -> Rational {
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn apply(op: &DiffOperator, p: &Polynomial) -> Polynomial {
    op.apply(p)
}

pub fn compose(a: &DiffOperator, b: &DiffOperator) -> DiffOperator {
    a.compose(b)
}

/// `[A, B] = AB - BA`.
pub fn commutator(a: &DiffOperator, b: &DiffOperator) -> DiffOperator {
    a.compose(b).sub(&b.compose(a))
}

/// `shift + (x - (alpha + 1)) D - x D^2`. With `shift = 0` this is the
/// operator that has every `L_n^(alpha)` as eigenvector with eigenvalue `n`.
pub fn delta(params: &LaguerreParams, shift: &Rational) -> DiffOperator {
    DiffOperator::new(vec![
        Polynomial::constant(shift.clone()),
        Polynomial::new(vec![-(params.alpha() + int(1)), int(1)]),
        Polynomial::from_ints(&[0, -1]),
    ])
}

/// `delta (delta - 1) ... (delta - (n - 1))` by iterated composition.
pub fn falling_factorial_operator(n: usize, params: &LaguerreParams) -> Result<DiffOperator> {
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            reason: "falling factorial operator needs n >= 1",
        });
    }
    let mut op = delta(params, &int(0));
    for j in 1..n {
        op = op.compose(&delta(params, &int(-(j as i64))));
    }
    Ok(op)
}

/// Dense bivariate polynomial `sum c[i][j] x^i y^j`, where `y` stands for the
/// symbol variable (`z` for `D`, or `w` in the exponential symbol).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariateSymbol {
    /// `rows[i][j]`: coefficient of `x^i y^j`.
    rows: Vec<Vec<Rational>>,
}

impl BivariateSymbol {
    pub fn new(mut rows: Vec<Vec<Rational>>) -> Self {
        for row in rows.iter_mut() {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        BivariateSymbol { rows }
    }

    /// `columns[j]` holds the x-coefficients of `y^j`.
    fn from_columns(columns: Vec<Vec<Rational>>) -> Self {
        let nrows = columns.iter().map(Vec::len).max().unwrap_or(0);
        let ncols = columns.len();
        let mut rows = vec![vec![Rational::zero(); ncols]; nrows];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, c) in col.into_iter().enumerate() {
                rows[i][j] = c;
            }
        }
        Self::new(rows)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Degree in `x` (`None` when zero).
    pub fn x_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Degree in the symbol variable.
    pub fn y_degree(&self) -> Option<usize> {
        self.rows.iter().map(Vec::len).max().and_then(|n| n.checked_sub(1))
    }

    /// `p(x) * y^k`.
    pub fn from_x_poly(p: &Polynomial, k: usize) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| {
                    let mut row = vec![Rational::zero(); k + 1];
                    row[k] = c.clone();
                    row
                })
                .collect(),
        )
    }

    /// `p(y)` as a polynomial in the symbol variable alone.
    pub fn from_y_poly(p: &Polynomial) -> Self {
        Self::new(vec![p.coeffs().to_vec()])
    }

    pub fn add(&self, other: &Self) -> Self {
        let nr = self.rows.len().max(other.rows.len());
        let rows = (0..nr)
            .map(|i| {
                let nc = self.rows.get(i).map_or(0, Vec::len).max(other.rows.get(i).map_or(0, Vec::len));
                (0..nc).map(|j| self.coeff(i, j) + other.coeff(i, j)).collect()
            })
            .collect();
        Self::new(rows)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let nr = self.rows.len() + other.rows.len() - 1;
        let nc = self.y_degree().unwrap() + other.y_degree().unwrap() + 1;
        let mut rows = vec![vec![Rational::zero(); nc]; nr];
        for (i1, r1) in self.rows.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (i2, r2) in other.rows.iter().enumerate() {
                    for (j2, b) in r2.iter().enumerate() {
                        rows[i1 + i2][j1 + j2] += a * b;
                    }
                }
            }
        }
        Self::new(rows)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::new(vec![vec![int(1)]]), |acc, _| acc.mul(self))
    }

    /// `p(s(x, y))` for a univariate `p`.
    pub fn substitute_into(p: &Polynomial, s: &Self) -> Self {
        p.coeffs().iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(s).add(&Self::new(vec![vec![c.clone()]]))
        })
    }

    /// Sets the symbol variable to `y`, leaving a polynomial in `x`.
    pub fn eval_y(&self, y: &Rational) -> Polynomial {
        Polynomial::new(
            self.rows
                .iter()
                .map(|r| r.iter().rev().fold(Rational::zero(), |acc, c| acc * y + c))
                .collect(),
        )
    }

    /// `y -> -y`.
    pub fn negate_y(&self) -> Self {
        Self::new(
            self.rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                        .collect()
                })
                .collect(),
        )
    }

    /// Coefficients `a_i(y)` of `x^i`, each as a polynomial in `y`.
    pub fn x_coefficients(&self) -> Vec<Polynomial> {
        self.rows.iter().map(|r| Polynomial::new(r.clone())).collect()
    }

    /// Plain-text table: rows are x-degrees, columns are y-degrees.
    pub fn to_table(&self, y_name: &str) -> String {
        let ncols = self.y_degree().map_or(1, |d| d + 1);
        let nrows = self.rows.len().max(1);
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(nrows + 1);
        let mut header = vec![String::new()];
        header.extend((0..ncols).map(|j| format!("{y_name}^{j}")));
        cells.push(header);
        for i in 0..nrows {
            let mut row = vec![format!("x^{i}")];
            row.extend((0..ncols).map(|j| self.coeff(i, j).to_string()));
            cells.push(row);
        }
        let widths: Vec<usize> = (0..=ncols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        cells
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn symbol(op: &DiffOperator) -> BivariateSymbol {
    op.symbol()
}

pub fn exp_symbol(op: &DiffOperator) -> BivariateSymbol {
    op.exp_symbol()
}

/// `L_n^(alpha)(x + c x y)` as a bivariate polynomial.
fn laguerre_at_scaled_x(n: usize, params: &LaguerreParams, c: &Rational) -> BivariateSymbol {
    // x (1 + c y)
    let arg = BivariateSymbol::new(vec![vec![], vec![int(1), c.clone()]]);
    BivariateSymbol::substitute_into(&laguerre_poly(n, params), &arg)
}

/// `n! (-1)^n z^n L_n^(alpha)(x - x z)`.
pub fn falling_factorial_symbol_closed_form(n: usize, params: &LaguerreParams) -> BivariateSymbol {
    let sign = if n % 2 == 1 { int(-1) } else { int(1) };
    let zn = BivariateSymbol::from_y_poly(&Polynomial::monomial(int(1), n));
    laguerre_at_scaled_x(n, params, &int(-1))
        .mul(&zn)
        .scale(&(factorial(n) * sign))
}

/// `n! (-1)^n (-w)^n L_n^(alpha)(x + x w)`.
pub fn falling_factorial_exp_symbol_closed_form(
    n: usize,
    params: &LaguerreParams,
) -> BivariateSymbol {
    // (-1)^n (-w)^n = w^n
    let wn = BivariateSymbol::from_y_poly(&Polynomial::monomial(int(1), n));
    laguerre_at_scaled_x(n, params, &int(1))
        .mul(&wn)
        .scale(&factorial(n))
}

/// Compares the symbol of the composed falling factorial operator against its
/// closed form in terms of `L_n^(alpha)(x - x z)`.
pub fn verify_biglemma(n: usize, params: &LaguerreParams) -> Result<bool> {
    let op = falling_factorial_operator(n, params)?;
    Ok(op.symbol() == falling_factorial_symbol_closed_form(n, params))
}

/// `sum_k q_k(x)` for the falling factorial operator. The sum is a constant,
/// `(-1)^n prod_{k=1..n} (alpha + k)`; anything else is an internal error.
pub fn symbol_sum_at_one(n: usize, params: &LaguerreParams) -> Result<Rational> {
    let op = falling_factorial_operator(n, params)?;
    let total = op.symbol().eval_y(&int(1));
    if !total.is_constant() {
        return Err(Error::NonConstantSymbolSum(total.to_string()));
    }
    Ok(total.coeff(0))
}
