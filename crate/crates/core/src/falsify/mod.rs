//! Counterexample search and stability sampling.
//!
//! Everything here except [`stability`] is exact. A returned [`Witness`] is a
//! certificate: a polynomial with only real zeros whose image has non-real
//! zeros, both facts decided by the Sturm oracle. The search families are not
//! exhaustive, so finding no witness proves nothing.

mod bmax;
mod search;
pub mod stability;

pub use bmax::{
    compute_bmax, laguerre_pair_witness, verify_monotonicity_consequence, BmaxResult,
    MonotonicityOutcome,
};
pub use search::{search, SearchConfig, Witness, WitnessFamily, WitnessRecord};
pub use stability::{bb_stability_sample, StabilityGrid, StabilityReport, StabilityVerdict, Violation};

use crate::error::{Error, Result};
use crate::exactmath::{int, Rational};
use crate::laguerre::LaguerreParams;

/// Discriminant of the image of `(x + b)^2` under `{r^k}`:
/// `-4 r^2 (r - 1) ((2 + alpha)(1 - r) + 2b)`.
pub fn discriminant_geometric(r: &Rational, params: &LaguerreParams, b: &Rational) -> Rational {
    let alpha = params.alpha();
    int(-4) * r * r * (r - int(1)) * ((int(2) + alpha) * (int(1) - r) + int(2) * b)
}

/// Discriminant of the quadratic factor of `T[(x + n)^n]` for
/// `T = a + (x - alpha - 1) D - x D^2`: `n^2 [alpha^2 + 4a - 4n(a - (alpha + 1))]`.
pub fn discriminant_linear_power(a: &Rational, params: &LaguerreParams, n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::IndexOutOfRange {
            index: n,
            reason: "power family discriminant needs n >= 2",
        });
    }
    let alpha = params.alpha();
    let nn = int(n as i64);
    Ok(&nn * &nn * (alpha * alpha + int(4) * a - int(4) * &nn * (a - (alpha + int(1)))))
}
