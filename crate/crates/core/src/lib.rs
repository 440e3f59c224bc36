//! Exact tools for multiplier sequences in the generalized Laguerre basis.
//!
//! A sequence `{gamma_k}` acts on polynomials through `T_L[L_k] = gamma_k L_k`,
//! where `L_k` is the generalized Laguerre polynomial with parameter
//! `alpha > -1`. The question is whether `T_L` maps polynomials with only real
//! zeros to polynomials with only real zeros. Everything here runs in exact
//! rational arithmetic except the stability sampler in `falsify`, which is
//! floating point and can only falsify.

pub mod cli;
pub mod conjecture;
pub mod diffop;
pub mod error;
pub mod exactmath;
pub mod falsify;
pub mod identities;
pub mod laguerre;
pub mod sequences;

pub use error::{Error, Result};
