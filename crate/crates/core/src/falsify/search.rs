use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{int, is_real_rooted, rat, Polynomial, Rational, RootednessVerdict};
use crate::laguerre::LaguerreParams;
use crate::sequences::{LaguerreMultiplier, SequenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessFamily {
    /// `(x + b)^2`
    Square,
    /// `(x + n)^n`
    Power,
    /// `(1 + x)^n`
    Jensen,
    /// `prod (x - r_i)` with seeded random half-integer roots
    RandomProduct,
    /// `L_n + b L_{n-2}`
    LaguerrePair,
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessFamily::Square => "square",
            WitnessFamily::Power => "power",
            WitnessFamily::Jensen => "jensen",
            WitnessFamily::RandomProduct => "random_product",
            WitnessFamily::LaguerrePair => "laguerre_pair",
        })
    }
}

/// A real-rooted input whose image under `T_L` has non-real zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub family: WitnessFamily,
    pub family_params: BTreeMap<String, String>,
    pub input: Polynomial,
    pub input_verdict: RootednessVerdict,
    pub image: Polynomial,
    pub image_verdict: RootednessVerdict,
}

/// JSON form of a [`Witness`].
#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord<'a> {
    pub family: WitnessFamily,
    pub family_params: &'a BTreeMap<String, String>,
    pub input_coeffs: &'a Polynomial,
    pub image_coeffs: &'a Polynomial,
    pub image_real_count: usize,
    pub degree: usize,
}

impl Witness {
    /// Builds a witness if `input` is real-rooted and `image` is not.
    pub fn certify(
        family: WitnessFamily,
        family_params: BTreeMap<String, String>,
        input: Polynomial,
        image: Polynomial,
    ) -> Option<Witness> {
        let image_verdict = is_real_rooted(&image);
        if image_verdict.all_real {
            return None;
        }
        let input_verdict = is_real_rooted(&input);
        if !input_verdict.all_real {
            return None;
        }
        Some(Witness {
            family,
            family_params,
            input,
            input_verdict,
            image,
            image_verdict,
        })
    }

    pub fn degree(&self) -> usize {
        self.input.degree().unwrap_or(0)
    }

    /// Recomputes the image and both verdicts from scratch.
    pub fn revalidate(&self, spec: &SequenceSpec, params: &LaguerreParams) -> bool {
        let Ok(image) = crate::sequences::apply_diagonal(spec, params, &self.input) else {
            return false;
        };
        image == self.image
            && is_real_rooted(&self.input).all_real
            && !is_real_rooted(&image).all_real
    }

    pub fn record(&self) -> WitnessRecord<'_> {
        WitnessRecord {
            family: self.family,
            family_params: &self.family_params,
            input_coeffs: &self.input,
            image_coeffs: &self.image,
            image_real_count: self.image_verdict.real_count_with_multiplicity,
            degree: self.degree(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("witness serializes")
    }
}

/// Search plan. Deterministic for a fixed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_degree: usize,
    /// Shifts for the square family, tried in order.
    pub b_values: Vec<Rational>,
    /// Exponents for the power family; those above `max_degree` are skipped.
    pub n_values: Vec<usize>,
    pub random_seed: u64,
    /// Random products drawn per degree `2..=max_degree`.
    pub random_trials: usize,
}

/// Largest `|j|` for random roots `j / 2`.
const RANDOM_ROOT_RANGE: i64 = 12;

impl SearchConfig {
    pub fn with_max_degree(max_degree: usize) -> Self {
        SearchConfig {
            max_degree,
            ..Self::default()
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.random_seed = seed;
        self
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        // 0, 1, -1, 2, -2, ..., 12, -12
        let b_values = std::iter::once(int(0))
            .chain((1..=12).flat_map(|b| [int(b), int(-b)]))
            .collect();
        SearchConfig {
            max_degree: 12,
            b_values,
            n_values: (2..=12).collect(),
            random_seed: 0,
            random_trials: 16,
        }
    }
}

struct Candidate {
    family: WitnessFamily,
    params: BTreeMap<String, String>,
    input: Polynomial,
}

fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Roots for random trial `trial` at `degree`. The stream depends only on
/// `(seed, degree, trial)`, so raising `max_degree` never changes the draws
/// for lower degrees.
fn random_roots(seed: u64, degree: usize, trial: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((degree as u64) << 32) | trial as u64);
    let mut roots: Vec<Rational> = (0..degree)
        .map(|_| rat(rng.gen_range(-RANDOM_ROOT_RANGE..=RANDOM_ROOT_RANGE), 2))
        .collect();
    roots.sort();
    roots
}

fn candidates(config: &SearchConfig) -> Vec<Candidate> {
    let mut out = Vec::new();
    if config.max_degree >= 2 {
        for b in &config.b_values {
            out.push(Candidate {
                family: WitnessFamily::Square,
                params: params_of(&[("b", b.to_string())]),
                input: Polynomial::new(vec![b.clone(), int(1)]).pow(2),
            });
        }
    }
    for &n in config.n_values.iter().filter(|&&n| n <= config.max_degree) {
        out.push(Candidate {
            family: WitnessFamily::Power,
            params: params_of(&[("n", n.to_string())]),
            input: Polynomial::new(vec![int(n as i64), int(1)]).pow(n),
        });
    }
    for n in 1..=config.max_degree {
        out.push(Candidate {
            family: WitnessFamily::Jensen,
            params: params_of(&[("n", n.to_string())]),
            input: Polynomial::from_ints(&[1, 1]).pow(n),
        });
    }
    for degree in 2..=config.max_degree {
        for trial in 0..config.random_trials {
            let roots = random_roots(config.random_seed, degree, trial);
            let listed: Vec<String> = roots.iter().map(ToString::to_string).collect();
            out.push(Candidate {
                family: WitnessFamily::RandomProduct,
                params: params_of(&[
                    ("seed", config.random_seed.to_string()),
                    ("degree", degree.to_string()),
                    ("trial", trial.to_string()),
                    ("roots", listed.join(" ")),
                ]),
                input: Polynomial::from_roots(&roots),
            });
        }
    }
    out
}

/// Runs the families in order square, power, jensen, random_product and
/// returns the first witness in that order.
pub fn search(
    spec: &SequenceSpec,
    params: &LaguerreParams,
    config: &SearchConfig,
) -> Result<Option<Witness>> {
    if config.max_degree == 0 {
        return Err(Error::InvalidArgument("max_degree must be positive".into()));
    }
    let multiplier = LaguerreMultiplier::new(spec, params, config.max_degree)?;
    let found = candidates(config).into_par_iter().find_map_first(|c| {
        let image = multiplier.apply(&c.input).ok()?;
        Witness::certify(c.family, c.params, c.input, image)
    });
    Ok(found)
}
