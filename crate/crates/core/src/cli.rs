//! Command-line front end. Exit codes: 0 success, 1 mathematical negative
//! (a witness, a NOT_MS verdict, a failed identity), 2 usage or internal error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::conjecture::{self, ConjectureSide, RegionStatus, ScanGrid};
use crate::diffop::{delta, falling_factorial_operator, DiffOperator};
use crate::error::{Error, Result};
use crate::exactmath::{is_real_rooted, parse_rational, Polynomial, Rational};
use crate::falsify::{self, SearchConfig, StabilityGrid};
use crate::identities;
use crate::laguerre::{laguerre_poly, to_laguerre_basis, LaguerreParams};
use crate::sequences::{apply_diagonal, classify_known, necessary_battery, SequenceSpec, Verdict};

pub const THREADS_ENV: &str = "LAGMS_THREADS";

#[derive(Debug, Parser)]
#[command(name = "lagms", version, about = "Exact tools for Laguerre multiplier sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct AlphaArg {
    /// Laguerre parameter, a rational > -1
    #[arg(long, default_value = "0", value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub alpha: Rational,
}

impl AlphaArg {
    fn params(&self) -> Result<LaguerreParams> {
        LaguerreParams::new(self.alpha.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorKind {
    /// shift + (x - alpha - 1) D - x D^2
    Delta,
    /// delta (delta - 1) ... (delta - n + 1)
    FallingFactorial,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print L_n^(alpha)
    Laguerre {
        n: usize,
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients of a polynomial in the Laguerre basis
    Expand {
        /// Coefficients lowest degree first, e.g. "100,-20,1" or '["100","-20","1"]'
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long)]
        json: bool,
    },
    /// Apply a sequence diagonally in the Laguerre basis
    Apply {
        /// Sequence as JSON, e.g. '{"type":"linear","a":"1"}'
        spec: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long)]
        json: bool,
    },
    /// Symbol or exponential symbol of an operator, optionally sampled for stability
    Symbol {
        #[arg(value_enum)]
        op: OperatorKind,
        /// Order of the falling factorial operator
        #[arg(short, long, default_value_t = 1)]
        n: usize,
        /// Constant term of delta
        #[arg(long, default_value = "0", value_parser = parse_rational_arg, allow_hyphen_values = true)]
        shift: Rational,
        #[command(flatten)]
        alpha: AlphaArg,
        /// Exponential symbol G(x, w) instead of the D -> z symbol
        #[arg(long)]
        exp: bool,
        /// Sample G(x, w) for zeros with Im x, Im w > 0 (implies --exp)
        #[arg(long)]
        sample: bool,
    },
    /// Known verdict plus the necessary-condition battery
    Check {
        spec: String,
        #[command(flatten)]
        alpha: AlphaArg,
        /// Prefix length for the battery
        #[arg(short = 'N', long = "prefix", default_value_t = 10)]
        prefix: usize,
        #[arg(long)]
        json: bool,
    },
    /// Look for a real-rooted polynomial whose image is not real-rooted
    Search {
        spec: String,
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enclose the top of E_n = {b : L_n + b L_(n-2) is real-rooted}
    Bmax {
        n: usize,
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long, default_value = "1/1000", value_parser = parse_rational_arg)]
        tol: Rational,
    },
    /// Classify {k^2 + a k + b} over a grid and write CSV
    Scan(Box<ScanArgs>),
    /// Run the exact identity checklist
    #[command(alias = "verify-paper")]
    VerifyIdentities {
        #[arg(long)]
        json: bool,
        /// Break the named identity on purpose (harness self-test)
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value = "-2", value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub a_min: Rational,
    #[arg(long, default_value = "5", value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub a_max: Rational,
    #[arg(long, default_value = "-1", value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub b_min: Rational,
    #[arg(long, default_value = "5", value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub b_max: Rational,
    #[arg(long, default_value = "1/4", value_parser = parse_rational_arg)]
    pub step: Rational,
    /// Degree budget for the witness search
    #[arg(long, default_value_t = 10)]
    pub degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o', long)]
    pub output: PathBuf,
    /// Also write the conjectured region boundary as an (a, b) polyline
    #[arg(long)]
    pub boundary: Option<PathBuf>,
}

fn parse_rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Result of a subcommand: text for stdout and an exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }

    fn negative(text: String) -> Self {
        Outcome { text, code: 1 }
    }
}

fn parse_poly(s: &str) -> Result<Polynomial> {
    s.parse()
}

fn rootedness_line(p: &Polynomial) -> String {
    let v = is_real_rooted(p);
    format!(
        "real-rooted: {} ({} of {} zeros real)",
        v.all_real, v.real_count_with_multiplicity, v.degree
    )
}

fn operator(kind: OperatorKind, n: usize, shift: &Rational, params: &LaguerreParams) -> Result<DiffOperator> {
    match kind {
        OperatorKind::Delta => Ok(delta(params, shift)),
        OperatorKind::FallingFactorial => falling_factorial_operator(n, params),
    }
}

fn cmd_check(spec: &SequenceSpec, params: &LaguerreParams, n: usize, json: bool) -> Result<Outcome> {
    let known = classify_known(spec, params);
    let battery = necessary_battery(spec, n)?;
    let negative = known.verdict == Verdict::NotMs || !battery.all_passed();
    let text = if json {
        let v = serde_json::json!({
            "sequence": spec,
            "alpha": params.alpha().to_string(),
            "N": n,
            "classification": known,
            "necessary": battery,
        });
        serde_json::to_string_pretty(&v).expect("json") + "\n"
    } else {
        let mut t = String::new();
        writeln!(t, "sequence: {spec}").unwrap();
        writeln!(t, "alpha: {}", params.alpha()).unwrap();
        match known.citation {
            Some(c) => writeln!(t, "known: {} ({c})", known.verdict).unwrap(),
            None => writeln!(t, "known: {}", known.verdict).unwrap(),
        }
        let rows = [
            ("jensen-polynomials", &battery.polya_schur),
            ("turan-inequality", &battery.turan),
            ("sign-pattern", &battery.sign_pattern),
            ("zero-pattern", &battery.zero_pattern),
        ];
        for (name, outcome) in rows {
            match &outcome.failure {
                None => writeln!(t, "{name}: PASS through {}", outcome.checked_through).unwrap(),
                Some(f) => writeln!(t, "{name}: FAIL at {}: {}", f.index, f.detail).unwrap(),
            }
        }
        let verdict = if negative { "NOT_MS" } else if known.verdict == Verdict::IsMs { "IS_MS" } else { "NO_EVIDENCE_AGAINST" };
        writeln!(t, "verdict: {verdict}").unwrap();
        t
    };
    Ok(if negative { Outcome::negative(text) } else { Outcome::ok(text) })
}

fn cmd_scan(args: &ScanArgs) -> Result<Outcome> {
    let grid = ScanGrid {
        a_min: args.a_min.clone(),
        a_max: args.a_max.clone(),
        b_min: args.b_min.clone(),
        b_max: args.b_max.clone(),
        step: args.step.clone(),
        degree: args.degree,
        seed: args.seed,
        params: LaguerreParams::simple(),
    };
    let results = conjecture::scan(&grid)?;
    conjecture::emit_csv(&results, &args.output)?;
    if let Some(path) = &args.boundary {
        let pts = conjecture::boundary_polyline(&args.step)?;
        conjecture::write_polyline_csv(&pts, std::io::BufWriter::new(std::fs::File::create(path)?))?;
    }
    let count = |label: &str| results.iter().filter(|r| r.status.label() == label).count();
    let mut t = String::new();
    writeln!(t, "points: {}", results.len()).unwrap();
    for label in ["OUTSIDE_NECESSARY", "THEOREM_IS_MS", "FALSIFIED", "SURVIVING"] {
        writeln!(t, "{label}: {}", count(label)).unwrap();
    }
    let inside_falsified: Vec<_> = results
        .iter()
        .filter(|r| r.conjecture_side == ConjectureSide::Inside && matches!(r.status, RegionStatus::Falsified(_)))
        .collect();
    for r in &inside_falsified {
        writeln!(t, "falsified inside the conjectured region: a={}, b={}", r.a, r.b).unwrap();
    }
    writeln!(t, "wrote {}", args.output.display()).unwrap();
    Ok(Outcome::ok(t))
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Laguerre { n, alpha, json } => {
            let p = laguerre_poly(*n, &alpha.params()?);
            Ok(Outcome::ok(if *json {
                serde_json::to_string(&p).expect("json") + "\n"
            } else {
                format!("{p}\n")
            }))
        }
        Command::Expand { poly, alpha, json } => {
            let c = to_laguerre_basis(&parse_poly(poly)?, &alpha.params()?);
            Ok(Outcome::ok(if *json {
                serde_json::to_string(&c).expect("json") + "\n"
            } else {
                let terms: Vec<String> = c.coefficients().iter().map(ToString::to_string).collect();
                format!("{}\n", terms.join(","))
            }))
        }
        Command::Apply { spec, poly, alpha, json } => {
            let spec = SequenceSpec::from_json(spec)?;
            let params = alpha.params()?;
            let input = parse_poly(poly)?;
            let image = apply_diagonal(&spec, &params, &input)?;
            Ok(Outcome::ok(if *json {
                let v = serde_json::json!({
                    "image": image,
                    "image_verdict": is_real_rooted(&image),
                });
                serde_json::to_string(&v).expect("json") + "\n"
            } else {
                format!("{image}\n{}\n", rootedness_line(&image))
            }))
        }
        Command::Symbol { op, n, shift, alpha, exp, sample } => {
            let params = alpha.params()?;
            let d = operator(*op, *n, shift, &params)?;
            let mut t = format!("operator: {d}\n");
            if *exp || *sample {
                let g = d.exp_symbol();
                t.push_str(&g.to_table("w"));
                t.push('\n');
                if *sample {
                    let rep = falsify::bb_stability_sample(&g, &StabilityGrid::default())?;
                    writeln!(t, "sampled w: {}", rep.sampled_w).unwrap();
                    writeln!(t, "min |G| on grid: {:.6e}", rep.min_modulus_seen).unwrap();
                    if let Some(v) = rep.violation {
                        writeln!(
                            t,
                            "zero at w = {:.6} + {:.6}i, x = {:.6} + {:.6}i (residual {:.2e})",
                            v.w.re, v.w.im, v.x.re, v.x.im, v.residual
                        )
                        .unwrap();
                    }
                    writeln!(t, "verdict: {}", rep.verdict).unwrap();
                    if rep.violation.is_some() {
                        return Ok(Outcome::negative(t));
                    }
                }
            } else {
                t.push_str(&d.symbol().to_table("z"));
                t.push('\n');
            }
            Ok(Outcome::ok(t))
        }
        Command::Check { spec, alpha, prefix, json } => {
            cmd_check(&SequenceSpec::from_json(spec)?, &alpha.params()?, *prefix, *json)
        }
        Command::Search { spec, alpha, max_degree, seed } => {
            let spec = SequenceSpec::from_json(spec)?;
            let config = SearchConfig::with_max_degree(*max_degree).seed(*seed);
            match falsify::search(&spec, &alpha.params()?, &config)? {
                Some(w) => Ok(Outcome::ok(w.to_json() + "\n")),
                None => Ok(Outcome {
                    text: format!("no witness up to degree {max_degree}\n"),
                    code: 1,
                }),
            }
        }
        Command::Bmax { n, alpha, tol } => {
            let r = falsify::compute_bmax(*n, &alpha.params()?, tol)?;
            let mut t = format!("n: {}\nlo: {}\nhi: {}\n", r.n, r.lo, r.hi);
            writeln!(t, "scan: {} points from hi to {}", r.scan_points, r.hi_start).unwrap();
            match &r.stray_member {
                None => {
                    t.push_str("validated: no member above hi\n");
                    Ok(Outcome::ok(t))
                }
                Some(b) => {
                    writeln!(t, "validated: false, b = {b} is a member above hi").unwrap();
                    Ok(Outcome::negative(t))
                }
            }
        }
        Command::Scan(args) => cmd_scan(args),
        Command::VerifyIdentities { json, inject_fault } => {
            if let Some(id) = inject_fault {
                if !identities::is_identity_id(id) {
                    return Err(Error::InvalidArgument(format!("unknown identity '{id}'")));
                }
            }
            let report = identities::verify_identities(inject_fault.as_deref())?;
            let text = if *json {
                report.to_json() + "\n"
            } else {
                let mut t = String::new();
                for item in &report.items {
                    let mark = if item.passed { "PASS" } else { "FAIL" };
                    writeln!(t, "{mark} {}: {}", item.id, item.statement).unwrap();
                    if let Some(d) = &item.detail {
                        writeln!(t, "     first failure: {d}").unwrap();
                    }
                }
                t
            };
            Ok(if report.all_passed { Outcome::ok(text) } else { Outcome::negative(text) })
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("{THREADS_ENV} must be a non-negative integer, got '{raw}'")))?;
    if n > 0 {
        // Fails only if a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Parses `std::env::args`, runs the command and returns the exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| execute(&cli.command));
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
