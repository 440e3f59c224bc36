//! Scan of the `(a, b)` plane for `{k^2 + a k + b}`.
//!
//! Each grid point is classified, in order, by the closed-form necessary
//! bounds, by the known theorems, and by the witness search at a fixed degree
//! budget. The conjectured region
//! `-1 <= a <= 3, max(0, a - 1) <= b <= (1 + a)^2 / 8` is only used to label
//! points; it never yields a verdict.

use std::fmt;
use std::io::Write;
use std::path::Path;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{int, rat, Rational};
use crate::falsify::{search, SearchConfig, Witness};
use crate::laguerre::LaguerreParams;
use crate::sequences::{
    classify_known, violated_quadratic_bound, Citation, SequenceSpec, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConjectureSide {
    Inside,
    Boundary,
    Outside,
}

impl fmt::Display for ConjectureSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureSide::Inside => "INSIDE",
            ConjectureSide::Boundary => "BOUNDARY",
            ConjectureSide::Outside => "OUTSIDE",
        })
    }
}

fn upper_curve(a: &Rational) -> Rational {
    let s = a + int(1);
    &s * &s / int(8)
}

fn lower_curve(a: &Rational) -> Rational {
    std::cmp::max(int(0), a - int(1))
}

/// Position of `(a, b)` relative to the conjectured region. Points on the
/// closed region with any defining inequality tight are `Boundary`.
pub fn conjecture_side(a: &Rational, b: &Rational) -> ConjectureSide {
    let (lo, hi) = (lower_curve(a), upper_curve(a));
    let in_a = *a >= int(-1) && *a <= int(3);
    if !in_a || *b < lo || *b > hi {
        return ConjectureSide::Outside;
    }
    if *a == int(-1) || *a == int(3) || *b == lo || *b == hi {
        ConjectureSide::Boundary
    } else {
        ConjectureSide::Inside
    }
}

/// Result of the closed-form bounds alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NecessaryRegion {
    NotMs(Citation),
    UndecidedByBounds,
}

pub fn necessary_region(a: &Rational, b: &Rational) -> NecessaryRegion {
    match violated_quadratic_bound(a, b) {
        Some(bound) => NecessaryRegion::NotMs(Citation::QuadraticBound(bound)),
        None => NecessaryRegion::UndecidedByBounds,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionStatus {
    /// Ruled out without search, by a bound or a sequence-pattern check.
    OutsideNecessary(Citation),
    Falsified(Box<Witness>),
    /// No witness up to this degree.
    Surviving(usize),
    TheoremIsMs(Citation),
}

impl RegionStatus {
    pub fn label(&self) -> &'static str {
        match self {
            RegionStatus::OutsideNecessary(_) => "OUTSIDE_NECESSARY",
            RegionStatus::Falsified(_) => "FALSIFIED",
            RegionStatus::Surviving(_) => "SURVIVING",
            RegionStatus::TheoremIsMs(_) => "THEOREM_IS_MS",
        }
    }

    /// Citation token, witness degree, or empty for surviving points.
    pub fn detail(&self) -> String {
        match self {
            RegionStatus::OutsideNecessary(c) | RegionStatus::TheoremIsMs(c) => c.to_string(),
            RegionStatus::Falsified(w) => w.degree().to_string(),
            RegionStatus::Surviving(_) => String::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionClassification {
    pub a: Rational,
    pub b: Rational,
    pub status: RegionStatus,
    pub conjecture_side: ConjectureSide,
    pub degree_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanGrid {
    pub a_min: Rational,
    pub a_max: Rational,
    pub b_min: Rational,
    pub b_max: Rational,
    pub step: Rational,
    pub degree: usize,
    pub seed: u64,
    /// Bounds and the `b = a - 1` line apply only at `alpha = 0`.
    pub params: LaguerreParams,
}

impl Default for ScanGrid {
    fn default() -> Self {
        ScanGrid {
            a_min: int(-2),
            a_max: int(5),
            b_min: int(-1),
            b_max: int(5),
            step: rat(1, 4),
            degree: 10,
            seed: 0,
            params: LaguerreParams::simple(),
        }
    }
}

fn axis(lo: &Rational, hi: &Rational, step: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut v = lo.clone();
    while v <= *hi {
        out.push(v.clone());
        v += step;
    }
    out
}

impl ScanGrid {
    pub fn validate(&self) -> Result<()> {
        if !self.step.is_positive() {
            return Err(Error::InvalidArgument(format!("step must be positive, got {}", self.step)));
        }
        if self.a_min > self.a_max || self.b_min > self.b_max {
            return Err(Error::InvalidArgument("empty scan range".into()));
        }
        if self.degree < 2 {
            return Err(Error::InvalidArgument("degree budget must be at least 2".into()));
        }
        Ok(())
    }

    /// Grid points ordered by `a`, then `b`.
    pub fn points(&self) -> Vec<(Rational, Rational)> {
        let bs = axis(&self.b_min, &self.b_max, &self.step);
        axis(&self.a_min, &self.a_max, &self.step)
            .into_iter()
            .flat_map(|a| bs.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}

/// Classifies one point with the grid's budget, seed and `alpha`.
pub fn classify_point(a: &Rational, b: &Rational, grid: &ScanGrid) -> Result<RegionClassification> {
    let spec = SequenceSpec::Quadratic {
        a: a.clone(),
        b: b.clone(),
    };
    let at_zero = grid.params.alpha().is_zero();
    let status = 'status: {
        if at_zero {
            if let NecessaryRegion::NotMs(c) = necessary_region(a, b) {
                break 'status RegionStatus::OutsideNecessary(c);
            }
        }
        let known = classify_known(&spec, &grid.params);
        match (known.verdict, known.citation) {
            (Verdict::IsMs, Some(c)) => break 'status RegionStatus::TheoremIsMs(c),
            (Verdict::NotMs, Some(c)) => break 'status RegionStatus::OutsideNecessary(c),
            _ => {}
        }
        let config = SearchConfig::with_max_degree(grid.degree).seed(grid.seed);
        match search(&spec, &grid.params, &config)? {
            Some(w) => RegionStatus::Falsified(Box::new(w)),
            None => RegionStatus::Surviving(grid.degree),
        }
    };
    Ok(RegionClassification {
        a: a.clone(),
        b: b.clone(),
        status,
        conjecture_side: conjecture_side(a, b),
        degree_budget: grid.degree,
    })
}

/// Classifies every grid point, in parallel, keeping grid order.
pub fn scan(grid: &ScanGrid) -> Result<Vec<RegionClassification>> {
    grid.validate()?;
    grid.points()
        .into_par_iter()
        .map(|(a, b)| classify_point(&a, &b, grid))
        .collect()
}

pub const CSV_HEADER: [&str; 6] = [
    "a",
    "b",
    "status",
    "citation_or_witness_degree",
    "conjecture_side",
    "N",
];

pub fn write_csv<W: Write>(results: &[RegionClassification], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in results {
        w.write_record([
            r.a.to_string(),
            r.b.to_string(),
            r.status.label().to_string(),
            r.status.detail(),
            r.conjecture_side.to_string(),
            r.degree_budget.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv(results: &[RegionClassification], path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_csv(results, std::io::BufWriter::new(file))
}

/// Closed polyline around the conjectured region: the lower edge through
/// `(-1, 0), (1, 0), (3, 2)`, then the upper curve sampled back from `a = 3`
/// to `a = -1` with spacing `step`.
pub fn boundary_polyline(step: &Rational) -> Result<Vec<(Rational, Rational)>> {
    if !step.is_positive() {
        return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
    }
    let mut pts = vec![(int(-1), int(0)), (int(1), int(0)), (int(3), int(2))];
    let mut a = int(3) - step;
    while a > int(-1) {
        pts.push((a.clone(), upper_curve(&a)));
        a -= step;
    }
    pts.push((int(-1), int(0)));
    Ok(pts)
}

pub fn write_polyline_csv<W: Write>(points: &[(Rational, Rational)], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["a", "b"])?;
    for (a, b) in points {
        w.write_record([a.to_string(), b.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::QuadraticBound;

    #[test]
    fn necessary_region_examples() {
        let cases = [
            ((-2, 0), QuadraticBound::AAtLeastMinusOne),
            ((1, 2), QuadraticBound::BAtMostQuarterSquare),
            ((5, 4), QuadraticBound::AAtMostFour),
        ];
        for ((a, b), bound) in cases {
            assert_eq!(
                necessary_region(&int(a), &int(b)),
                NecessaryRegion::NotMs(Citation::QuadraticBound(bound))
            );
        }
        assert_eq!(necessary_region(&int(1), &int(0)), NecessaryRegion::UndecidedByBounds);
    }

    #[test]
    fn sides() {
        assert_eq!(conjecture_side(&int(2), &int(1)), ConjectureSide::Boundary);
        assert_eq!(conjecture_side(&int(0), &rat(1, 8)), ConjectureSide::Boundary);
        assert_eq!(conjecture_side(&int(0), &rat(1, 16)), ConjectureSide::Inside);
        assert_eq!(conjecture_side(&int(-1), &int(0)), ConjectureSide::Boundary);
        assert_eq!(conjecture_side(&int(-1), &rat(1, 100)), ConjectureSide::Outside);
        assert_eq!(conjecture_side(&int(4), &int(3)), ConjectureSide::Outside);
    }

    #[test]
    fn line_point_is_theorem() {
        let r = classify_point(&int(2), &int(1), &ScanGrid::default()).unwrap();
        assert_eq!(r.status, RegionStatus::TheoremIsMs(Citation::QuadraticLine));
    }

    #[test]
    fn outside_point() {
        let r = classify_point(&rat(-3, 2), &int(0), &ScanGrid::default()).unwrap();
        assert_eq!(r.status.label(), "OUTSIDE_NECESSARY");
        assert_eq!(r.status.detail(), "a>=-1");
        assert_eq!(r.conjecture_side, ConjectureSide::Outside);
    }

    #[test]
    fn csv_rows() {
        let grid = ScanGrid::default();
        let rows = vec![
            classify_point(&int(2), &int(1), &grid).unwrap(),
            classify_point(&int(-2), &int(0), &grid).unwrap(),
        ];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "a,b,status,citation_or_witness_degree,conjecture_side,N");
        assert_eq!(lines[1], "2,1,THEOREM_IS_MS,line-b=a-1,BOUNDARY,10");
        assert_eq!(lines[2], "-2,0,OUTSIDE_NECESSARY,a>=-1,OUTSIDE,10");

        let mut empty = Vec::new();
        write_csv(&[], &mut empty).unwrap();
        assert_eq!(String::from_utf8(empty).unwrap().lines().count(), 1);
    }

    #[test]
    fn grid_points_ordered() {
        let grid = ScanGrid {
            a_min: int(0),
            a_max: int(1),
            b_min: int(0),
            b_max: rat(1, 2),
            step: rat(1, 2),
            ..ScanGrid::default()
        };
        let pts = grid.points();
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[1], (int(0), rat(1, 2)));
        assert_eq!(pts[5], (int(1), rat(1, 2)));
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
    }

    #[test]
    fn polyline_closes() {
        let p = boundary_polyline(&rat(1, 2)).unwrap();
        assert_eq!(p.first(), p.last());
        assert!(p.iter().all(|(a, b)| conjecture_side(a, b) == ConjectureSide::Boundary));
    }
}
