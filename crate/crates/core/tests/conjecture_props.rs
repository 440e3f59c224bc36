use lagms::conjecture::{
    conjecture_side, necessary_region, scan, write_csv, ConjectureSide, NecessaryRegion,
    RegionClassification, RegionStatus, ScanGrid,
};
use lagms::exactmath::{int, rat};
use lagms::sequences::{Citation, SequenceSpec};
use proptest::prelude::*;

fn small_grid(degree: usize) -> ScanGrid {
    ScanGrid {
        a_min: int(-1),
        a_max: int(4),
        b_min: int(0),
        b_max: int(4),
        step: rat(1, 2),
        degree,
        ..ScanGrid::default()
    }
}

fn csv_bytes(rows: &[RegionClassification]) -> Vec<u8> {
    let mut out = Vec::new();
    write_csv(rows, &mut out).unwrap();
    out
}

#[test]
fn falsification_is_monotone_in_budget() {
    let low = scan(&small_grid(6)).unwrap();
    let high = scan(&small_grid(10)).unwrap();
    assert_eq!(low.len(), high.len());
    for (l, h) in low.iter().zip(&high) {
        assert_eq!((&l.a, &l.b), (&h.a, &h.b));
        if let RegionStatus::Falsified(w) = &l.status {
            let spec = SequenceSpec::Quadratic { a: l.a.clone(), b: l.b.clone() };
            assert!(w.revalidate(&spec, &small_grid(6).params));
            assert!(
                matches!(h.status, RegionStatus::Falsified(_)),
                "({}, {}) lost its witness",
                l.a,
                l.b
            );
        }
    }
}

#[test]
fn outside_necessary_comes_from_bounds() {
    for r in scan(&small_grid(4)).unwrap() {
        if let RegionStatus::OutsideNecessary(c) = r.status {
            let Citation::QuadraticBound(bound) = c else {
                panic!("({}, {}) cited {c}", r.a, r.b);
            };
            assert!(!bound.holds(&r.a, &r.b));
            assert_eq!(necessary_region(&r.a, &r.b), NecessaryRegion::NotMs(c));
        }
    }
}

#[test]
fn scan_output_independent_of_thread_count() {
    let grid = small_grid(6);
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| csv_bytes(&scan(&grid).unwrap()))
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, csv_bytes(&scan(&grid).unwrap()));
}

#[test]
fn no_inside_point_is_falsified() {
    for r in scan(&small_grid(8)).unwrap() {
        if r.conjecture_side == ConjectureSide::Inside {
            assert!(!matches!(r.status, RegionStatus::Falsified(_)), "({}, {})", r.a, r.b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conjecture_side_matches_inequalities(an in -40i64..=40, bn in -20i64..=40, d in 1i64..=8) {
        let (a, b) = (rat(an, d), rat(bn, d));
        let lower = std::cmp::max(int(0), &a - int(1));
        let upper = (&a + int(1)) * (&a + int(1)) / int(8);
        let inside_closed = a >= int(-1) && a <= int(3) && b >= lower && b <= upper;
        let side = conjecture_side(&a, &b);
        prop_assert_eq!(side != ConjectureSide::Outside, inside_closed);
        if side == ConjectureSide::Inside {
            prop_assert!(a > int(-1) && a < int(3) && b > lower && b < upper);
        }
    }
}
