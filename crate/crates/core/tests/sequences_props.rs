use lagms::diffop::{delta, falling_factorial_operator};
use lagms::exactmath::{int, rat, Polynomial, Rational};
use lagms::laguerre::LaguerreParams;
use lagms::sequences::{
    apply_diagonal, classify_known, necessary_battery, SequenceSpec, Tail, Verdict,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_degree + 1).prop_map(Polynomial::new)
}

fn alpha() -> impl Strategy<Value = LaguerreParams> {
    prop::sample::select(vec![int(0), rat(1, 2), int(1), int(3), rat(-1, 2)])
        .prop_map(|a| LaguerreParams::new(a).unwrap())
}

fn spec() -> impl Strategy<Value = SequenceSpec> {
    prop_oneof![
        (0usize..6, rational(), rational()).prop_map(|(n, g_n, g_n1)| SequenceSpec::Trivial { n, g_n, g_n1 }),
        rational().prop_map(|r| SequenceSpec::Geometric { r }),
        rational().prop_map(|a| SequenceSpec::Linear { a }),
        (1usize..5).prop_map(|n| SequenceSpec::FallingFactorial { n }),
        (rational(), rational()).prop_map(|(a, b)| SequenceSpec::Quadratic { a, b }),
        (prop::collection::vec(rational(), 13..16), prop::bool::ANY).prop_map(|(values, z)| {
            SequenceSpec::Explicit {
                values,
                tail: if z { Tail::Zero } else { Tail::Unspecified },
            }
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn all_ones_is_identity(p in polynomial(12), params in alpha()) {
        prop_assert_eq!(apply_diagonal(&SequenceSpec::all_ones(), &params, &p).unwrap(), p);
    }

    #[test]
    fn linear_sequence_is_shifted_delta(p in polynomial(10), a in rational(), params in alpha()) {
        let diag = apply_diagonal(&SequenceSpec::Linear { a: a.clone() }, &params, &p).unwrap();
        prop_assert_eq!(diag, delta(&params, &a).apply(&p));
    }

    #[test]
    fn falling_factorial_sequence_is_operator(p in polynomial(10), n in 1usize..=4, params in alpha()) {
        let diag = apply_diagonal(&SequenceSpec::FallingFactorial { n }, &params, &p).unwrap();
        prop_assert_eq!(diag, falling_factorial_operator(n, &params).unwrap().apply(&p));
    }

    #[test]
    fn diagonal_action_is_linear(
        s in spec(),
        p in polynomial(8),
        q in polynomial(8),
        r in rational(),
        params in alpha(),
    ) {
        let t = |f: &Polynomial| apply_diagonal(&s, &params, f).unwrap();
        prop_assert_eq!(t(&(&p + &q)), t(&p) + t(&q));
        prop_assert_eq!(t(&p.scale(&r)), t(&p).scale(&r));
    }

    #[test]
    fn spec_json_round_trip(s in spec()) {
        prop_assert_eq!(SequenceSpec::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn known_multipliers_pass_battery(s in spec(), params in alpha()) {
        if classify_known(&s, &params).verdict == Verdict::IsMs {
            let report = necessary_battery(&s, 10).unwrap();
            prop_assert!(report.all_passed(), "{} {:?}", s, report.first_failure());
        }
    }
}

#[test]
fn named_multipliers_pass_battery() {
    let mut specs = vec![
        SequenceSpec::Geometric { r: int(1) },
        SequenceSpec::Geometric { r: int(0) },
        SequenceSpec::Quadratic { a: int(-1), b: int(0) },
    ];
    for k in 0..=8 {
        let a = int(1) + rat(k, 4);
        specs.push(SequenceSpec::Quadratic { b: &a - int(1), a });
        specs.push(SequenceSpec::Linear { a: rat(k, 8) });
    }
    for n in 1..=5 {
        specs.push(SequenceSpec::FallingFactorial { n });
        specs.push(SequenceSpec::Trivial { n, g_n: int(-3), g_n1: int(7) });
    }
    let params = LaguerreParams::simple();
    for s in specs {
        assert_eq!(classify_known(&s, &params).verdict, Verdict::IsMs, "{s}");
        assert!(necessary_battery(&s, 10).unwrap().all_passed(), "{s}");
    }
}
