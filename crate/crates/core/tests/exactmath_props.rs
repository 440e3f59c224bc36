use lagms::exactmath::{
    discriminant_quadratic, int, is_real_rooted, rat, squarefree_decomposition,
    sturm_distinct_real_roots, Polynomial, Rational,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 1..=max_degree + 1).prop_map(Polynomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_of_rational_linear_factors_are_real_rooted(
        factors in prop::collection::vec((rational(), 1usize..=3), 0..5),
        lead in rational().prop_filter("nonzero", |c| !c.is_zero()),
    ) {
        let mut p = Polynomial::constant(lead);
        for (r, m) in &factors {
            p = p * Polynomial::new(vec![-r.clone(), int(1)]).pow(*m);
        }
        let v = is_real_rooted(&p);
        prop_assert!(v.all_real);
        prop_assert_eq!(v.real_count_with_multiplicity, p.degree().unwrap());
    }

    #[test]
    fn times_x_squared_plus_one_is_not_real_rooted(
        p in polynomial(6).prop_filter("nonzero", |p| !p.is_zero()),
    ) {
        let q = p * Polynomial::from_ints(&[1, 0, 1]);
        prop_assert!(!is_real_rooted(&q).all_real);
    }

    #[test]
    fn squarefree_round_trip(
        factors in prop::collection::vec((rational(), 1usize..=3), 0..4),
        extra in polynomial(3).prop_filter("nonzero", |p| !p.is_zero()),
    ) {
        let mut p = extra;
        for (r, m) in &factors {
            p = p * Polynomial::new(vec![-r.clone(), int(1)]).pow(*m);
        }
        let dec = squarefree_decomposition(&p).unwrap();
        prop_assert_eq!(dec.reconstruct(), p);
        for (part, _) in &dec.parts {
            prop_assert!(sturm_distinct_real_roots(part).is_ok());
        }
    }

    #[test]
    fn quadratic_discriminant_matches_oracle(a in rational(), b in rational(), c in rational()) {
        prop_assume!(!c.is_zero());
        let p = Polynomial::new(vec![a, b, c]);
        let disc = discriminant_quadratic(&p).unwrap();
        prop_assert_eq!(!disc.is_negative(), is_real_rooted(&p).all_real);
    }
}

#[test]
fn sturm_counts_all_small_root_sets() {
    let pool: Vec<i64> = (-3..=3).collect();
    for mask in 0u32..(1 << pool.len()) {
        let roots: Vec<Rational> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &r)| int(r))
            .collect();
        if roots.len() > 6 {
            continue;
        }
        let p = Polynomial::from_roots(&roots);
        assert_eq!(sturm_distinct_real_roots(&p).unwrap(), roots.len(), "mask {mask}");
        // x^2 - 2 adds two irrational roots, x^2 + 1 none
        let q = &p * &Polynomial::from_ints(&[-2, 0, 1]) * Polynomial::from_ints(&[1, 0, 1]);
        assert_eq!(sturm_distinct_real_roots(&q).unwrap(), roots.len() + 2, "mask {mask}");
    }
}
