use num_bigint::BigInt;
use proptest::prelude::*;
use schubert_sem::oracle::rank_mod_p;
use schubert_sem::poly::sem::sem_indices;
use schubert_sem::poly::{
    divided_difference as dd, divided_difference_by_division, sem_expand, sem_monomial, Monomial,
    Polynomial,
};
use schubert_sem::Poly;

/// Random integer polynomials of degree at most 6 in `x_1, …, x_5`.
fn poly_strategy() -> impl Strategy<Value = Poly> {
    let term = (prop::collection::vec(0u16..=6, 5), -20i64..=20)
        .prop_filter("degree at most 6", |(e, _)| e.iter().sum::<u16>() <= 6);
    prop::collection::vec(term, 0..8).prop_map(|terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_x(&e), BigInt::from(c))),
        )
    })
}

/// Random polynomials whose monomials lie in the staircase for `m = 4`,
/// so that a SEM expansion with `k ≤ 4` exists.
fn staircase_strategy() -> impl Strategy<Value = Poly> {
    let term = ((0u16..=4, 0u16..=3, 0u16..=2, 0u16..=1), -9i64..=9);
    prop::collection::vec(term, 0..10).prop_map(|terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|((a, b, c, d), k)| (Monomial::from_x(&[a, b, c, d]), BigInt::from(k))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nilpotent(f in poly_strategy(), i in 1usize..=5) {
        prop_assert!(dd(&dd(&f, i), i).is_zero());
    }

    #[test]
    fn braid(f in poly_strategy(), i in 1usize..=4) {
        let lhs = dd(&dd(&dd(&f, i), i + 1), i);
        let rhs = dd(&dd(&dd(&f, i + 1), i), i + 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn distant_commute(f in poly_strategy(), i in 1usize..=5, gap in 2usize..=3) {
        let j = i + gap;
        prop_assert_eq!(dd(&dd(&f, i), j), dd(&dd(&f, j), i));
    }

    #[test]
    fn closed_form_matches_division(f in poly_strategy(), i in 1usize..=5) {
        prop_assert_eq!(dd(&f, i), divided_difference_by_division(&f, i));
    }

    #[test]
    fn sem_round_trip(f in staircase_strategy()) {
        let sem = sem_expand(&f, 4).unwrap();
        prop_assert_eq!(sem.evaluate(), f);
    }

    #[test]
    fn text_and_json_round_trip(f in poly_strategy()) {
        prop_assert_eq!(f.to_string().parse::<Poly>().unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), f);
    }
}

#[test]
fn sem_monomials_are_independent() {
    for k in 1..=5 {
        for d in 0..=6 {
            let polys: Vec<Poly> = sem_indices(k, d).iter().map(sem_monomial).collect();
            assert_eq!(rank_mod_p(&polys, 1_000_000_007), polys.len(), "k = {k}, degree {d}");
        }
    }
}

#[test]
fn expansion_outside_the_staircase_is_rejected() {
    let f: Poly = "x1^5".parse().unwrap();
    assert!(sem_expand(&f, 4).is_err());
    assert!(sem_expand(&f, 5).is_ok());
}
