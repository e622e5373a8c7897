use conifold_core::{
    int, polylog_negative_closed, polylog_series, rat, LambdaSeries, Poly, QSeries, RatFunc, Rational,
};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

// Laurent series with pole order at most 1, so products stay within λ^-2.
fn lambda_series(max_exp: i32) -> impl Strategy<Value = LambdaSeries> {
    proptest::collection::vec(small_rational(), (max_exp + 2) as usize)
        .prop_map(|c| LambdaSeries::from_coeffs(-1, c).unwrap())
}

fn power_series(max_exp: i32) -> impl Strategy<Value = LambdaSeries> {
    proptest::collection::vec(small_rational(), (max_exp + 1) as usize)
        .prop_map(|c| LambdaSeries::from_coeffs(0, c).unwrap())
}

fn q_series(trunc: u32) -> impl Strategy<Value = QSeries<Rational>> {
    proptest::collection::vec(small_rational(), (trunc + 1) as usize)
        .prop_map(move |c| QSeries::from_terms(trunc, c.into_iter().enumerate().map(|(n, x)| (n as u32, x))))
}

proptest! {
    #[test]
    fn lambda_ring_axioms(a in power_series(8), b in power_series(8), c in lambda_series(8)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.add(&b).mul(&c).unwrap();
        let rhs = a.mul(&c).unwrap().add(&b.mul(&c).unwrap());
        prop_assert_eq!(lhs.truncate(rhs.max_exp()), rhs.truncate(lhs.max_exp()));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn q_ring_axioms(a in q_series(10), b in q_series(10), c in q_series(10)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&b).mul(&c).unwrap(), a.mul(&c).unwrap().add(&b.mul(&c).unwrap()));
    }

    #[test]
    fn q_theta_is_a_derivation(a in q_series(12), b in q_series(12)) {
        let lhs = a.mul(&b).unwrap().theta();
        let rhs = a.theta().mul(&b).unwrap().add(&a.mul(&b.theta()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rescale_matches_direct_construction(a in lambda_series(8), k in 1i64..6) {
        let k = int(k);
        for e in -1..=8 {
            let expected = a.coeff(e).unwrap() * num_traits::pow(k.clone(), (e + 1) as usize) / &k;
            prop_assert_eq!(a.rescale_variable(&k).coeff(e).unwrap(), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invert_times_self_is_one(
        lead in small_rational().prop_filter("nonzero", |r| !r.is_zero()),
        val in -2i32..=2,
        rest in proptest::collection::vec(small_rational(), 10),
    ) {
        let mut coeffs = vec![lead];
        coeffs.extend(rest);
        let s = LambdaSeries::from_coeffs(val, coeffs).unwrap();
        let inv = s.invert().unwrap();
        prop_assert_eq!(inv.valuation(), Some(-val));
        let p = s.mul(&inv).unwrap();
        prop_assert_eq!(p.clone(), LambdaSeries::one(p.max_exp()).unwrap());
        prop_assert_eq!(p.max_exp(), 10);
    }

    #[test]
    fn q_invert_times_self_is_one(
        lead in small_rational().prop_filter("nonzero", |r| !r.is_zero()),
        rest in proptest::collection::vec(small_rational(), 12),
    ) {
        let s = QSeries::from_terms(12, std::iter::once((0, lead)).chain(rest.into_iter().enumerate().map(|(n, c)| (n as u32 + 1, c))));
        prop_assert_eq!(s.mul(&s.invert().unwrap()).unwrap(), QSeries::one(12));
    }

    #[test]
    fn ratfunc_theta_commutes_with_expansion(
        num in proptest::collection::vec(-9i64..=9, 1..5),
        den_tail in proptest::collection::vec(-9i64..=9, 0..4),
        den0 in prop_oneof![1i64..=5, -5i64..=-1],
    ) {
        let mut den = vec![den0];
        den.extend(den_tail);
        let f = RatFunc::new(Poly::from_ints(&num), Poly::from_ints(&den)).unwrap();
        prop_assert_eq!(f.theta().expand(30).unwrap(), f.expand(30).unwrap().theta());
    }
}

#[test]
fn geometric_series_from_ratfunc() {
    let f = RatFunc::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -1])).unwrap();
    let expected = QSeries::from_terms(4, (1..=4).map(|n| (n, int(1))));
    assert_eq!(f.expand(4).unwrap(), expected);
}

#[test]
fn polylog_ladder() {
    for s in -8..=5 {
        assert_eq!(polylog_series(s, 30).theta(), polylog_series(s - 1, 30), "s = {s}");
    }
}

#[test]
fn negative_order_closed_forms_expand() {
    for m in 0..=8u32 {
        let closed = polylog_negative_closed(m);
        assert_eq!(closed.expand(30).unwrap(), polylog_series(-(m as i32), 30));
        assert_eq!(closed.theta().expand(30).unwrap(), polylog_series(-(m as i32) - 1, 30));
    }
}

#[test]
fn rendering() {
    let f = polylog_negative_closed(2);
    assert_eq!(f.to_string(), "(1·q + 1·q^2) / (1 + -3·q + 3·q^2 + -1·q^3)");
}
