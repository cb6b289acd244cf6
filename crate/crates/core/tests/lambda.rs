use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use wittzeta::algebra::{Integers, Poly, PolyRing};
use wittzeta::lambda::{
    check_lambda_additivity, check_sigma_ring_hom, BinomialZ, PlethysticZu, SigmaStructure,
};

/// `((-1)^n) C(-c, n) = c (c+1) ⋯ (c+n-1) / n!`, the coefficient of `t^n` in `(1 - t)^{-c}`.
fn rising_binomial(c: i64, n: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= BigInt::from(c + i as i64);
        den *= BigInt::from(i as i64 + 1);
    }
    num / den
}

fn zu(c: &[i64]) -> Poly<BigInt> {
    PolyRing::new(Integers, "u").from_ints(c)
}

#[test]
fn binomial_sigma_matches_closed_form() {
    let n = 10;
    for chi in -5..=5 {
        let s = BinomialZ.sigma_t(&BigInt::from(chi), n);
        let expected: Vec<BigInt> = (0..=n).map(|k| rising_binomial(chi, k)).collect();
        assert_eq!(s.coeffs(), &expected[..], "chi = {chi}");
        let l = BinomialZ.lambda_t(&BigInt::from(chi), n);
        // λ_t(χ) = (1 + t)^χ
        let lam: Vec<BigInt> = (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                rising_binomial(-chi, k) * sign
            })
            .collect();
        assert_eq!(l.coeffs(), &lam[..], "chi = {chi}");
    }
}

#[test]
fn plethystic_sigma_on_monomials() {
    let n = 8;
    let s = PlethysticZu::default();
    for c in -3..=3 {
        for r in 0..=4usize {
            let mut a = vec![0; r + 1];
            a[r] = c;
            let got = s.sigma_t(&zu(&a), n);
            for k in 0..=n {
                let mut e = vec![0i64; r * k + 1];
                e[r * k] = 1;
                let expected = PolyRing::new(Integers, "u").scale(&zu(&e), &rising_binomial(c, k));
                assert_eq!(got.coeff(k), &expected, "c = {c}, r = {r}, k = {k}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn binomial_axioms(a in -20i64..=20, b in -20i64..=20) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert!(check_lambda_additivity(&BinomialZ, &a, &b, 10).holds);
        prop_assert!(check_sigma_ring_hom(&BinomialZ, &a, &b, 10).unwrap().holds);
    }

    #[test]
    fn plethystic_axioms(
        a in prop::collection::vec(-2i64..=2, 1..=4),
        b in prop::collection::vec(-2i64..=2, 1..=4),
    ) {
        let s = PlethysticZu::default();
        let (a, b) = (zu(&a), zu(&b));
        prop_assert!(check_lambda_additivity(&s, &a, &b, 8).holds);
        prop_assert!(check_sigma_ring_hom(&s, &a, &b, 8).unwrap().holds);
    }
}
