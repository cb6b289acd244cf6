mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::ints;
use wittzeta::algebra::{Integers, PolyRing};
use wittzeta::measures::{
    census_from_counts, count_points, count_points_naive, measure_value, sym_product_counts,
    CountingMeasure, EulerMeasure, K0Class, Measure, PoincareMeasure, SymbolicAtom, Variety,
};
use wittzeta::Error;

fn fields() -> Vec<(u64, u32)> {
    vec![(2, 1), (3, 1), (2, 2), (5, 1)]
}

fn basic(p: u64, k: u32) -> Vec<Variety> {
    vec![
        Variety::point(p, k),
        Variety::affine(p, k, 1),
        Variety::gm(p, k),
        Variety::projective(p, k, 1),
        Variety::projective(p, k, 2),
    ]
}

#[test]
fn scissor_relation_for_the_affine_line() {
    for (p, k) in fields() {
        for m in 1..=3 {
            let a1 = count_points(&Variety::affine(p, k, 1), m).unwrap();
            let pt = count_points(&Variety::point(p, k), m).unwrap();
            let gm = count_points(&Variety::gm(p, k), m).unwrap();
            assert_eq!(a1, pt + gm, "q = {p}^{k}, m = {m}");
        }
        let mu = CountingMeasure::new(p, k);
        let z = |v: Variety| mu.zeta_of(&K0Class::variety(v), 5).unwrap();
        assert_eq!(
            z(Variety::affine(p, k, 1)),
            z(Variety::point(p, k)).add(&z(Variety::gm(p, k))).unwrap()
        );
    }
}

#[test]
fn counts_are_multiplicative() {
    for (p, k) in [(2, 1), (3, 1)] {
        let vs = basic(p, k);
        for x in &vs {
            for y in &vs {
                let xy = x.product(y).unwrap();
                for m in 1..=2 {
                    assert_eq!(
                        count_points(&xy, m).unwrap(),
                        count_points(x, m).unwrap() * count_points(y, m).unwrap(),
                        "{x} x {y}, m = {m}"
                    );
                }
            }
        }
    }
}

#[test]
fn projective_space_counts() {
    for (p, k) in fields() {
        let q = BigInt::from(p.pow(k));
        for n in 0..=3 {
            let expected: BigInt = (0..=n).map(|i| q.pow(i)).sum();
            assert_eq!(
                count_points(&Variety::projective(p, k, n as usize), 1).unwrap(),
                expected
            );
        }
    }
}

fn affine_term() -> impl Strategy<Value = (i64, u32, u32)> {
    (-2i64..=2, 0u32..=3, 0u32..=2)
}

fn render_terms(terms: &[(i64, Vec<u32>)], vars: &[&str]) -> String {
    let mut s = String::from("0");
    for (c, e) in terms {
        s.push_str(&format!(" + ({c})"));
        for (v, k) in vars.iter().zip(e) {
            s.push_str(&format!("*{v}^{k}"));
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fast_counts_agree_with_enumeration_on_plane_curves(
        terms in prop::collection::vec(affine_term(), 1..5),
        p in prop::sample::select(vec![2u64, 3, 5]),
        m in 1u32..=2,
    ) {
        let terms: Vec<(i64, Vec<u32>)> = terms.into_iter().map(|(c, i, j)| (c, vec![i, j])).collect();
        let eq = render_terms(&terms, &["x", "y"]);
        let src = format!(r#"{{"p":{p},"ambient":{{"affine":2}},"equations":["{eq}"],"vars":["x","y"]}}"#);
        let v = Variety::from_json(&src).unwrap();
        prop_assert_eq!(count_points(&v, m).unwrap(), count_points_naive(&v, m).unwrap());
    }

    #[test]
    fn fast_counts_agree_with_enumeration_on_projective_curves(
        coeffs in prop::collection::vec(-2i64..=2, 10),
        d in 1u32..=3,
        p in prop::sample::select(vec![2u64, 3]),
        m in 1u32..=2,
    ) {
        let mut terms = Vec::new();
        let mut idx = 0;
        for i in 0..=d {
            for j in 0..=(d - i) {
                terms.push((coeffs[idx % coeffs.len()], vec![i, j, d - i - j]));
                idx += 1;
            }
        }
        let eq = render_terms(&terms, &["x", "y", "z"]);
        let src = format!(r#"{{"p":{p},"ambient":{{"projective":2}},"equations":["{eq}"],"vars":["x","y","z"]}}"#);
        let v = Variety::from_json(&src).unwrap();
        prop_assert_eq!(count_points(&v, m).unwrap(), count_points_naive(&v, m).unwrap());
    }

    #[test]
    fn fast_counts_agree_with_enumeration_on_mixed_ambients(
        a in -2i64..=2,
        b in -2i64..=2,
        c in -2i64..=2,
        p in prop::sample::select(vec![2u64, 3]),
    ) {
        let eq = format!("({a})*x^2*z + ({b})*x*y*z + ({c})*y^2 * w");
        let src = format!(
            r#"{{"p":{p},"ambient":[{{"projective":1}},{{"affine":1}},{{"affine":1}}],"equations":["{eq}"],"vars":["x","y","z","w"]}}"#
        );
        let v = Variety::from_json(&src).unwrap();
        prop_assert_eq!(count_points(&v, 1).unwrap(), count_points_naive(&v, 1).unwrap());
    }
}

#[test]
fn census_of_the_projective_line() {
    // closed points of P^1 over F_2 by degree: 3, 1, 2, 3, 6, 9
    let counts: Vec<BigInt> = (1..=6).map(|m| BigInt::from(2u64.pow(m) + 1)).collect();
    assert_eq!(
        census_from_counts(&counts).unwrap(),
        ints(&[3, 1, 2, 3, 6, 9])
    );
    assert!(matches!(
        census_from_counts(&ints(&[1, 2])),
        Err(Error::CensusInconsistent { degree: 2, .. })
    ));
}

#[test]
fn sym_counts_of_a_conic() {
    // x^2 + y^2 = z^2 is a smooth conic, so P^1 over F_3
    let v = Variety::from_json(r#"{"p":3,"ambient":{"projective":2},"equations":["x^2+y^2-z^2"]}"#)
        .unwrap();
    let p1 = Variety::projective(3, 1, 1);
    assert_eq!(
        sym_product_counts(&v, 5).unwrap(),
        sym_product_counts(&p1, 5).unwrap()
    );
}

#[test]
fn euler_and_poincare_values() {
    for n in 0..=4 {
        let pn = EulerMeasure.projective_space(n);
        assert_eq!(
            measure_value(&EulerMeasure, &pn).unwrap(),
            BigInt::from(n as i64 + 1)
        );
        let pm = PoincareMeasure::default();
        let r = PolyRing::new(Integers, "u");
        let mut c = vec![0i64; 2 * n + 1];
        for i in 0..=n {
            c[2 * i] = 1;
        }
        assert_eq!(
            measure_value(&pm, &pm.projective_space(n)).unwrap(),
            r.from_ints(&c)
        );
    }
    let s = K0Class::symbol(SymbolicAtom::new(
        "S",
        &[("euler", "-2"), ("poincare", "1-2*u+u^2")],
    ));
    let c = s.mul(&s).unwrap().sub(&EulerMeasure.affine_space(2));
    assert_eq!(measure_value(&EulerMeasure, &c).unwrap(), BigInt::from(3));
    let pm = PoincareMeasure::default();
    let r = pm.ring().clone();
    assert_eq!(
        measure_value(&pm, &c).unwrap(),
        r.from_ints(&[1, -4, 6, -4, 0])
    );
    assert!(matches!(
        measure_value(&CountingMeasure::new(2, 1), &c),
        Err(Error::UnvaluedAtom { .. })
    ));
}

#[test]
fn variety_json_round_trip() {
    let v = Variety::from_json(
        r#"{"name":"E","p":5,"ambient":{"projective":2},"equations":["y^2*z - x^3 - x*z^2 - z^3"],"vars":["x","y","z"]}"#,
    )
    .unwrap();
    assert_eq!(Variety::from_spec(&v.to_spec()).unwrap(), v);
    assert!(
        Variety::from_json(r#"{"p":5,"ambient":{"projective":2},"equations":["x^2 - y"]}"#)
            .is_err()
    );
    assert!(matches!(
        Variety::from_json(r#"{"p":6,"ambient":{"affine":1}}"#),
        Err(Error::NotPrime(6))
    ));
}
