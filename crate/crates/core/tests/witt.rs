mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{ints, oracle_witt_mul, zw};
use wittzeta::algebra::{Integers, PolyRing, Ring};
use wittzeta::witt::{rationalize, RatWitt, WittVec};

const N: usize = 8;

fn witt_z() -> impl Strategy<Value = WittVec<Integers>> {
    prop::collection::vec(-4i64..=4, N).prop_map(|tail| {
        let mut c = vec![1];
        c.extend(tail);
        zw(&c, N)
    })
}

fn unit_poly(deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 0..=deg).prop_map(|tail| {
        let mut c = vec![1];
        c.extend(tail);
        c
    })
}

fn rat_witt() -> impl Strategy<Value = RatWitt<Integers>> {
    (unit_poly(3), unit_poly(3)).prop_map(|(p, q)| RatWitt::from_ints(Integers, &p, &q).unwrap())
}

proptest! {
    #[test]
    fn product_matches_witt_coordinate_oracle(g in witt_z(), h in witt_z()) {
        prop_assert_eq!(g.mul(&h).unwrap().coeffs().to_vec(), oracle_witt_mul(&g, &h));
    }

    #[test]
    fn commutative_ring_axioms(a in witt_z(), b in witt_z(), c in witt_z()) {
        let unit = WittVec::unit(Integers, N);
        let zero = WittVec::zero(Integers, N);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&unit).unwrap(), a.clone());
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), zero.clone());
        prop_assert_eq!(a.mul(&zero).unwrap(), zero);
    }

    #[test]
    fn ghost_map_is_a_ring_homomorphism(a in witt_z(), b in witt_z()) {
        prop_assert_eq!(a.add(&b).unwrap().ghost(), a.ghost().add(&b.ghost()));
        prop_assert_eq!(a.mul(&b).unwrap().ghost(), a.ghost().mul(&b.ghost()));
        prop_assert_eq!(WittVec::from_ghost(&a.ghost()).unwrap(), a);
    }

    #[test]
    fn teichmuller_is_multiplicative(x in -6i64..=6, y in -6i64..=6, g in witt_z()) {
        let t = |v: i64| WittVec::teichmuller(Integers, &BigInt::from(v), N);
        prop_assert_eq!(t(x).mul(&t(y)).unwrap(), t(x * y));
        prop_assert_eq!(g.mul(&t(x)).unwrap(), g.twist(&BigInt::from(x)));
    }

    #[test]
    fn lambda_involution_is_an_involution(g in witt_z()) {
        prop_assert_eq!(g.lambda_involution().lambda_involution(), g);
    }

    #[test]
    fn rational_product_expands_to_witt_product(f in rat_witt(), g in rat_witt()) {
        let n = 14;
        let prod = f.mul(&g).unwrap();
        prop_assert_eq!(prod.expand(n), f.expand(n).mul(&g.expand(n)).unwrap());
        prop_assert_eq!(f.add(&g).unwrap().expand(n), f.expand(n).add(&g.expand(n)).unwrap());
    }

    #[test]
    fn rationalize_recovers_small_fractions(f in rat_witt()) {
        let found = rationalize(&f.expand(16), 3).unwrap();
        prop_assert_eq!(found, Some(f));
    }
}

#[test]
fn axioms_over_a_polynomial_ring() {
    let r = PolyRing::new(Integers, "u");
    let w = |c: &[&[i64]]| {
        WittVec::from_coeffs(r.clone(), c.iter().map(|p| r.from_ints(p)).collect(), 6).unwrap()
    };
    let a = w(&[&[1], &[0, 1], &[2, 0, -1]]);
    let b = w(&[&[1], &[1, -1], &[], &[0, 0, 3]]);
    let c = w(&[&[1], &[0, 2], &[-1]]);
    assert_eq!(
        a.mul(&b.add(&c).unwrap()).unwrap(),
        a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
    );
    assert_eq!(
        a.mul(&b).unwrap().mul(&c).unwrap(),
        a.mul(&b.mul(&c).unwrap()).unwrap()
    );
    let u = r.from_ints(&[0, 1]);
    let tu = WittVec::teichmuller(r.clone(), &u, 6);
    assert_eq!(
        tu.mul(&tu).unwrap(),
        WittVec::teichmuller(r.clone(), &r.mul(&u, &u), 6)
    );
}

#[test]
fn oracle_agrees_on_the_defining_relation() {
    let a = WittVec::teichmuller(Integers, &BigInt::from(2), 6);
    let b = WittVec::teichmuller(Integers, &BigInt::from(-3), 6);
    assert_eq!(
        oracle_witt_mul(&a, &b),
        ints(&[1, -6, 36, -216, 1296, -7776, 46656])
    );
}
