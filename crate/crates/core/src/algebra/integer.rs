use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, IntegralDomain, Ring, RingTag};
use crate::error::{Error, Result};

/// The ring of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn tag(&self) -> RingTag {
        RingTag::Integers
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }

    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }

    fn is_torsion_free(&self) -> bool {
        true
    }

    fn div_by_int(&self, a: &BigInt, n: u64) -> Result<BigInt> {
        let (q, r) = a.div_rem(&BigInt::from(n));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonIntegral(format!("{a}/{n}")))
        }
    }

    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn render_coeff(&self, a: &BigInt) -> (bool, Option<String>) {
        let mag = a.abs();
        (a.is_negative(), (!mag.is_one()).then(|| mag.to_string()))
    }

    fn mul_int(&self, a: &BigInt, n: i64) -> BigInt {
        a * n
    }
}

impl IntegralDomain for Integers {
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return a.is_zero().then(BigInt::zero);
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn tag(&self) -> RingTag {
        RingTag::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn unit_inverse(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_torsion_free(&self) -> bool {
        true
    }

    fn div_by_int(&self, a: &BigRational, n: u64) -> Result<BigRational> {
        Ok(a / BigRational::from_integer(BigInt::from(n)))
    }

    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn render_coeff(&self, a: &BigRational) -> (bool, Option<String>) {
        let mag = a.abs();
        (a.is_negative(), (!mag.is_one()).then(|| mag.to_string()))
    }
}

impl IntegralDomain for Rationals {
    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            a.is_zero().then(BigRational::zero)
        } else {
            Some(a / b)
        }
    }
}

impl Field for Rationals {}
