//! Exact coefficient rings and the arithmetic built on them.
//!
//! Rings are modelled as *ring objects*: a value implementing [`Ring`] knows
//! how to combine elements of its associated [`Ring::Elem`] type. This keeps
//! context-dependent rings (finite fields, polynomial rings with named
//! variables) on the same footing as the integers.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub mod expr;
pub mod finite_field;
pub mod integer;
pub mod linalg;
pub mod mpoly;
pub mod poly;
pub mod series;

pub use finite_field::{make_field, FiniteField};
pub use integer::{Integers, Rationals};
pub use linalg::{bareiss_determinant, resultant, solve_fraction_free, sylvester_resultant};
pub use mpoly::{MPoly, MultiPolyRing};
pub use poly::{Poly, PolyRing};
pub use series::TruncSeries;

/// Identifies a coefficient ring in error messages and renderings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingTag {
    Integers,
    Rationals,
    Poly { base: Box<RingTag>, var: String },
    MultiPoly(Vec<String>),
    FiniteField { p: u64, k: u32 },
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Integers => write!(f, "Z"),
            RingTag::Rationals => write!(f, "Q"),
            RingTag::Poly { base, var } => write!(f, "{base}[{var}]"),
            RingTag::MultiPoly(vars) => write!(f, "Z[{}]", vars.join(",")),
            RingTag::FiniteField { p, k } if *k == 1 => write!(f, "F_{p}"),
            RingTag::FiniteField { p, k } => write!(f, "F_{p}^{k}"),
        }
    }
}

/// A commutative ring with exact arithmetic and decidable equality.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn tag(&self) -> RingTag;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Inverse of `a` when `a` is a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Whether the ring embeds into its rationalization `R ⊗ Q`.
    fn is_torsion_free(&self) -> bool;

    /// `a / n` computed in `R ⊗ Q`, returned only if it lies in the image of `R`.
    ///
    /// Fails with [`Error::TorsionUnsupported`] on rings with torsion and with
    /// [`Error::NonIntegral`] when the quotient is not in `R`.
    fn div_by_int(&self, a: &Self::Elem, n: u64) -> Result<Self::Elem>;

    /// Canonical text form of an element.
    fn render(&self, a: &Self::Elem) -> String;

    /// Splits `a` into a sign and a printable magnitude for use as a
    /// coefficient in a sum. `None` magnitude means the magnitude is one.
    fn render_coeff(&self, a: &Self::Elem) -> (bool, Option<String>) {
        if self.is_one(a) {
            return (false, None);
        }
        let s = self.render(a);
        if s.contains(' ') {
            (false, Some(format!("({s})")))
        } else {
            (false, Some(s))
        }
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Multiplies by the integer `n` through repeated structure (exact).
    fn mul_int(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        self.mul(a, &self.from_int(n))
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.tag().to_string(),
                right: other.tag().to_string(),
            })
        }
    }
}

/// A ring without zero divisors where divisibility is decidable.
pub trait IntegralDomain: Ring {
    /// `Some(q)` with `q * b == a` when `b` divides `a`, `None` otherwise.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

pub trait Field: IntegralDomain {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.unit_inverse(a)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}
