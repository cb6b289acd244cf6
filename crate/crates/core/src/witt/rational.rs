//! Rational Witt vectors `p(t) -_W q(t)`, i.e. the series `p(t) / q(t)`
//! with `p(0) = q(0) = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::WittVec;
use crate::algebra::{
    sylvester_resultant, FiniteField, Integers, IntegralDomain, MultiPolyRing, Poly, PolyRing,
    Rationals, Ring, TruncSeries,
};
use crate::error::{Error, Result};

/// Cancels common factors of a numerator/denominator pair where the ring
/// has a canonical gcd. The default keeps the pair as given.
pub trait RatReduce: Ring {
    fn reduce_pair(
        &self,
        p: &Poly<Self::Elem>,
        q: &Poly<Self::Elem>,
    ) -> (Poly<Self::Elem>, Poly<Self::Elem>) {
        (p.clone(), q.clone())
    }
}

/// Divides both polynomials by their gcd over `Q`, normalised to constant
/// term 1.
fn reduce_over_q(
    qt: &PolyRing<Rationals>,
    p: &Poly<BigRational>,
    q: &Poly<BigRational>,
) -> (Poly<BigRational>, Poly<BigRational>) {
    let g = qt.gcd(p, q);
    let c0 = g
        .coeff(0)
        .cloned()
        .expect("gcd of unit-constant polynomials");
    let g = qt.scale(&g, &c0.recip());
    if g.degree() == Some(0) {
        return (p.clone(), q.clone());
    }
    let (pq, pr) = qt.div_rem(p, &g).expect("nonzero gcd");
    let (qq, qr) = qt.div_rem(q, &g).expect("nonzero gcd");
    debug_assert!(pr.is_zero() && qr.is_zero());
    (pq, qq)
}

impl RatReduce for Rationals {
    fn reduce_pair(
        &self,
        p: &Poly<BigRational>,
        q: &Poly<BigRational>,
    ) -> (Poly<BigRational>, Poly<BigRational>) {
        reduce_over_q(&PolyRing::new(Rationals, "t"), p, q)
    }
}

impl RatReduce for Integers {
    fn reduce_pair(&self, p: &Poly<BigInt>, q: &Poly<BigInt>) -> (Poly<BigInt>, Poly<BigInt>) {
        let zt = PolyRing::new(Integers, "t");
        let qt = PolyRing::new(Rationals, "t");
        let to_q = |x: &Poly<BigInt>| zt.map(&qt, x, |c| BigRational::from_integer(c.clone()));
        let (rp, rq) = reduce_over_q(&qt, &to_q(p), &to_q(q));
        // Gauss's lemma: factors of a polynomial with constant term 1 that are
        // normalised to constant term 1 have integer coefficients.
        let back = |x: &Poly<BigRational>| {
            qt.map(&zt, x, |c| {
                assert!(
                    c.denom().is_one(),
                    "non-integral factor of a unit-constant polynomial"
                );
                c.numer().clone()
            })
        };
        (back(&rp), back(&rq))
    }
}

impl<R: Ring> RatReduce for PolyRing<R> {}
impl RatReduce for MultiPolyRing {}
impl RatReduce for FiniteField {}

/// The Witt vector `num(t) -_W den(t)`, whose series is `num / den`.
#[derive(Clone)]
pub struct RatWitt<R: Ring> {
    ring: R,
    num: Poly<R::Elem>,
    den: Poly<R::Elem>,
}

impl<R: Ring> fmt::Debug for RatWitt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatWitt({})", self.render())
    }
}

impl<R: RatReduce> RatWitt<R> {
    /// Builds `num / den`, checking both constant terms are 1 and cancelling
    /// common factors where the ring supports it.
    pub fn new(ring: R, num: Poly<R::Elem>, den: Poly<R::Elem>) -> Result<Self> {
        let unit_const = |p: &Poly<R::Elem>| p.coeff(0).is_some_and(|c| ring.is_one(c));
        if !unit_const(&num) || !unit_const(&den) {
            return Err(Error::NotWittVector);
        }
        let (num, den) = ring.reduce_pair(&num, &den);
        Ok(RatWitt { ring, num, den })
    }

    pub fn from_ints(ring: R, num: &[i64], den: &[i64]) -> Result<Self> {
        let pr = PolyRing::new(ring.clone(), "t");
        Self::new(ring, pr.from_ints(num), pr.from_ints(den))
    }

    /// The Teichmüller class `[a] = 1 / (1 - a t)`.
    pub fn teichmuller(ring: R, a: &R::Elem) -> Self {
        let pr = PolyRing::new(ring.clone(), "t");
        let den = pr.poly(vec![ring.one(), ring.neg(a)]);
        RatWitt {
            num: pr.one(),
            den,
            ring,
        }
    }

    /// `f +_W g`: the product of the two fractions.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let pr = self.poly_ring();
        Self::new(
            self.ring.clone(),
            pr.mul(&self.num, &other.num),
            pr.mul(&self.den, &other.den),
        )
    }

    /// `-_W f`: swaps numerator and denominator.
    pub fn neg(&self) -> Self {
        RatWitt {
            ring: self.ring.clone(),
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }
}

impl<R: Ring> RatWitt<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn num(&self) -> &Poly<R::Elem> {
        &self.num
    }

    pub fn den(&self) -> &Poly<R::Elem> {
        &self.den
    }

    fn poly_ring(&self) -> PolyRing<R> {
        PolyRing::new(self.ring.clone(), "t")
    }

    /// The series `num / den` truncated at `t^n`.
    pub fn expand(&self, n: usize) -> WittVec<R> {
        let num = TruncSeries::from_poly(self.ring.clone(), &self.num, n);
        let den = TruncSeries::from_poly(self.ring.clone(), &self.den, n);
        let inv = den.invert().expect("denominator has constant term 1");
        WittVec::new(num.mul(&inv).expect("same ring and precision")).expect("constant term 1")
    }

    /// `"(1 - t)/(1 - 2*t)"`.
    pub fn render(&self) -> String {
        let pr = self.poly_ring();
        format!("({})/({})", pr.render(&self.num), pr.render(&self.den))
    }
}

/// Equality of the denoted series, tested by cross-multiplication.
impl<R: Ring> PartialEq for RatWitt<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring {
            return false;
        }
        let pr = self.poly_ring();
        pr.mul(&self.num, &other.den) == pr.mul(&other.num, &self.den)
    }
}

impl<R: Ring> Eq for RatWitt<R> {}

/// The polynomial `r` with `r(0) = 1` and `(1/p) ∗ (1/q) = 1/r`, computed as
/// `Res_x(x^{deg p} p(1/x), q(t x))` at x-degrees `(deg p, deg q)`.
/// `deg r <= deg p · deg q`.
pub fn rat_star<R: IntegralDomain>(
    ring: &R,
    p: &Poly<R::Elem>,
    q: &Poly<R::Elem>,
) -> Poly<R::Elem> {
    let rt = PolyRing::new(ring.clone(), "t");
    let rtx = PolyRing::new(rt.clone(), "x");
    let dp = p.degree().unwrap_or(0);
    let dq = q.degree().unwrap_or(0);
    // x^{dp} p(1/x): coefficient of x^i is p_{dp - i}, a constant in R[t]
    let rev = rtx.poly((0..=dp).map(|i| rt.constant(rt.coeff(p, dp - i))).collect());
    // q(t x): coefficient of x^j is q_j t^j
    let dil = rtx.poly(
        q.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| rt.monomial(c.clone(), j))
            .collect(),
    );
    let r = sylvester_resultant(&rt, &rev, dp, &dil, dq);
    debug_assert!(r.coeff(0).is_some_and(|c| ring.is_one(c)));
    r
}

impl<R: IntegralDomain + RatReduce> RatWitt<R> {
    /// The Witt product. With `f = a/b = (1/b) -_W (1/a)` and
    /// `g = c/d = (1/d) -_W (1/c)`, bilinearity gives
    /// `f ∗ g = (a⋆d)(b⋆c) / ((a⋆c)(b⋆d))` where `⋆` is [`rat_star`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let r = &self.ring;
        let pr = self.poly_ring();
        let (a, b) = (&self.num, &self.den);
        let (c, d) = (&other.num, &other.den);
        let num = pr.mul(&rat_star(r, a, d), &rat_star(r, b, c));
        let den = pr.mul(&rat_star(r, a, c), &rat_star(r, b, d));
        Self::new(r.clone(), num, den)
    }
}
