//! The big Witt ring `W(R)`: power series with constant term 1, where
//! addition is the series product and multiplication `∗` is determined by
//! `[a] ∗ [b] = [ab]` on Teichmüller classes `[a] = (1 - a t)^{-1}`.
//!
//! Products are computed through ghost (power-sum) coordinates, where `∗`
//! becomes pointwise multiplication. That route needs division by integers,
//! so `∗` is only offered over torsion-free coefficient rings.

mod ghost;
mod rational;
mod reconstruct;

use num_bigint::BigInt;

use crate::algebra::{Ring, TruncSeries};
use crate::error::{Error, Result};

pub use ghost::GhostVector;
pub use rational::{rat_star, RatReduce, RatWitt};
pub use reconstruct::rationalize;

/// A truncated element of `W(R)` at precision `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittVec<R: Ring> {
    series: TruncSeries<R>,
}

impl<R: Ring> WittVec<R> {
    /// Wraps a series, checking that its constant term is 1.
    pub fn new(series: TruncSeries<R>) -> Result<Self> {
        if !series.ring().is_one(series.coeff(0)) {
            return Err(Error::NotWittVector);
        }
        Ok(WittVec { series })
    }

    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>, n: usize) -> Result<Self> {
        Self::new(TruncSeries::new(ring, coeffs, n))
    }

    /// The additive zero, the constant series 1.
    pub fn zero(ring: R, n: usize) -> Self {
        WittVec {
            series: TruncSeries::one(ring, n),
        }
    }

    /// The multiplicative unit `(1 - t)^{-1}`.
    pub fn unit(ring: R, n: usize) -> Self {
        Self::teichmuller(ring.clone(), &ring.one(), n)
    }

    /// The Teichmüller class `[a] = (1 - a t)^{-1} = Σ a^n t^n`.
    pub fn teichmuller(ring: R, a: &R::Elem, n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut pw = ring.one();
        for _ in 0..=n {
            coeffs.push(pw.clone());
            pw = ring.mul(&pw, a);
        }
        WittVec {
            series: TruncSeries::new(ring, coeffs, n),
        }
    }

    pub fn ring(&self) -> &R {
        self.series.ring()
    }

    pub fn precision(&self) -> usize {
        self.series.precision()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        self.series.coeffs()
    }

    pub fn coeff(&self, n: usize) -> &R::Elem {
        self.series.coeff(n)
    }

    pub fn series(&self) -> &TruncSeries<R> {
        &self.series
    }

    pub fn into_series(self) -> TruncSeries<R> {
        self.series
    }

    /// `g +_W h`, the truncated series product.
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(WittVec {
            series: self.series.mul(&other.series)?,
        })
    }

    /// `-_W g`, the series inverse.
    pub fn neg(&self) -> Self {
        WittVec {
            series: self
                .series
                .invert()
                .expect("constant term 1 is always a unit"),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `m`-fold Witt sum `g +_W … +_W g` (negative `m` negates).
    pub fn scalar(&self, m: i64) -> Self {
        WittVec {
            series: self
                .series
                .pow(m)
                .expect("constant term 1 is always a unit"),
        }
    }

    /// The Witt product `g ∗ h`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring().check_same(other.ring())?;
        if self.precision() != other.precision() {
            return Err(Error::PrecisionMismatch {
                left: self.precision(),
                right: other.precision(),
            });
        }
        if !self.ring().is_torsion_free() {
            return Err(Error::TorsionUnsupported(self.ring().tag().to_string()));
        }
        let gh = self.ghost().mul(&other.ghost());
        Self::from_ghost(&gh)
    }

    /// `g^{∗m}`; the zeroth power is the unit `(1 - t)^{-1}`.
    pub fn mul_pow(&self, m: u32) -> Result<Self> {
        let mut acc = Self::unit(self.ring().clone(), self.precision());
        for _ in 0..m {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `g(a t)`, which equals `g ∗ [a]`.
    pub fn twist(&self, a: &R::Elem) -> Self {
        WittVec {
            series: self.series.dilate(a),
        }
    }

    /// The involution `Λ(R) → W(R)`, `g(t) ↦ g(-t)^{-1}`. It is its own
    /// inverse.
    pub fn lambda_involution(&self) -> Self {
        let minus_one = self.ring().from_bigint(&BigInt::from(-1));
        WittVec {
            series: self.series.dilate(&minus_one),
        }
        .neg()
    }

    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.series.first_difference(&other.series)
    }

    pub fn render(&self) -> String {
        self.series.render()
    }
}

/// Witt sum of a non-empty list of vectors.
pub fn witt_sum<R: Ring>(items: &[WittVec<R>]) -> Result<WittVec<R>> {
    let first = items
        .first()
        .ok_or(Error::UnsupportedClass("empty Witt sum".into()))?;
    items[1..]
        .iter()
        .try_fold(first.clone(), |acc, x| acc.add(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_field, Integers, PolyRing};

    fn zw(c: &[i64], n: usize) -> WittVec<Integers> {
        WittVec::from_coeffs(Integers, c.iter().map(|&x| BigInt::from(x)).collect(), n).unwrap()
    }

    fn teich(a: i64, n: usize) -> WittVec<Integers> {
        WittVec::teichmuller(Integers, &BigInt::from(a), n)
    }

    #[test]
    fn constant_term_must_be_one() {
        let s = TruncSeries::new(Integers, vec![BigInt::from(2)], 3);
        assert_eq!(WittVec::new(s).unwrap_err(), Error::NotWittVector);
    }

    #[test]
    fn addition_examples() {
        let a = teich(2, 5);
        let b = teich(3, 5);
        let prod = zw(&[1, -2], 5).add(&zw(&[1, -3], 5)).unwrap().neg();
        assert_eq!(a.add(&b).unwrap(), prod);
        let g = zw(&[1, 4, -7, 2], 5);
        assert_eq!(g.add(&WittVec::zero(Integers, 5)).unwrap(), g);
        assert_eq!(
            zw(&[1, 1], 4).add(&zw(&[1, -1], 4)).unwrap(),
            zw(&[1, 0, -1], 4)
        );
    }

    #[test]
    fn negation_examples() {
        assert_eq!(zw(&[1, -1], 4).neg(), zw(&[1, 1, 1, 1, 1], 4));
        assert_eq!(WittVec::zero(Integers, 3).neg(), WittVec::zero(Integers, 3));
        let g = zw(&[1, 3, -1, 5], 6);
        assert_eq!(g.neg().neg(), g);
        assert_eq!(g.add(&g.neg()).unwrap(), WittVec::zero(Integers, 6));
    }

    #[test]
    fn product_examples() {
        assert_eq!(teich(2, 8).mul(&teich(3, 8)).unwrap(), teich(6, 8));
        let g = zw(&[1, 2, -3, 0, 5], 8);
        assert_eq!(g.mul(&WittVec::unit(Integers, 8)).unwrap(), g);
        assert_eq!(
            zw(&[1, 1], 8).mul(&zw(&[1, 1], 8)).unwrap(),
            WittVec::unit(Integers, 8)
        );
    }

    #[test]
    fn product_rejects_torsion() {
        let f = make_field(3, 1).unwrap();
        let g = WittVec::teichmuller(f.clone(), &2, 4);
        assert!(matches!(g.mul(&g), Err(Error::TorsionUnsupported(_))));
    }

    #[test]
    fn mismatches_are_errors() {
        assert_eq!(
            teich(2, 3).add(&teich(2, 4)).unwrap_err(),
            Error::PrecisionMismatch { left: 3, right: 4 }
        );
        let zu = PolyRing::new(Integers, "u");
        let a = WittVec::unit(zu.clone(), 3);
        let b = WittVec::unit(PolyRing::new(Integers, "v"), 3);
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn teichmuller_examples() {
        assert_eq!(teich(0, 5), WittVec::zero(Integers, 5));
        assert_eq!(teich(1, 5), WittVec::unit(Integers, 5));
    }

    #[test]
    fn twist_examples() {
        let g = zw(&[1, 2, -1, 4], 6);
        assert_eq!(g.twist(&BigInt::from(1)), g);
        assert_eq!(g.twist(&BigInt::from(0)), WittVec::zero(Integers, 6));
        assert_eq!(g.twist(&BigInt::from(-2)), g.mul(&teich(-2, 6)).unwrap());
    }

    #[test]
    fn involution_examples() {
        assert_eq!(
            zw(&[1, 1], 6).lambda_involution(),
            WittVec::unit(Integers, 6)
        );
        assert_eq!(
            WittVec::zero(Integers, 4).lambda_involution(),
            WittVec::zero(Integers, 4)
        );
        let g = zw(&[1, -3, 2, 7], 7);
        assert_eq!(g.lambda_involution().lambda_involution(), g);
    }

    #[test]
    fn scalar_multiples() {
        let g = zw(&[1, 1], 5);
        assert_eq!(g.scalar(3), g.add(&g).unwrap().add(&g).unwrap());
        assert_eq!(g.scalar(-1), g.neg());
        assert_eq!(g.scalar(0), WittVec::zero(Integers, 5));
    }
}
