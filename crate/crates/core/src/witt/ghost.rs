use super::WittVec;
use crate::algebra::Ring;
use crate::error::{Error, Result};

/// Ghost coordinates `p_1, …, p_N`: the coefficients of `t·(d/dt) log g(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhostVector<R: Ring> {
    ring: R,
    values: Vec<R::Elem>,
}

impl<R: Ring> GhostVector<R> {
    pub fn new(ring: R, values: Vec<R::Elem>) -> Self {
        GhostVector { ring, values }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// `values()[n - 1]` is `p_n`.
    pub fn values(&self) -> &[R::Elem] {
        &self.values
    }

    pub fn precision(&self) -> usize {
        self.values.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| self.ring.mul(a, b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Self {
        debug_assert_eq!(self.values.len(), other.values.len());
        GhostVector {
            ring: self.ring.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl<R: Ring> WittVec<R> {
    /// Power sums by Newton's recurrence
    /// `p_n = n c_n - Σ_{i=1}^{n-1} c_{n-i} p_i`. Division-free.
    pub fn ghost(&self) -> GhostVector<R> {
        let r = self.ring();
        let c = self.coeffs();
        let n = self.precision();
        let mut ps: Vec<R::Elem> = Vec::with_capacity(n);
        for k in 1..=n {
            let mut acc = r.mul_int(&c[k], k as i64);
            for i in 1..k {
                acc = r.sub(&acc, &r.mul(&c[k - i], &ps[i - 1]));
            }
            ps.push(acc);
        }
        GhostVector::new(r.clone(), ps)
    }

    /// Inverts [`WittVec::ghost`] over a torsion-free ring:
    /// `c_n = (p_n + Σ_{i=1}^{n-1} c_{n-i} p_i) / n`.
    ///
    /// Fails with [`Error::NonIntegral`] when some `c_n` is not in the ring,
    /// i.e. the ghost vector is not realizable over `R`.
    pub fn from_ghost(ghost: &GhostVector<R>) -> Result<Self> {
        let r = ghost.ring();
        if !r.is_torsion_free() {
            return Err(Error::TorsionUnsupported(r.tag().to_string()));
        }
        let ps = ghost.values();
        let n = ps.len();
        let mut c: Vec<R::Elem> = Vec::with_capacity(n + 1);
        c.push(r.one());
        for k in 1..=n {
            let mut acc = ps[k - 1].clone();
            for i in 1..k {
                acc = r.add(&acc, &r.mul(&c[k - i], &ps[i - 1]));
            }
            c.push(r.div_by_int(&acc, k as u64)?);
        }
        WittVec::from_coeffs(r.clone(), c, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::expr::parse_in;
    use crate::algebra::{Integers, MultiPolyRing};
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn ghost_of_teichmuller_is_powers() {
        let r = MultiPolyRing::new(vec!["a".into()]);
        let a = parse_in("a", &r).unwrap();
        let g = WittVec::teichmuller(r.clone(), &a, 5);
        let expected: Vec<_> = (1..=5).map(|k| r.pow(&a, k)).collect();
        assert_eq!(g.ghost().values(), &expected[..]);
        assert_eq!(
            WittVec::from_ghost(&GhostVector::new(r.clone(), expected)).unwrap(),
            g
        );
    }

    #[test]
    fn ghost_of_zero_and_unit() {
        assert_eq!(
            WittVec::zero(Integers, 4).ghost().values(),
            &ints(&[0, 0, 0, 0])[..]
        );
        assert_eq!(
            WittVec::unit(Integers, 4).ghost().values(),
            &ints(&[1, 1, 1, 1])[..]
        );
        let zero = GhostVector::new(Integers, ints(&[0, 0, 0]));
        assert_eq!(
            WittVec::from_ghost(&zero).unwrap(),
            WittVec::zero(Integers, 3)
        );
        let ones = GhostVector::new(Integers, ints(&[1, 1, 1, 1, 1]));
        assert_eq!(
            WittVec::from_ghost(&ones).unwrap(),
            WittVec::unit(Integers, 5)
        );
    }

    #[test]
    fn ghost_is_additive() {
        let g = WittVec::from_coeffs(Integers, ints(&[1, 2, -1, 3]), 6).unwrap();
        let h = WittVec::from_coeffs(Integers, ints(&[1, -4, 0, 1, 1]), 6).unwrap();
        assert_eq!(g.add(&h).unwrap().ghost(), g.ghost().add(&h.ghost()));
    }

    #[test]
    fn unrealizable_ghost_is_rejected() {
        // p_1 = 0, p_2 = 1 would need c_2 = 1/2
        let gh = GhostVector::new(Integers, ints(&[0, 1]));
        assert!(matches!(
            WittVec::from_ghost(&gh),
            Err(Error::NonIntegral(_))
        ));
    }
}
