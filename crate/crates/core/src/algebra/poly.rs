//! Dense univariate polynomials over an arbitrary coefficient ring.

use std::sync::Arc;

use num_bigint::BigInt;

use super::expr::{power_text, render_dense};
use super::{Field, IntegralDomain, Ring, RingTag};
use crate::error::Result;

/// Coefficients `c_0, c_1, …` of a polynomial, trailing zeros stripped.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// The polynomial ring `R[var]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
    var: Arc<str>,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: &str) -> Self {
        PolyRing {
            base,
            var: Arc::from(var),
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Builds a polynomial from coefficients in increasing degree.
    pub fn poly(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> Poly<R::Elem> {
        self.poly(coeffs.iter().map(|&c| self.base.from_int(c)).collect())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.poly(vec![c])
    }

    pub fn monomial(&self, c: R::Elem, n: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); n + 1];
        v[n] = c;
        self.poly(v)
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, p: &Poly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn eval(&self, p: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        p.coeffs.iter().rev().fold(self.base.zero(), |acc, c| {
            self.base.add(&self.base.mul(&acc, x), c)
        })
    }

    pub fn scale(&self, p: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.poly(p.coeffs.iter().map(|x| self.base.mul(x, c)).collect())
    }

    /// `p(a·var)`.
    pub fn dilate(&self, p: &Poly<R::Elem>, a: &R::Elem) -> Poly<R::Elem> {
        let mut pw = self.base.one();
        let mut out = Vec::with_capacity(p.coeffs.len());
        for c in &p.coeffs {
            out.push(self.base.mul(c, &pw));
            pw = self.base.mul(&pw, a);
        }
        self.poly(out)
    }

    /// `var^d · p(1/var)` for `d >= deg p`.
    pub fn reverse(&self, p: &Poly<R::Elem>, d: usize) -> Poly<R::Elem> {
        let mut out = vec![self.base.zero(); d + 1];
        for (i, c) in p.coeffs.iter().enumerate() {
            out[d - i] = c.clone();
        }
        self.poly(out)
    }

    /// Maps every coefficient through `f` into another polynomial ring.
    pub fn map<S: Ring>(
        &self,
        target: &PolyRing<S>,
        p: &Poly<R::Elem>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.poly(p.coeffs.iter().map(f).collect())
    }
}

impl<R: IntegralDomain> PolyRing<R> {
    /// Exact quotient `a / b` when `b` divides `a` in `R[var]`.
    fn long_div_exact(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Option<Poly<R::Elem>> {
        let db = b.degree()?;
        let lb = b.leading()?;
        let mut rem = a.coeffs.clone();
        if rem.len() < b.coeffs.len() {
            return rem.is_empty().then(|| self.poly(Vec::new()));
        }
        let mut quot = vec![self.base.zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let lead = &rem[i + db];
            if self.base.is_zero(lead) {
                continue;
            }
            let q = self.base.exact_div(lead, lb)?;
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&q, bc);
                rem[i + j] = self.base.sub(&rem[i + j], &t);
            }
            quot[i] = q;
        }
        rem.iter()
            .all(|c| self.base.is_zero(c))
            .then(|| self.poly(quot))
    }
}

impl<F: Field> PolyRing<F> {
    /// Euclidean division; `None` when `b` is zero.
    pub fn div_rem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Option<(Poly<F::Elem>, Poly<F::Elem>)> {
        let db = b.degree()?;
        let inv_lead = self.base.inv(b.leading()?)?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Some((self.poly(Vec::new()), self.poly(rem)));
        }
        let mut quot = vec![self.base.zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let q = self.base.mul(&rem[i + db], &inv_lead);
            if self.base.is_zero(&q) {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&q, bc);
                rem[i + j] = self.base.sub(&rem[i + j], &t);
            }
            quot[i] = q;
        }
        rem.truncate(db);
        Some((self.poly(quot), self.poly(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.div_rem(a, b).expect("nonzero divisor").1
    }

    /// Scales `p` so its leading coefficient is one.
    pub fn monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        match p.leading() {
            Some(l) => self.scale(p, &self.base.inv(l).expect("nonzero leading coefficient")),
            None => p.clone(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `base^e mod m`.
    pub fn pow_mod(&self, base: &Poly<F::Elem>, mut e: u128, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m);
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
            e >>= 1;
            if e > 0 {
                b = self.rem(&self.mul(&b, &b), m);
            }
        }
        acc
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn tag(&self) -> RingTag {
        RingTag::Poly {
            base: Box::new(self.base.tag()),
            var: self.var.to_string(),
        }
    }

    fn zero(&self) -> Self::Elem {
        Poly { coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let out = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.poly(out)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.poly(out)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.coeffs.len() == 1 {
            self.base
                .unit_inverse(&a.coeffs[0])
                .map(|c| self.constant(c))
        } else {
            None
        }
    }

    fn is_torsion_free(&self) -> bool {
        self.base.is_torsion_free()
    }

    fn div_by_int(&self, a: &Self::Elem, n: u64) -> Result<Self::Elem> {
        let coeffs = a
            .coeffs
            .iter()
            .map(|c| self.base.div_by_int(c, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.poly(coeffs))
    }

    fn render(&self, a: &Self::Elem) -> String {
        render_dense(&self.base, &a.coeffs, &self.var)
    }

    fn render_coeff(&self, a: &Self::Elem) -> (bool, Option<String>) {
        let nonzero: Vec<usize> = (0..a.coeffs.len())
            .filter(|&i| !self.base.is_zero(&a.coeffs[i]))
            .collect();
        if let [i] = nonzero[..] {
            let (negative, coeff) = self.base.render_coeff(&a.coeffs[i]);
            let monomial = power_text(&self.var, i);
            let text = match (coeff, monomial) {
                (None, None) => return (negative, None),
                (Some(c), None) => c,
                (None, Some(m)) => m,
                (Some(c), Some(m)) => format!("{c}*{m}"),
            };
            return (negative, Some(text));
        }
        (false, Some(format!("({})", self.render(a))))
    }
}

impl<R: IntegralDomain> IntegralDomain for PolyRing<R> {
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if b.is_zero() {
            return a.is_zero().then(|| self.zero());
        }
        self.long_div_exact(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Integers, Rationals};

    #[test]
    fn trailing_zeros_are_stripped() {
        let zt = PolyRing::new(Integers, "t");
        let p = zt.from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(zt.from_ints(&[0, 0]).is_zero());
        assert_eq!(zt.from_ints(&[]).degree(), None);
    }

    #[test]
    fn renders_in_increasing_degree() {
        let zt = PolyRing::new(Integers, "t");
        assert_eq!(zt.render(&zt.from_ints(&[1, -2, 3])), "1 - 2*t + 3*t^2");
        assert_eq!(zt.render(&zt.from_ints(&[0, -1])), "-t");
        assert_eq!(zt.render(&zt.zero()), "0");
        let zut = PolyRing::new(PolyRing::new(Integers, "u"), "t");
        let zu = zut.base().clone();
        let p = zut.poly(vec![
            zu.one(),
            zu.from_ints(&[1, 1]),
            zu.from_ints(&[0, -1]),
        ]);
        assert_eq!(zut.render(&p), "1 + (1 + u)*t - u*t^2");
    }

    #[test]
    fn exact_division_over_z() {
        let zt = PolyRing::new(Integers, "t");
        let a = zt.from_ints(&[1, 0, -1]);
        let b = zt.from_ints(&[1, -1]);
        assert_eq!(zt.exact_div(&a, &b), Some(zt.from_ints(&[1, 1])));
        assert_eq!(zt.exact_div(&a, &zt.from_ints(&[1, 2])), None);
        assert_eq!(
            zt.exact_div(&zt.from_ints(&[2, 4]), &zt.from_ints(&[2])),
            Some(zt.from_ints(&[1, 2]))
        );
        assert_eq!(
            zt.exact_div(&zt.from_ints(&[1, 4]), &zt.from_ints(&[2])),
            None
        );
    }

    #[test]
    fn gcd_over_q() {
        let qt = PolyRing::new(Rationals, "t");
        let a = qt.from_ints(&[-1, 0, 1]);
        let b = qt.from_ints(&[1, 2, 1]);
        assert_eq!(qt.gcd(&a, &b), qt.from_ints(&[1, 1]));
    }

    #[test]
    fn reverse_and_dilate() {
        let zt = PolyRing::new(Integers, "t");
        let p = zt.from_ints(&[1, -2]);
        assert_eq!(zt.reverse(&p, 1), zt.from_ints(&[-2, 1]));
        assert_eq!(
            zt.dilate(&zt.from_ints(&[1, 1, 1]), &BigInt::from(2)),
            zt.from_ints(&[1, 2, 4])
        );
    }
}
