//! Power series truncated at `t^N`.

use super::poly::Poly;
use super::{Ring, RingTag};
use crate::error::{Error, Result};

/// `c_0 + c_1 t + … + c_N t^N + O(t^{N+1})`; always exactly `N + 1`
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> TruncSeries<R> {
    /// Pads with zeros or truncates `coeffs` to precision `n`.
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>, n: usize) -> Self {
        coeffs.resize(n + 1, ring.zero());
        TruncSeries { ring, coeffs }
    }

    pub fn from_poly(ring: R, p: &Poly<R::Elem>, n: usize) -> Self {
        Self::new(ring, p.coeffs().iter().take(n + 1).cloned().collect(), n)
    }

    pub fn one(ring: R, n: usize) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one], n)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn tag(&self) -> RingTag {
        self.ring.tag()
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.ring.check_same(&other.ring)?;
        if self.precision() != other.precision() {
            return Err(Error::PrecisionMismatch {
                left: self.precision(),
                right: other.precision(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(TruncSeries {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let r = &self.ring;
        let n = self.precision();
        let mut out = vec![r.zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(a, b));
            }
        }
        Ok(TruncSeries {
            ring: self.ring.clone(),
            coeffs: out,
        })
    }

    /// Multiplicative inverse modulo `t^{N+1}`.
    pub fn invert(&self) -> Result<Self> {
        let r = &self.ring;
        let inv0 = r
            .unit_inverse(&self.coeffs[0])
            .ok_or(Error::NonUnitConstantTerm)?;
        let n = self.precision();
        let mut out: Vec<R::Elem> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = r.zero();
            for i in 1..=k {
                acc = r.add(&acc, &r.mul(&self.coeffs[i], &out[k - i]));
            }
            out.push(r.neg(&r.mul(&acc, &inv0)));
        }
        Ok(TruncSeries {
            ring: self.ring.clone(),
            coeffs: out,
        })
    }

    /// `g(a t)`: coefficient `c_n` becomes `c_n a^n`.
    pub fn dilate(&self, a: &R::Elem) -> Self {
        let r = &self.ring;
        let mut pw = r.one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = r.mul(c, &pw);
                pw = r.mul(&pw, a);
                v
            })
            .collect();
        TruncSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = TruncSeries::one(self.ring.clone(), self.precision());
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// `"1 + 3*t + 9*t^2 + O(t^3)"`.
    pub fn render(&self) -> String {
        let body = super::expr::render_dense(&self.ring, &self.coeffs, "t");
        let order = super::expr::power_text("t", self.precision() + 1).expect("positive order");
        if body == "0" {
            format!("O({order})")
        } else {
            format!("{body} + O({order})")
        }
    }
}

/// Free-function form of [`TruncSeries::invert`].
pub fn series_invert<R: Ring>(g: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    g.invert()
}
