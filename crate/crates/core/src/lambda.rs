//! σ-operations (the opposite λ-structure) and their λ counterparts.
//!
//! A σ-structure on `R` is a group homomorphism `σ_t: (R, +) → W(R)` with
//! `σ^0 = 1` and `σ^1 = id`. The λ-operations are recovered through the
//! involution: `λ_t(a) = σ_{-t}(a)^{-1}`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::{Integers, Poly, PolyRing, Ring};
use crate::error::{Error, Result};
use crate::verdict::Verdict;
use crate::witt::{witt_sum, WittVec};

pub trait SigmaStructure {
    type R: Ring;

    fn name(&self) -> &'static str;

    fn ring(&self) -> &Self::R;

    /// `Σ σ^n(a) t^n` up to `t^n`.
    fn sigma_t(&self, a: &<Self::R as Ring>::Elem, n: usize) -> WittVec<Self::R>;

    fn sigma_n(&self, a: &<Self::R as Ring>::Elem, n: usize) -> <Self::R as Ring>::Elem {
        self.sigma_t(a, n).coeff(n).clone()
    }

    /// `Σ λ^n(a) t^n`, the image of `σ_t(a)` under `g(t) ↦ g(-t)^{-1}`.
    fn lambda_t(&self, a: &<Self::R as Ring>::Elem, n: usize) -> WittVec<Self::R> {
        self.sigma_t(a, n).lambda_involution()
    }
}

/// `σ_t(m) = (1 - t)^{-m}` on the integers.
#[derive(Debug, Clone, Copy, Default)]
pub struct BinomialZ;

impl SigmaStructure for BinomialZ {
    type R = Integers;

    fn name(&self) -> &'static str {
        "binomial"
    }

    fn ring(&self) -> &Integers {
        &Integers
    }

    fn sigma_t(&self, a: &BigInt, n: usize) -> WittVec<Integers> {
        let m = a.to_i64().expect("σ argument fits in i64");
        WittVec::unit(Integers, n).scalar(m)
    }
}

/// `σ_t(Σ c_r u^r) = Π_r (1 - u^r t)^{-c_r}` on `Z[u]`.
#[derive(Debug, Clone)]
pub struct PlethysticZu {
    ring: PolyRing<Integers>,
}

impl Default for PlethysticZu {
    fn default() -> Self {
        PlethysticZu {
            ring: PolyRing::new(Integers, "u"),
        }
    }
}

impl SigmaStructure for PlethysticZu {
    type R = PolyRing<Integers>;

    fn name(&self) -> &'static str {
        "plethystic"
    }

    fn ring(&self) -> &PolyRing<Integers> {
        &self.ring
    }

    fn sigma_t(&self, a: &Poly<BigInt>, n: usize) -> WittVec<PolyRing<Integers>> {
        let r = &self.ring;
        let mut factors = vec![WittVec::zero(r.clone(), n)];
        for (deg, c) in a.coeffs().iter().enumerate() {
            let m = c.to_i64().expect("σ argument fits in i64");
            if m != 0 {
                let ur = r.monomial(BigInt::from(1), deg);
                factors.push(WittVec::teichmuller(r.clone(), &ur, n).scalar(m));
            }
        }
        witt_sum(&factors).expect("same ring and precision")
    }
}

/// `λ^n(a + b) = Σ_{i+j=n} λ^i(a) λ^j(b)` for `n <= N`, together with
/// `λ^0 = 1` and `λ^1 = id`.
pub fn check_lambda_additivity<S: SigmaStructure>(
    s: &S,
    a: &<S::R as Ring>::Elem,
    b: &<S::R as Ring>::Elem,
    n: usize,
) -> Verdict {
    let r = s.ring();
    let sum = r.add(a, b);
    let lhs = s.lambda_t(&sum, n);
    let rhs = s.lambda_t(a, n).add(&s.lambda_t(b, n)).expect("same ring");
    let base = |x: &<S::R as Ring>::Elem| {
        let mut c = vec![r.one()];
        if n >= 1 {
            c.push(x.clone());
        }
        WittVec::from_coeffs(r.clone(), c, n.min(1)).expect("constant term 1")
    };
    let low = |x: &<S::R as Ring>::Elem| {
        let l = s.lambda_t(x, n);
        WittVec::from_coeffs(r.clone(), l.coeffs()[..=n.min(1)].to_vec(), n.min(1))
            .expect("constant term 1")
    };
    Verdict::all([
        Verdict::compare(&low(a), &base(a)),
        Verdict::compare(&low(b), &base(b)),
        Verdict::compare(&lhs, &rhs),
    ])
}

/// `σ_t(a + b) = σ_t(a) +_W σ_t(b)` and `σ_t(ab) = σ_t(a) ∗ σ_t(b)`.
pub fn check_sigma_ring_hom<S: SigmaStructure>(
    s: &S,
    a: &<S::R as Ring>::Elem,
    b: &<S::R as Ring>::Elem,
    n: usize,
) -> Result<Verdict> {
    let r = s.ring();
    if !r.is_torsion_free() {
        return Err(Error::TorsionUnsupported(r.tag().to_string()));
    }
    let (sa, sb) = (s.sigma_t(a, n), s.sigma_t(b, n));
    let additive = Verdict::compare(&s.sigma_t(&r.add(a, b), n), &sa.add(&sb)?);
    let multiplicative = Verdict::compare(&s.sigma_t(&r.mul(a, b), n), &sa.mul(&sb)?);
    Ok(Verdict::all([additive, multiplicative]))
}
