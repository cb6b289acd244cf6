use num_bigint::BigInt;

use super::census::sym_product_counts;
use super::count::count_points;
use super::k0::{K0Class, SymbolicAtom};
use super::variety::Variety;
use crate::algebra::expr::{parse_in, parse_integer};
use crate::algebra::{Integers, IntegralDomain, MultiPolyRing, Poly, PolyRing, Ring};
use crate::error::{Error, Result};
use crate::lambda::{BinomialZ, PlethysticZu, SigmaStructure};
use crate::witt::{RatReduce, WittVec};

/// How a measure evaluates symmetric powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymPolicy {
    /// Count effective zero-cycles through the closed-point census.
    Census,
    /// `µ([S^n X]) = σ^n(µ([X]))` for a σ-structure on the target.
    Sigma,
}

/// A ring homomorphism `µ: K_0(Var) → R` on the classes it can evaluate.
pub trait Measure {
    type R: IntegralDomain + RatReduce;

    fn name(&self) -> &'static str;

    fn ring(&self) -> &Self::R;

    fn policy(&self) -> SymPolicy;

    fn value_variety(&self, v: &Variety) -> Result<<Self::R as Ring>::Elem>;

    fn value_symbol(&self, s: &SymbolicAtom) -> Result<<Self::R as Ring>::Elem>;

    /// The class used for `A^n`.
    fn affine_space(&self, n: usize) -> K0Class;

    /// The class used for `P^n`.
    fn projective_space(&self, n: usize) -> K0Class;

    /// `Σ µ([S^n X]) t^n` up to `t^n`.
    fn zeta_of(&self, c: &K0Class, n: usize) -> Result<WittVec<Self::R>>;
}

/// `µ` extended additively and multiplicatively over the combination.
pub fn measure_value<M: Measure>(mu: &M, c: &K0Class) -> Result<<M::R as Ring>::Elem> {
    let r = mu.ring();
    let mut acc = r.zero();
    for t in c.terms() {
        let mut v = r.from_bigint(&t.coeff);
        if let Some(x) = &t.variety {
            v = r.mul(&v, &mu.value_variety(x)?);
        }
        for s in &t.symbols {
            v = r.mul(&v, &mu.value_symbol(s)?);
        }
        acc = r.add(&acc, &v);
    }
    Ok(acc)
}

/// `µ(L)`.
pub fn lefschetz_value<M: Measure>(mu: &M) -> Result<<M::R as Ring>::Elem> {
    measure_value(mu, &mu.affine_space(1))
}

fn sum_of_powers(n: usize) -> K0Class {
    let l = K0Class::symbol(SymbolicAtom::lefschetz());
    (0..=n as u32).fold(K0Class::zero(), |acc, i| {
        acc.add(&l.pow(i).expect("symbols multiply"))
    })
}

/// Evaluates an integer expression in the single optional variable `var`.
fn eval_integer(src: &str, var: &str, value: &BigInt) -> Result<BigInt> {
    let ring = MultiPolyRing::new(vec![var.to_string()]);
    let p = parse_in(src, &ring)?;
    Ok(p.terms()
        .map(|(m, c)| c * num_traits::pow(value.clone(), m[0] as usize))
        .sum())
}

/// `µ_#`: number of `F_q`-points, with symmetric powers counted through the
/// closed-point census.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountingMeasure {
    pub p: u64,
    pub k: u32,
}

impl CountingMeasure {
    pub fn new(p: u64, k: u32) -> Self {
        CountingMeasure { p, k }
    }

    pub fn q(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.p), self.k as usize)
    }

    fn check_field(&self, v: &Variety) -> Result<()> {
        if (v.characteristic(), v.degree()) != (self.p, self.k) {
            return Err(Error::InvalidVariety(format!(
                "{v} is not defined over F_{}^{}",
                self.p, self.k
            )));
        }
        Ok(())
    }
}

impl Measure for CountingMeasure {
    type R = Integers;

    fn name(&self) -> &'static str {
        "counting"
    }

    fn ring(&self) -> &Integers {
        &Integers
    }

    fn policy(&self) -> SymPolicy {
        SymPolicy::Census
    }

    fn value_variety(&self, v: &Variety) -> Result<BigInt> {
        self.check_field(v)?;
        count_points(v, 1)
    }

    fn value_symbol(&self, s: &SymbolicAtom) -> Result<BigInt> {
        eval_integer(s.value(self.name())?, "q", &self.q())
    }

    fn affine_space(&self, n: usize) -> K0Class {
        K0Class::variety(Variety::affine(self.p, self.k, n))
    }

    fn projective_space(&self, n: usize) -> K0Class {
        K0Class::variety(Variety::projective(self.p, self.k, n))
    }

    fn zeta_of(&self, c: &K0Class, n: usize) -> Result<WittVec<Integers>> {
        let v = match c.as_variety() {
            Some(Some(v)) => v.clone(),
            Some(None) => Variety::point(self.p, self.k),
            None => {
                return Err(Error::UnsupportedClass(format!(
                    "symmetric powers of {c} under the census policy"
                )))
            }
        };
        self.check_field(&v)?;
        WittVec::from_coeffs(Integers, sym_product_counts(&v, n)?, n)
    }
}

/// Compactly supported Euler characteristic, `σ_t(χ) = (1 - t)^{-χ}`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EulerMeasure;

impl Measure for EulerMeasure {
    type R = Integers;

    fn name(&self) -> &'static str {
        "euler"
    }

    fn ring(&self) -> &Integers {
        &Integers
    }

    fn policy(&self) -> SymPolicy {
        SymPolicy::Sigma
    }

    fn value_variety(&self, v: &Variety) -> Result<BigInt> {
        Err(Error::UnvaluedAtom {
            atom: v.describe(),
            measure: self.name().into(),
        })
    }

    fn value_symbol(&self, s: &SymbolicAtom) -> Result<BigInt> {
        parse_integer(s.value(self.name())?)
    }

    fn affine_space(&self, n: usize) -> K0Class {
        K0Class::symbol(SymbolicAtom::lefschetz())
            .pow(n as u32)
            .expect("symbols multiply")
    }

    fn projective_space(&self, n: usize) -> K0Class {
        sum_of_powers(n)
    }

    fn zeta_of(&self, c: &K0Class, n: usize) -> Result<WittVec<Integers>> {
        Ok(BinomialZ.sigma_t(&measure_value(self, c)?, n))
    }
}

/// Virtual Poincaré polynomial in `Z[u]`, with plethystic σ-operations.
#[derive(Debug, Clone, Default)]
pub struct PoincareMeasure {
    sigma: PlethysticZu,
}

impl Measure for PoincareMeasure {
    type R = PolyRing<Integers>;

    fn name(&self) -> &'static str {
        "poincare"
    }

    fn ring(&self) -> &PolyRing<Integers> {
        self.sigma.ring()
    }

    fn policy(&self) -> SymPolicy {
        SymPolicy::Sigma
    }

    fn value_variety(&self, v: &Variety) -> Result<Poly<BigInt>> {
        Err(Error::UnvaluedAtom {
            atom: v.describe(),
            measure: self.name().into(),
        })
    }

    fn value_symbol(&self, s: &SymbolicAtom) -> Result<Poly<BigInt>> {
        let ring = MultiPolyRing::new(vec!["u".into()]);
        let p = parse_in(s.value(self.name())?, &ring)?;
        let deg = p.degree_in(0) as usize;
        let mut coeffs = vec![BigInt::from(0); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m[0] as usize] = c.clone();
        }
        Ok(self.ring().poly(coeffs))
    }

    fn affine_space(&self, n: usize) -> K0Class {
        K0Class::symbol(SymbolicAtom::lefschetz())
            .pow(n as u32)
            .expect("symbols multiply")
    }

    fn projective_space(&self, n: usize) -> K0Class {
        sum_of_powers(n)
    }

    fn zeta_of(&self, c: &K0Class, n: usize) -> Result<WittVec<PolyRing<Integers>>> {
        Ok(self.sigma.sigma_t(&measure_value(self, c)?, n))
    }
}
