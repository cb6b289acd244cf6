//! Kapranov zeta functions `ζ_µ(X; t) = Σ µ([S^n X]) t^n` and checkers for
//! the identities they satisfy in the Witt ring.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{Integers, Poly, Ring, TruncSeries};
use crate::error::{Error, Result};
use crate::measures::{lefschetz_value, CountingMeasure, K0Class, Measure, Variety};
use crate::verdict::Verdict;
use crate::witt::{rationalize, witt_sum, GhostVector, RatWitt, WittVec};

/// A zeta series together with what it is the zeta function of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaSeries<R: Ring> {
    pub series: WittVec<R>,
    pub measure: String,
    pub class: String,
}

impl<R: Ring> ZetaSeries<R> {
    pub fn precision(&self) -> usize {
        self.series.precision()
    }
}

impl<R: Ring> fmt::Display for ZetaSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.series.render())
    }
}

pub fn kapranov_zeta<M: Measure>(mu: &M, c: &K0Class, n: usize) -> Result<ZetaSeries<M::R>> {
    Ok(ZetaSeries {
        series: mu.zeta_of(c, n)?,
        measure: mu.name().to_string(),
        class: c.describe(),
    })
}

/// The classical zeta function `exp(Σ N_m t^m / m)`, via symmetric products.
pub fn weil_zeta(v: &Variety, n: usize) -> Result<WittVec<Integers>> {
    CountingMeasure::new(v.characteristic(), v.degree()).zeta_of(&K0Class::variety(v.clone()), n)
}

/// The same series from the counts alone: `N_m` are its ghost coordinates.
pub fn weil_zeta_from_counts(counts: &[BigInt]) -> Result<WittVec<Integers>> {
    WittVec::from_ghost(&GhostVector::new(Integers, counts.to_vec()))
}

/// `ζ(X·Y) = ζ(X) ∗ ζ(Y)`.
pub fn check_exponentiation<M: Measure>(
    mu: &M,
    x: &K0Class,
    y: &K0Class,
    n: usize,
) -> Result<Verdict> {
    let lhs = mu.zeta_of(&x.mul(y)?, n)?;
    let rhs = mu.zeta_of(x, n)?.mul(&mu.zeta_of(y, n)?)?;
    Ok(Verdict::compare(&lhs, &rhs))
}

fn lefschetz_power<M: Measure>(mu: &M, k: usize) -> Result<<M::R as Ring>::Elem> {
    Ok(mu.ring().pow(&lefschetz_value(mu)?, k as u64))
}

/// `ζ(X × A^k; t) = ζ(X; µ(L)^k t)`.
pub fn totaro_check<M: Measure>(mu: &M, x: &K0Class, k: usize, n: usize) -> Result<Verdict> {
    let lhs = mu.zeta_of(&x.mul(&mu.affine_space(k))?, n)?;
    let rhs = mu.zeta_of(x, n)?.twist(&lefschetz_power(mu, k)?);
    Ok(Verdict::compare(&lhs, &rhs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceLink {
    pub claim: String,
    pub verdict: Verdict,
}

/// Each step of the chain
/// `ζ(X×A^k) = ζ(X)∗ζ(L^k) = ζ(X)∗ζ(L)^{∗k} = ζ(X)∗[µ(L)]^{∗k} = ζ(X)∗[µ(L)^k] = ζ(X; µ(L)^k t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofTrace {
    pub links: Vec<TraceLink>,
}

impl ProofTrace {
    pub fn holds(&self) -> bool {
        self.links.iter().all(|l| l.verdict.holds)
    }
}

impl fmt::Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.links.iter().enumerate() {
            writeln!(f, "{}. {}: {}", i + 1, l.claim, l.verdict)?;
        }
        Ok(())
    }
}

pub fn totaro_proof_trace<M: Measure>(
    mu: &M,
    x: &K0Class,
    k: usize,
    n: usize,
) -> Result<ProofTrace> {
    let r = mu.ring().clone();
    let l = lefschetz_value(mu)?;
    let lk = lefschetz_power(mu, k)?;
    let zx = mu.zeta_of(x, n)?;
    let direct = mu.zeta_of(&x.mul(&mu.affine_space(k))?, n)?;
    let s1 = zx.mul(&mu.zeta_of(&mu.affine_space(k), n)?)?;
    let s2 = zx.mul(&mu.zeta_of(&mu.affine_space(1), n)?.mul_pow(k as u32)?)?;
    let s3 = zx.mul(&WittVec::teichmuller(r.clone(), &l, n).mul_pow(k as u32)?)?;
    let s4 = zx.mul(&WittVec::teichmuller(r, &lk, n))?;
    let s5 = zx.twist(&lk);
    let steps = [
        (
            format!("zeta(X x A^{k}) = zeta(X) * zeta(L^{k})"),
            &direct,
            &s1,
        ),
        (
            format!("zeta(X) * zeta(L^{k}) = zeta(X) * zeta(L)^{{*{k}}}"),
            &s1,
            &s2,
        ),
        (
            format!("zeta(X) * zeta(L)^{{*{k}}} = zeta(X) * [mu(L)]^{{*{k}}}"),
            &s2,
            &s3,
        ),
        (
            format!("zeta(X) * [mu(L)]^{{*{k}}} = zeta(X) * [mu(L)^{k}]"),
            &s3,
            &s4,
        ),
        (
            format!("zeta(X) * [mu(L)^{k}] = zeta(X; mu(L)^{k} t)"),
            &s4,
            &s5,
        ),
    ];
    Ok(ProofTrace {
        links: steps
            .into_iter()
            .map(|(claim, a, b)| TraceLink {
                claim,
                verdict: Verdict::compare(a, b),
            })
            .collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BundleKind {
    /// `E = X × A^k`.
    Fiber,
    /// `E = X × P^k`.
    Projective,
}

/// Fiber: `ζ(X × A^k) = ζ(X; µ(L)^k t)`.
/// Projective: `ζ(X × P^k) = ζ(X; t) +_W ζ(X; µ(L) t) +_W ⋯ +_W ζ(X; µ(L)^k t)`.
pub fn bundle_zeta_check<M: Measure>(
    mu: &M,
    x: &K0Class,
    k: usize,
    n: usize,
    kind: BundleKind,
) -> Result<Verdict> {
    let zx = mu.zeta_of(x, n)?;
    match kind {
        BundleKind::Fiber => {
            let lhs = mu.zeta_of(&x.mul(&mu.affine_space(k))?, n)?;
            Ok(Verdict::compare(&lhs, &zx.twist(&lefschetz_power(mu, k)?)))
        }
        BundleKind::Projective => {
            let lhs = mu.zeta_of(&x.mul(&mu.projective_space(k))?, n)?;
            let twists = (0..=k)
                .map(|i| Ok(zx.twist(&lefschetz_power(mu, i)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Verdict::compare(&lhs, &witt_sum(&twists)?))
        }
    }
}

/// Reconstructs `ζ(X)` and `ζ(Y)` as rational functions, multiplies them
/// with the resultant formula and confirms the result against `ζ(X·Y)`.
pub fn product_rationality<M: Measure>(
    mu: &M,
    x: &K0Class,
    y: &K0Class,
    dmax: usize,
    n: usize,
) -> Result<RatWitt<M::R>> {
    let rx = rationalize(&mu.zeta_of(x, n)?, dmax)?.ok_or(Error::NotRationalAtBound { dmax })?;
    let ry = rationalize(&mu.zeta_of(y, n)?, dmax)?.ok_or(Error::NotRationalAtBound { dmax })?;
    let prod = rx.mul(&ry)?;
    let direct = mu.zeta_of(&x.mul(y)?, n)?;
    let v = Verdict::compare(&prod.expand(n), &direct);
    if !v.holds {
        return Err(Error::IdentityFailed(v.to_string()));
    }
    Ok(prod)
}

/// `g ∗ (P · (1 - s t)^{-1}) = g(s t) +_W (g ∗ P)`.
pub fn g_witt_identity_check<R: Ring>(
    g: &WittVec<R>,
    s: &R::Elem,
    p: &Poly<R::Elem>,
    n: usize,
) -> Result<Verdict> {
    let r = g.ring();
    let pw = WittVec::new(TruncSeries::from_poly(r.clone(), p, n))?;
    let geo = WittVec::teichmuller(r.clone(), s, n);
    let lhs = g.mul(&pw.add(&geo)?)?;
    let rhs = g.twist(s).add(&g.mul(&pw)?)?;
    Ok(Verdict::compare(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::expr::parse_in;
    use crate::algebra::{MultiPolyRing, PolyRing};
    use crate::measures::{EulerMeasure, PoincareMeasure, SymbolicAtom};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn zw(c: &[i64], n: usize) -> WittVec<Integers> {
        WittVec::from_coeffs(Integers, ints(c), n).unwrap()
    }

    fn sym(name: &str, euler: &str, poincare: &str) -> K0Class {
        K0Class::symbol(SymbolicAtom::new(
            name,
            &[("euler", euler), ("poincare", poincare)],
        ))
    }

    #[test]
    fn zeta_examples() {
        let mu = CountingMeasure::new(3, 1);
        let z = kapranov_zeta(&mu, &mu.affine_space(1), 5).unwrap();
        assert_eq!(
            z.series,
            WittVec::teichmuller(Integers, &BigInt::from(3), 5)
        );
        let z = kapranov_zeta(&EulerMeasure, &sym("X", "2", "1"), 5).unwrap();
        assert_eq!(z.series, zw(&[1, 2, 3, 4, 5, 6], 5));
        let pm = PoincareMeasure::default();
        let z = kapranov_zeta(&pm, &pm.projective_space(1), 6).unwrap();
        let r = pm.ring().clone();
        let expected = RatWitt::new(
            r.clone(),
            PolyRing::new(r.clone(), "t").one(),
            PolyRing::new(r.clone(), "t").poly(vec![
                r.one(),
                r.from_ints(&[-1, 0, -1]),
                r.from_ints(&[0, 0, 1]),
            ]),
        )
        .unwrap()
        .expand(6);
        assert_eq!(z.series, expected);
    }

    #[test]
    fn weil_zeta_two_ways() {
        let e = Variety::from_json(
            r#"{"p":5,"ambient":{"projective":2},"equations":["y^2*z - x^3 - x*z^2 - z^3"]}"#,
        )
        .unwrap();
        let z = weil_zeta(&e, 4).unwrap();
        assert_eq!(z, zw(&[1, 9, 54, 279, 1404], 4));
        let counts = crate::measures::point_counts(&e, 4).unwrap();
        assert_eq!(weil_zeta_from_counts(&counts).unwrap(), z);
    }

    #[test]
    fn exponentiation_examples() {
        let mu = CountingMeasure::new(2, 1);
        let p1 = mu.projective_space(1);
        assert!(check_exponentiation(&mu, &p1, &p1, 6).unwrap().holds);
        assert!(
            check_exponentiation(&mu, &K0Class::one(), &p1, 6)
                .unwrap()
                .holds
        );
        let (a, b) = (sym("A", "-2", "1"), sym("B", "3", "1"));
        assert!(
            check_exponentiation(&EulerMeasure, &a, &b, 8)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn totaro_examples() {
        let mu = CountingMeasure::new(2, 1);
        let p1 = mu.projective_space(1);
        assert!(totaro_check(&mu, &p1, 1, 6).unwrap().holds);
        assert!(totaro_check(&mu, &p1, 0, 6).unwrap().holds);
        assert!(
            totaro_check(&EulerMeasure, &sym("X", "5", "1"), 2, 6)
                .unwrap()
                .holds
        );
        let mu3 = CountingMeasure::new(3, 1);
        let trace = totaro_proof_trace(&mu3, &mu3.projective_space(1), 2, 6).unwrap();
        assert_eq!(trace.links.len(), 5);
        assert!(trace.holds(), "{trace}");
    }

    #[test]
    fn bundle_examples() {
        let mu = CountingMeasure::new(2, 1);
        let p1 = mu.projective_space(1);
        for kind in [BundleKind::Fiber, BundleKind::Projective] {
            assert!(bundle_zeta_check(&mu, &p1, 1, 6, kind).unwrap().holds);
            assert!(bundle_zeta_check(&mu, &p1, 0, 6, kind).unwrap().holds);
        }
        let x = sym("X", "-3", "1 - 2*u + u^2");
        assert!(
            bundle_zeta_check(&EulerMeasure, &x, 2, 6, BundleKind::Projective)
                .unwrap()
                .holds
        );
        let pm = PoincareMeasure::default();
        assert!(
            bundle_zeta_check(&pm, &x, 2, 6, BundleKind::Projective)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn rationality_examples() {
        let mu = CountingMeasure::new(2, 1);
        let p1 = mu.projective_space(1);
        let r = product_rationality(&mu, &p1, &p1, 2, 10).unwrap();
        let zt = PolyRing::new(Integers, "t");
        let den = [&[1, -1][..], &[1, -2], &[1, -2], &[1, -4]]
            .iter()
            .fold(zt.one(), |acc, f| zt.mul(&acc, &zt.from_ints(f)));
        assert_eq!(r, RatWitt::new(Integers, zt.one(), den).unwrap());
        let r = product_rationality(
            &EulerMeasure,
            &sym("A", "2", "1"),
            &sym("B", "3", "1"),
            3,
            10,
        )
        .unwrap();
        assert_eq!(
            r,
            RatWitt::from_ints(Integers, &[1], &[1, -6, 15, -20, 15, -6, 1]).unwrap()
        );
    }

    #[test]
    fn g_identity_examples() {
        let r = MultiPolyRing::new(vec!["a".into(), "b".into(), "s".into()]);
        let g = WittVec::new(TruncSeries::new(
            r.clone(),
            vec![
                r.one(),
                parse_in("a + b", &r).unwrap(),
                parse_in("a*b - 1", &r).unwrap(),
            ],
            6,
        ))
        .unwrap();
        let s = parse_in("s", &r).unwrap();
        let pr = PolyRing::new(r.clone(), "t");
        let p = pr.poly(vec![
            r.one(),
            parse_in("b", &r).unwrap(),
            parse_in("-a", &r).unwrap(),
        ]);
        assert!(g_witt_identity_check(&g, &s, &p, 6).unwrap().holds);
        assert!(g_witt_identity_check(&g, &s, &pr.one(), 6).unwrap().holds);
        assert!(g_witt_identity_check(&g, &r.zero(), &p, 6).unwrap().holds);
    }
}
