//! Sparse multivariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::expr::{join_terms, power_text, TermText};
use super::{IntegralDomain, Ring, RingTag};
use crate::error::{Error, Result};

/// Exponent vector, one entry per ring variable.
pub type Monomial = Vec<u32>;

/// A polynomial as a map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Largest exponent of variable `i` across all terms.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m[i]).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = MPoly::default();
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "exponent vector length");
            p.add_term(m, c);
        }
        p
    }
}

/// Graded-lex comparison: total degree first, then lexicographic with the
/// first variable most significant.
fn grlex(a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// `Z[x_1, …, x_n]` with named variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPolyRing {
    vars: Arc<[String]>,
}

impl MultiPolyRing {
    pub fn new(vars: Vec<String>) -> Self {
        MultiPolyRing {
            vars: Arc::from(vars),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, name: &str) -> Option<MPoly> {
        let i = self.var_index(name)?;
        let mut m = vec![0; self.nvars()];
        m[i] = 1;
        Some(MPoly::from_terms(self.nvars(), [(m, BigInt::one())]))
    }

    pub fn monomial(&self, m: Monomial, c: BigInt) -> MPoly {
        MPoly::from_terms(self.nvars(), [(m, c)])
    }

    /// Re-expresses `p` over a ring whose variables include all of ours.
    pub fn embed_into(&self, target: &MultiPolyRing, p: &MPoly) -> Option<MPoly> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.var_index(v))
            .collect::<Option<_>>()?;
        Some(MPoly::from_terms(
            target.nvars(),
            p.terms.iter().map(|(m, c)| {
                let mut e = vec![0; target.nvars()];
                for (i, &k) in m.iter().enumerate() {
                    e[map[i]] = k;
                }
                (e, c.clone())
            }),
        ))
    }

    /// Splits `p` by powers of variable `i`: returns coefficients of
    /// `x_i^0, x_i^1, …` as polynomials in the remaining variables.
    pub fn split_var(&self, p: &MPoly, i: usize) -> (MultiPolyRing, Vec<MPoly>) {
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let sub = MultiPolyRing::new(rest);
        let deg = p.degree_in(i) as usize;
        let mut out = vec![MPoly::default(); if p.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &p.terms {
            let mut e = m.clone();
            let k = e.remove(i) as usize;
            out[k].add_term(e, c.clone());
        }
        (sub, out)
    }

    fn leading_term<'a>(&self, p: &'a MPoly) -> Option<(&'a Monomial, &'a BigInt)> {
        p.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }
}

impl Ring for MultiPolyRing {
    type Elem = MPoly;

    fn tag(&self) -> RingTag {
        RingTag::MultiPoly(self.vars.to_vec())
    }

    fn zero(&self) -> MPoly {
        MPoly::default()
    }

    fn one(&self) -> MPoly {
        self.monomial(vec![0; self.nvars()], BigInt::one())
    }

    fn from_bigint(&self, n: &BigInt) -> MPoly {
        self.monomial(vec![0; self.nvars()], n.clone())
    }

    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut out = a.clone();
        for (m, c) in &b.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &MPoly) -> MPoly {
        MPoly {
            terms: a.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    fn is_zero(&self, a: &MPoly) -> bool {
        a.is_zero()
    }

    fn unit_inverse(&self, a: &MPoly) -> Option<MPoly> {
        let (m, c) = a.terms.iter().next()?;
        (a.terms.len() == 1 && m.iter().all(|&e| e == 0) && c.abs().is_one()).then(|| a.clone())
    }

    fn is_torsion_free(&self) -> bool {
        true
    }

    fn div_by_int(&self, a: &MPoly, n: u64) -> Result<MPoly> {
        let n = BigInt::from(n);
        let mut out = MPoly::default();
        for (m, c) in &a.terms {
            let (q, r) = c.div_rem(&n);
            if !r.is_zero() {
                return Err(Error::NonIntegral(format!("({})/{n}", self.render(a))));
            }
            out.terms.insert(m.clone(), q);
        }
        Ok(out)
    }

    fn render(&self, a: &MPoly) -> String {
        let mut terms: Vec<(&Monomial, &BigInt)> = a.terms.iter().collect();
        // increasing total degree; within a degree, earlier variables first
        terms.sort_by(|x, y| {
            let dx: u32 = x.0.iter().sum();
            let dy: u32 = y.0.iter().sum();
            dx.cmp(&dy).then_with(|| y.0.cmp(x.0))
        });
        let texts: Vec<TermText> = terms
            .into_iter()
            .map(|(m, c)| {
                let monomial = self.monomial_text(m);
                let mag = c.abs();
                let coeff = if mag.is_one() && monomial.is_some() {
                    None
                } else {
                    Some(mag.to_string())
                };
                TermText {
                    negative: c.is_negative(),
                    coeff,
                    monomial,
                }
            })
            .collect();
        join_terms(&texts)
    }

    fn render_coeff(&self, a: &MPoly) -> (bool, Option<String>) {
        if a.terms.len() == 1 {
            let (m, c) = a.terms.iter().next().unwrap();
            let monomial = self.monomial_text(m);
            let mag = c.abs();
            let text = match (mag.is_one(), monomial) {
                (true, None) => None,
                (true, Some(mt)) => Some(mt),
                (false, None) => Some(mag.to_string()),
                (false, Some(mt)) => Some(format!("{mag}*{mt}")),
            };
            return (c.is_negative(), text);
        }
        (false, Some(format!("({})", self.render(a))))
    }
}

impl MultiPolyRing {
    fn monomial_text(&self, m: &Monomial) -> Option<String> {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| power_text(&self.vars[i], e as usize))
            .collect();
        (!parts.is_empty()).then(|| parts.join("*"))
    }
}

impl IntegralDomain for MultiPolyRing {
    /// Division by repeatedly cancelling the graded-lex leading term.
    fn exact_div(&self, a: &MPoly, b: &MPoly) -> Option<MPoly> {
        if b.is_zero() {
            return a.is_zero().then(MPoly::default);
        }
        let (lm_b, lc_b) = self.leading_term(b)?;
        let (lm_b, lc_b) = (lm_b.clone(), lc_b.clone());
        let mut rem = a.clone();
        let mut quot = MPoly::default();
        while let Some((lm, lc)) = self.leading_term(&rem) {
            if lm.iter().zip(&lm_b).any(|(x, y)| x < y) {
                return None;
            }
            let (q, r) = lc.div_rem(&lc_b);
            if !r.is_zero() {
                return None;
            }
            let m: Monomial = lm.iter().zip(&lm_b).map(|(x, y)| x - y).collect();
            let t = self.monomial(m.clone(), q.clone());
            rem = self.sub(&rem, &self.mul(&t, b));
            quot.add_term(m, q);
        }
        Some(quot)
    }
}
