//! Turning command-line strings into library values.

use std::path::Path;

use wittzeta::algebra::expr::{parse_in, variables};
use wittzeta::algebra::finite_field::is_prime;
use wittzeta::algebra::{Integers, MPoly, MultiPolyRing, Poly, PolyRing, Ring, TruncSeries};
use wittzeta::measures::{parse_atom, K0Class, Measure, SymbolicAtom, Variety};
use wittzeta::witt::{RatReduce, RatWitt, WittVec};
use wittzeta::{Error, Result};

/// Coefficient rings reachable from the command line: `Z`, or `Z[vars]` when
/// the inputs mention variables other than `t`.
pub trait Coefficients: Ring + RatReduce + wittzeta::algebra::IntegralDomain {
    fn lower(&self, p: &MPoly) -> Self::Elem;
}

impl Coefficients for Integers {
    fn lower(&self, p: &MPoly) -> Self::Elem {
        p.terms()
            .next()
            .map_or_else(|| self.zero(), |(_, c)| c.clone())
    }
}

impl Coefficients for MultiPolyRing {
    fn lower(&self, p: &MPoly) -> Self::Elem {
        p.clone()
    }
}

/// Every expression of one command, parsed over the union of its variables.
pub struct Exprs {
    full: MultiPolyRing,
    coeffs: MultiPolyRing,
    parsed: Vec<MPoly>,
}

impl Exprs {
    pub fn parse(srcs: &[&str]) -> Result<Self> {
        let mut vars = std::collections::BTreeSet::new();
        for s in srcs {
            vars.extend(variables(s)?);
        }
        vars.insert("t".to_string());
        let full = MultiPolyRing::new(vars.into_iter().collect());
        let parsed = srcs
            .iter()
            .map(|s| parse_in(s, &full))
            .collect::<Result<Vec<_>>>()?;
        let t = full.var_index("t").expect("t is always present");
        let (coeffs, _) = full.split_var(&full.zero(), t);
        Ok(Exprs {
            full,
            coeffs,
            parsed,
        })
    }

    /// The ring of `t`-coefficients, or `None` when it is `Z`.
    pub fn coefficient_ring(&self) -> Option<MultiPolyRing> {
        (self.coeffs.nvars() > 0).then(|| self.coeffs.clone())
    }

    /// Coefficients of `t^0, t^1, …` of expression `i`.
    fn t_coeffs<C: Coefficients>(&self, ring: &C, i: usize) -> Vec<C::Elem> {
        let t = self.full.var_index("t").expect("t is always present");
        let (_, cs) = self.full.split_var(&self.parsed[i], t);
        cs.iter().map(|c| ring.lower(c)).collect()
    }

    pub fn poly<C: Coefficients>(&self, ring: &C, i: usize) -> Poly<C::Elem> {
        PolyRing::new(ring.clone(), "t").poly(self.t_coeffs(ring, i))
    }

    /// A coefficient: expression `i` must not involve `t`.
    pub fn scalar<C: Coefficients>(&self, ring: &C, i: usize) -> Result<C::Elem> {
        let cs = self.t_coeffs(ring, i);
        if cs.len() > 1 {
            return Err(Error::Parse("expected an expression without t".into()));
        }
        Ok(cs.into_iter().next().unwrap_or_else(|| ring.zero()))
    }

    /// Expression `i` as a Witt vector at precision `n`, inverted if asked.
    pub fn witt<C: Coefficients>(
        &self,
        ring: &C,
        i: usize,
        invert: bool,
        n: usize,
    ) -> Result<WittVec<C>> {
        let g = WittVec::new(TruncSeries::new(ring.clone(), self.t_coeffs(ring, i), n))?;
        Ok(if invert { g.neg() } else { g })
    }
}

/// Splits `"(num)/(den)"` at its top-level slash; a lone polynomial has
/// denominator 1.
pub fn split_fraction(src: &str) -> Result<(String, String)> {
    let mut depth = 0i32;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Ok((src[..i].to_string(), src[i + 1..].to_string())),
            _ => {}
        }
    }
    Ok((src.to_string(), "1".to_string()))
}

pub fn rat_witt<C: Coefficients>(
    ex: &Exprs,
    ring: &C,
    num: usize,
    den: usize,
) -> Result<RatWitt<C>> {
    RatWitt::new(ring.clone(), ex.poly(ring, num), ex.poly(ring, den))
}

/// `q = p^k` with `p` prime.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    let p = (2..=q)
        .find(|d| q.is_multiple_of(*d))
        .ok_or(Error::NotPrime(q))?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    if r != 1 || !is_prime(p) {
        return Err(Error::Parse(format!("{q} is not a prime power")));
    }
    Ok((p, k))
}

/// File contents if `arg` names a file, else `arg` itself.
pub fn load(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('{') && path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

/// A class argument: JSON (inline or in a file) or one of the names
/// `pt`, `L`, `gm`, `a<n>`, `p<n>`.
pub enum ClassArg {
    Json(K0Class),
    Named(String),
}

impl ClassArg {
    pub fn parse(arg: &str) -> Result<Self> {
        let src = load(arg)?;
        if src.trim_start().starts_with('{') {
            Ok(ClassArg::Json(parse_atom(&src)?))
        } else {
            Ok(ClassArg::Named(src.trim().to_string()))
        }
    }

    /// The field of a variety given as JSON.
    pub fn field(&self) -> Option<(u64, u32)> {
        match self {
            ClassArg::Json(c) => match c.as_variety() {
                Some(Some(v)) => Some((v.characteristic(), v.degree())),
                _ => None,
            },
            ClassArg::Named(_) => None,
        }
    }

    pub fn resolve<M: Measure>(&self, mu: &M, field: Option<(u64, u32)>) -> Result<K0Class> {
        match self {
            ClassArg::Json(c) => match (c.as_variety(), field) {
                (Some(Some(v)), Some((p, k))) => Ok(K0Class::variety(v.with_field(p, k)?)),
                _ => Ok(c.clone()),
            },
            ClassArg::Named(name) => named_class(mu, name),
        }
    }
}

fn named_class<M: Measure>(mu: &M, name: &str) -> Result<K0Class> {
    let dim = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("unknown class {name:?}")))
    };
    match name {
        "pt" => Ok(K0Class::one()),
        "L" => Ok(mu.affine_space(1)),
        "gm" => Ok(match mu.affine_space(1).as_variety() {
            Some(Some(a1)) => K0Class::variety(Variety::gm(a1.characteristic(), a1.degree())),
            _ => K0Class::symbol(SymbolicAtom::lefschetz()).sub(&K0Class::one()),
        }),
        _ if name.starts_with('a') => Ok(mu.affine_space(dim(&name[1..])?)),
        _ if name.starts_with('p') => Ok(mu.projective_space(dim(&name[1..])?)),
        _ => Err(Error::Parse(format!("unknown class {name:?}"))),
    }
}
