use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::variety::{Variety, VarietySpec};
use crate::error::{Error, Result};

/// A class known only through its measure values, e.g. `L` with
/// `{"euler": "1", "poincare": "u^2"}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymbolicAtom {
    pub symbol: String,
    pub values: BTreeMap<String, String>,
}

impl SymbolicAtom {
    pub fn new(symbol: impl Into<String>, values: &[(&str, &str)]) -> Self {
        SymbolicAtom {
            symbol: symbol.into(),
            values: values
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        }
    }

    /// The Lefschetz class `L = [A^1]`.
    pub fn lefschetz() -> Self {
        SymbolicAtom::new(
            "L",
            &[("euler", "1"), ("poincare", "u^2"), ("counting", "q")],
        )
    }

    pub fn value(&self, measure: &str) -> Result<&str> {
        self.values
            .get(measure)
            .map(String::as_str)
            .ok_or_else(|| Error::UnvaluedAtom {
                atom: self.symbol.clone(),
                measure: measure.to_string(),
            })
    }
}

/// `coeff · [X] · [S_1] ⋯ [S_r]`; symbols are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigInt,
    pub variety: Option<Variety>,
    pub symbols: Vec<SymbolicAtom>,
}

impl Term {
    fn same_monomial(&self, other: &Term) -> bool {
        self.variety == other.variety && self.symbols == other.symbols
    }

    fn mul(&self, other: &Term) -> Result<Term> {
        let variety = match (&self.variety, &other.variety) {
            (Some(a), Some(b)) => Some(a.product(b)?),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        let mut symbols = self.symbols.clone();
        symbols.extend(other.symbols.iter().cloned());
        symbols.sort();
        Ok(Term {
            coeff: &self.coeff * &other.coeff,
            variety,
            symbols,
        })
    }

    fn monomial_text(&self) -> Option<String> {
        let mut parts: Vec<String> = self.variety.iter().map(|v| format!("[{v}]")).collect();
        let mut i = 0;
        while i < self.symbols.len() {
            let s = &self.symbols[i];
            let run = self.symbols[i..].iter().take_while(|x| *x == s).count();
            parts.push(if run == 1 {
                format!("[{}]", s.symbol)
            } else {
                format!("[{}]^{run}", s.symbol)
            });
            i += run;
        }
        (!parts.is_empty()).then(|| parts.join("*"))
    }
}

/// A formal integer combination of products of atoms in `K_0(Var)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct K0Class {
    terms: Vec<Term>,
}

impl K0Class {
    pub fn zero() -> Self {
        K0Class::default()
    }

    /// The class of a point.
    pub fn one() -> Self {
        K0Class {
            terms: vec![Term {
                coeff: BigInt::one(),
                variety: None,
                symbols: Vec::new(),
            }],
        }
    }

    pub fn variety(v: Variety) -> Self {
        K0Class {
            terms: vec![Term {
                coeff: BigInt::one(),
                variety: Some(v),
                symbols: Vec::new(),
            }],
        }
    }

    pub fn symbol(s: SymbolicAtom) -> Self {
        K0Class {
            terms: vec![Term {
                coeff: BigInt::one(),
                variety: None,
                symbols: vec![s],
            }],
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    fn push(&mut self, t: Term) {
        if t.coeff.is_zero() {
            return;
        }
        if let Some(i) = self.terms.iter().position(|x| x.same_monomial(&t)) {
            self.terms[i].coeff += t.coeff;
            if self.terms[i].coeff.is_zero() {
                self.terms.remove(i);
            }
        } else {
            self.terms.push(t);
        }
    }

    pub fn add(&self, other: &K0Class) -> K0Class {
        let mut out = self.clone();
        for t in &other.terms {
            out.push(t.clone());
        }
        out
    }

    pub fn scale(&self, c: i64) -> K0Class {
        let mut out = K0Class::zero();
        for t in &self.terms {
            out.push(Term {
                coeff: &t.coeff * c,
                ..t.clone()
            });
        }
        out
    }

    pub fn neg(&self) -> K0Class {
        self.scale(-1)
    }

    pub fn sub(&self, other: &K0Class) -> K0Class {
        self.add(&other.neg())
    }

    /// Distributes over terms; products of varieties are fibre products over
    /// the base field.
    pub fn mul(&self, other: &K0Class) -> Result<K0Class> {
        let mut out = K0Class::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.push(a.mul(b)?);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<K0Class> {
        (0..n).try_fold(K0Class::one(), |acc, _| acc.mul(self))
    }

    /// The variety if the class is a single variety with coefficient 1. The
    /// point class counts as a variety.
    pub fn as_variety(&self) -> Option<Option<&Variety>> {
        match &self.terms[..] {
            [t] if t.coeff.is_one() && t.symbols.is_empty() => Some(t.variety.as_ref()),
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.abs();
            let body = match (mag.is_one(), t.monomial_text()) {
                (true, Some(m)) => m,
                (false, Some(m)) => format!("{mag}*{m}"),
                (_, None) => mag.to_string(),
            };
            match (i, t.coeff.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// JSON form of a class atom: either a variety object or
/// `{"symbol": "S", "values": {"euler": "-2"}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AtomSpec {
    Symbol(SymbolicAtom),
    Variety(VarietySpec),
}

impl AtomSpec {
    pub fn into_class(self) -> Result<K0Class> {
        Ok(match self {
            AtomSpec::Symbol(s) => K0Class::symbol(s),
            AtomSpec::Variety(v) => K0Class::variety(Variety::from_spec(&v)?),
        })
    }
}

pub fn parse_atom(src: &str) -> Result<K0Class> {
    let spec: AtomSpec =
        serde_json::from_str(src).map_err(|e| Error::Parse(format!("class JSON: {e}")))?;
    spec.into_class()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collects_like_terms() {
        let s = K0Class::symbol(SymbolicAtom::new("S", &[("euler", "-2")]));
        let c = K0Class::one().scale(2).sub(&s).add(&s.scale(3));
        assert_eq!(c.terms().len(), 2);
        assert_eq!(c.describe(), "2 + 2*[S]");
        assert_eq!(c.sub(&c), K0Class::zero());
    }

    #[test]
    fn products_distribute() {
        let l = K0Class::symbol(SymbolicAtom::lefschetz());
        let p2 = K0Class::one().add(&l).add(&l.pow(2).unwrap());
        assert_eq!(p2.describe(), "1 + [L] + [L]^2");
        let a = K0Class::variety(Variety::affine(2, 1, 1));
        let prod = a.mul(&a).unwrap();
        let v = prod.as_variety().unwrap().unwrap();
        assert_eq!(v.coords().nvars(), 2);
        assert_eq!(prod.describe(), "[A^1 x A^1]");
    }

    #[test]
    fn atoms_from_json() {
        let s = parse_atom(r#"{"symbol":"S","values":{"euler":"-2"}}"#).unwrap();
        assert_eq!(s.terms()[0].symbols[0].value("euler").unwrap(), "-2");
        assert!(matches!(
            s.terms()[0].symbols[0].value("poincare"),
            Err(Error::UnvaluedAtom { .. })
        ));
        let v = parse_atom(r#"{"p":2,"ambient":{"projective":1}}"#).unwrap();
        assert!(v.as_variety().unwrap().is_some());
    }
}
