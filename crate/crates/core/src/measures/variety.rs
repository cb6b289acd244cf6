use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::expr::{parse_in, variables};
use crate::algebra::finite_field::is_prime;
use crate::algebra::{MPoly, MultiPolyRing, Ring};
use crate::error::{Error, Result};

/// One factor of the ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Block {
    Affine(usize),
    Projective(usize),
}

impl Block {
    /// Number of coordinates (homogeneous ones for projective blocks).
    pub fn coords(self) -> usize {
        match self {
            Block::Affine(n) => n,
            Block::Projective(n) => n + 1,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Block::Affine(n) | Block::Projective(n) => n,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Affine(n) => write!(f, "A^{n}"),
            Block::Projective(n) => write!(f, "P^{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ambient {
    Single(Block),
    Product(Vec<Block>),
}

/// JSON form of a variety:
/// `{"p":3,"k":1,"ambient":{"affine":2},"equations":["x^2+y^2-1"]}`.
///
/// `ambient` may also be a list of blocks for a product of spaces. Without
/// `vars`, coordinates are named by the sorted variables of the equations,
/// padded with fresh names if the equations use fewer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub p: u64,
    #[serde(default = "default_k")]
    pub k: u32,
    pub ambient: Ambient,
    #[serde(default)]
    pub equations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
}

fn default_k() -> u32 {
    1
}

/// A variety over `F_{p^k}` cut out by integer equations in a product of
/// affine and projective spaces. Only its rational points over extensions
/// are modelled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variety {
    name: Option<String>,
    p: u64,
    k: u32,
    blocks: Vec<Block>,
    coords: MultiPolyRing,
    equations: Vec<MPoly>,
}

fn fresh_name(taken: &BTreeSet<String>, stem: &str) -> String {
    (0..)
        .map(|i| format!("{stem}{i}"))
        .find(|s| !taken.contains(s))
        .expect("unbounded supply of names")
}

impl Variety {
    pub fn from_spec(spec: &VarietySpec) -> Result<Self> {
        let blocks = match &spec.ambient {
            Ambient::Single(b) => vec![*b],
            Ambient::Product(bs) => bs.clone(),
        };
        let ncoords: usize = blocks.iter().map(|b| b.coords()).sum();
        let vars = match &spec.vars {
            Some(v) => {
                if v.len() != ncoords {
                    return Err(Error::InvalidVariety(format!(
                        "{} variable names for {ncoords} coordinates",
                        v.len()
                    )));
                }
                if v.iter().collect::<BTreeSet<_>>().len() != v.len() {
                    return Err(Error::InvalidVariety("repeated variable name".into()));
                }
                v.clone()
            }
            None => {
                let mut used = BTreeSet::new();
                for e in &spec.equations {
                    used.extend(variables(e)?);
                }
                if used.len() > ncoords {
                    return Err(Error::InvalidVariety(format!(
                        "equations use {} variables but the ambient space has {ncoords} coordinates",
                        used.len()
                    )));
                }
                let mut v: Vec<String> = used.iter().cloned().collect();
                while v.len() < ncoords {
                    let name = fresh_name(&used, "x");
                    used.insert(name.clone());
                    v.push(name);
                }
                v
            }
        };
        let coords = MultiPolyRing::new(vars);
        let equations = spec
            .equations
            .iter()
            .map(|e| parse_in(e, &coords))
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec.name.clone(), spec.p, spec.k, blocks, coords, equations)
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let spec: VarietySpec =
            serde_json::from_str(src).map_err(|e| Error::Parse(format!("variety JSON: {e}")))?;
        Self::from_spec(&spec)
    }

    /// Validates the field, the coordinate count and homogeneity in every
    /// projective block.
    pub fn new(
        name: Option<String>,
        p: u64,
        k: u32,
        blocks: Vec<Block>,
        coords: MultiPolyRing,
        equations: Vec<MPoly>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::DegreeZero);
        }
        let ncoords: usize = blocks.iter().map(|b| b.coords()).sum();
        if coords.nvars() != ncoords {
            return Err(Error::InvalidVariety(format!(
                "{} coordinates for ambient of {ncoords}",
                coords.nvars()
            )));
        }
        let v = Variety {
            name,
            p,
            k,
            blocks,
            coords,
            equations,
        };
        for (bi, b) in v.blocks.iter().enumerate() {
            if let Block::Projective(_) = b {
                let range = v.block_range(bi);
                for e in &v.equations {
                    let degs: BTreeSet<u32> = e
                        .terms()
                        .map(|(m, _)| m[range.clone()].iter().sum())
                        .collect();
                    if degs.len() > 1 {
                        return Err(Error::InvalidVariety(format!(
                            "{} is not homogeneous in the coordinates of {b}",
                            v.coords.render(e)
                        )));
                    }
                }
            }
        }
        Ok(v)
    }

    fn space(name: String, p: u64, k: u32, block: Block) -> Self {
        let coords = MultiPolyRing::new((0..block.coords()).map(|i| format!("x{i}")).collect());
        Variety::new(Some(name), p, k, vec![block], coords, Vec::new())
            .expect("linear spaces are valid")
    }

    pub fn point(p: u64, k: u32) -> Self {
        Self::space("pt".into(), p, k, Block::Affine(0))
    }

    pub fn affine(p: u64, k: u32, n: usize) -> Self {
        Self::space(format!("A^{n}"), p, k, Block::Affine(n))
    }

    pub fn projective(p: u64, k: u32, n: usize) -> Self {
        Self::space(format!("P^{n}"), p, k, Block::Projective(n))
    }

    /// The multiplicative group as the hyperbola `x y = 1`.
    pub fn gm(p: u64, k: u32) -> Self {
        let coords = MultiPolyRing::new(vec!["x".into(), "y".into()]);
        let eq = parse_in("x*y - 1", &coords).expect("fixed equation");
        Variety::new(
            Some("Gm".into()),
            p,
            k,
            vec![Block::Affine(2)],
            coords,
            vec![eq],
        )
        .expect("hyperbola is valid")
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// `q = p^k`, if it fits.
    pub fn q(&self) -> Option<u64> {
        self.p.checked_pow(self.k)
    }

    /// The same equations over `F_{p^k}` for another `(p, k)`.
    pub fn with_field(&self, p: u64, k: u32) -> Result<Self> {
        Variety::new(
            self.name.clone(),
            p,
            k,
            self.blocks.clone(),
            self.coords.clone(),
            self.equations.clone(),
        )
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn coords(&self) -> &MultiPolyRing {
        &self.coords
    }

    pub fn equations(&self) -> &[MPoly] {
        &self.equations
    }

    pub fn dim_ambient(&self) -> usize {
        self.blocks.iter().map(|b| b.dim()).sum()
    }

    /// Coordinate indices belonging to block `i`.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.blocks[..i].iter().map(|b| b.coords()).sum();
        start..start + self.blocks[i].coords()
    }

    /// `X × Y`: blocks and equations side by side. Clashing coordinate names
    /// of the second factor get a numeric suffix.
    pub fn product(&self, other: &Variety) -> Result<Variety> {
        if (self.p, self.k) != (other.p, other.k) {
            return Err(Error::InvalidVariety(format!(
                "product of varieties over F_{}^{} and F_{}^{}",
                self.p, self.k, other.p, other.k
            )));
        }
        let mut taken: BTreeSet<String> = self.coords.vars().iter().cloned().collect();
        let mut vars: Vec<String> = self.coords.vars().to_vec();
        for v in other.coords.vars() {
            let name = if taken.contains(v) {
                fresh_name(&taken, v)
            } else {
                v.clone()
            };
            taken.insert(name.clone());
            vars.push(name);
        }
        let coords = MultiPolyRing::new(vars);
        let (na, nb) = (self.coords.nvars(), other.coords.nvars());
        let shift = |e: &MPoly, offset: usize, width: usize| {
            MPoly::from_terms(
                na + nb,
                e.terms().map(|(m, c)| {
                    let mut x = vec![0; na + nb];
                    x[offset..offset + width].copy_from_slice(m);
                    (x, c.clone())
                }),
            )
        };
        let equations = self
            .equations
            .iter()
            .map(|e| shift(e, 0, na))
            .chain(other.equations.iter().map(|e| shift(e, na, nb)))
            .collect();
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a} x {b}")),
            _ => None,
        };
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        Variety::new(name, self.p, self.k, blocks, coords, equations)
    }

    pub fn to_spec(&self) -> VarietySpec {
        VarietySpec {
            name: self.name.clone(),
            p: self.p,
            k: self.k,
            ambient: if self.blocks.len() == 1 {
                Ambient::Single(self.blocks[0])
            } else {
                Ambient::Product(self.blocks.clone())
            },
            equations: self
                .equations
                .iter()
                .map(|e| self.coords.render(e))
                .collect(),
            vars: Some(self.coords.vars().to_vec()),
        }
    }

    /// `V(eqs) in P^2 over F_5`, or the name if there is one.
    pub fn describe(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        let ambient: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        let field = if self.k == 1 {
            format!("F_{}", self.p)
        } else {
            format!("F_{}^{}", self.p, self.k)
        };
        let eqs: Vec<String> = self
            .equations
            .iter()
            .map(|e| self.coords.render(e))
            .collect();
        if eqs.is_empty() {
            format!("{} over {field}", ambient.join(" x "))
        } else {
            format!(
                "V({}) in {} over {field}",
                eqs.join(", "),
                ambient.join(" x ")
            )
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
