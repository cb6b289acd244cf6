//! Rational point counts `N_m = #X(F_{q^m})`.
//!
//! Blocks of the ambient space that share no equation are counted
//! separately and multiplied; blocks without equations use closed forms.
//! Constrained blocks are enumerated over normalized representatives (first
//! nonzero homogeneous coordinate equal to 1), except for the last free
//! coordinate, which is handled by counting the common roots of the
//! specialized equations in `F_Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::variety::{Block, Variety};
use crate::algebra::{make_field, FiniteField, PolyRing, Ring};
use crate::error::{Error, Result};

/// Maximal number of enumerated tuples per count.
pub const ENUMERATION_BUDGET: u128 = 10_000_000;

const CHUNK: u64 = 2048;

/// An equation over `F_Q` in local coordinates: `(coefficient, [(coord, exp)])`.
#[derive(Debug, Clone)]
struct FieldEq {
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl FieldEq {
    fn eval(&self, f: &FiniteField, vals: &[u64]) -> u64 {
        let mut acc = 0;
        for (c, mono) in &self.terms {
            let mut t = *c;
            for &(i, e) in mono {
                t = f.mul_elem(t, f.pow_elem(vals[i], u64::from(e)));
            }
            acc = f.add_elem(acc, t);
        }
        acc
    }
}

/// Equations reduced mod `p`: `None` if some equation is a nonzero constant.
/// Exponent vectors are kept over all coordinates of the variety.
fn reduce_mod_p(v: &Variety) -> Option<Vec<Vec<(i64, Vec<u32>)>>> {
    let p = BigInt::from(v.characteristic());
    let mut out = Vec::new();
    for e in v.equations() {
        let terms: Vec<(i64, Vec<u32>)> = e
            .terms()
            .filter_map(|(m, c)| {
                let r = c.mod_floor(&p).to_i64().expect("residue below p");
                (r != 0).then(|| (r, m.clone()))
            })
            .collect();
        if terms.is_empty() {
            continue;
        }
        if terms.len() == 1 && terms[0].1.iter().all(|&x| x == 0) {
            return None;
        }
        out.push(terms);
    }
    Some(out)
}

fn to_field_eq(f: &FiniteField, terms: &[(i64, Vec<u32>)], local: &[usize]) -> FieldEq {
    FieldEq {
        terms: terms
            .iter()
            .map(|(c, m)| {
                let mono = local
                    .iter()
                    .enumerate()
                    .filter(|&(_, &g)| m[g] > 0)
                    .map(|(li, &g)| (li, m[g]))
                    .collect();
                (f.from_i64(*c), mono)
            })
            .collect(),
    }
}

/// `q^e` in `u128`, saturating.
fn pow_sat(q: u128, e: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(q);
    }
    acc
}

fn field_order(v: &Variety, m: u32) -> u128 {
    pow_sat(u128::from(v.characteristic()), (v.degree() * m) as usize)
}

/// A normalized-representative cell: coordinates fixed to 0 or 1 and the
/// free ones, in local indexing.
#[derive(Debug, Clone)]
struct Cell {
    fixed: Vec<(usize, u64)>,
    free: Vec<usize>,
}

/// All cells of a product of blocks whose local coordinate ranges are given.
fn cells(blocks: &[(Block, std::ops::Range<usize>)]) -> Vec<Cell> {
    let mut out = vec![Cell {
        fixed: Vec::new(),
        free: Vec::new(),
    }];
    for (b, range) in blocks {
        let mut next = Vec::new();
        for c in &out {
            match b {
                Block::Affine(_) => {
                    let mut c = c.clone();
                    c.free.extend(range.clone());
                    next.push(c);
                }
                Block::Projective(_) => {
                    for pivot in range.clone() {
                        let mut c = c.clone();
                        c.fixed.extend((range.start..pivot).map(|i| (i, 0)));
                        c.fixed.push((pivot, 1));
                        c.free.extend(pivot + 1..range.end);
                        next.push(c);
                    }
                }
            }
        }
        out = next;
    }
    out
}

/// Blocks linked by common equations, with the equations attached.
struct Component {
    blocks: Vec<usize>,
    equations: Vec<Vec<(i64, Vec<u32>)>>,
}

fn components(v: &Variety, eqs: Vec<Vec<(i64, Vec<u32>)>>) -> Vec<Component> {
    let nb = v.blocks().len();
    let block_of: Vec<usize> = (0..nb)
        .flat_map(|b| v.block_range(b).map(move |_| b))
        .collect();
    let mut parent: Vec<usize> = (0..nb).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let touched: Vec<Vec<usize>> = eqs
        .iter()
        .map(|e| {
            let mut bs: Vec<usize> = e
                .iter()
                .flat_map(|(_, m)| {
                    m.iter()
                        .enumerate()
                        .filter(|(_, &x)| x > 0)
                        .map(|(i, _)| block_of[i])
                })
                .collect();
            bs.sort_unstable();
            bs.dedup();
            bs
        })
        .collect();
    for bs in &touched {
        for w in bs.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut comps: Vec<Component> = Vec::new();
    let mut index_of = vec![usize::MAX; nb];
    for b in 0..nb {
        let r = find(&mut parent, b);
        if index_of[r] == usize::MAX {
            index_of[r] = comps.len();
            comps.push(Component {
                blocks: Vec::new(),
                equations: Vec::new(),
            });
        }
        comps[index_of[r]].blocks.push(b);
    }
    for (e, bs) in eqs.into_iter().zip(touched) {
        let r = find(&mut parent, bs[0]);
        comps[index_of[r]].equations.push(e);
    }
    comps
}

fn component_layout(
    v: &Variety,
    c: &Component,
) -> (Vec<usize>, Vec<(Block, std::ops::Range<usize>)>) {
    let mut local = Vec::new();
    let mut blocks = Vec::new();
    for &b in &c.blocks {
        let start = local.len();
        local.extend(v.block_range(b));
        blocks.push((v.blocks()[b], start..local.len()));
    }
    (local, blocks)
}

fn closed_form(b: Block, q: &BigInt) -> BigInt {
    match b {
        Block::Affine(n) => num_traits::pow(q.clone(), n),
        Block::Projective(n) => (0..=n).map(|i| num_traits::pow(q.clone(), i)).sum(),
    }
}

/// Number of tuples the fast counter enumerates for `N_m`.
pub fn enumeration_cost(v: &Variety, m: u32) -> u128 {
    let Some(eqs) = reduce_mod_p(v) else { return 0 };
    let q = field_order(v, m);
    components(v, eqs)
        .iter()
        .filter(|c| !c.equations.is_empty())
        .map(|c| {
            let (_, blocks) = component_layout(v, c);
            cells(&blocks)
                .iter()
                .map(|cell| pow_sat(q, cell.free.len().saturating_sub(1)))
                .fold(0u128, u128::saturating_add)
        })
        .fold(0u128, u128::saturating_add)
}

fn check_budget(needed: u128) -> Result<()> {
    if needed > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded {
            needed,
            budget: ENUMERATION_BUDGET,
        });
    }
    Ok(())
}

/// `N_m = #X(F_{q^m})` where `q = p^k` is the field of `v`.
pub fn count_points(v: &Variety, m: u32) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::DegreeZero);
    }
    check_budget(enumeration_cost(v, m))?;
    let Some(eqs) = reduce_mod_p(v) else {
        return Ok(BigInt::zero());
    };
    let q_big = num_traits::pow(BigInt::from(v.characteristic()), (v.degree() * m) as usize);
    let mut total = BigInt::one();
    for c in components(v, eqs) {
        if c.equations.is_empty() {
            for &b in &c.blocks {
                total *= closed_form(v.blocks()[b], &q_big);
            }
            continue;
        }
        let f = make_field(v.characteristic(), v.degree() * m)?;
        let (local, blocks) = component_layout(v, &c);
        let feqs: Vec<FieldEq> = c
            .equations
            .iter()
            .map(|e| to_field_eq(&f, e, &local))
            .collect();
        let n: u128 = cells(&blocks)
            .iter()
            .map(|cell| count_cell(&f, &feqs, local.len(), cell))
            .sum();
        total *= BigInt::from(n);
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

/// Writes the mixed-radix digits of `idx` into the enumerated coordinates.
fn assign(vals: &mut [u64], coords: &[usize], mut idx: u64, q: u64) {
    for &c in coords.iter().rev() {
        vals[c] = idx % q;
        idx /= q;
    }
}

fn count_cell(f: &FiniteField, eqs: &[FieldEq], nloc: usize, cell: &Cell) -> u128 {
    let q = f.order();
    let mut base = vec![0u64; nloc];
    for &(i, x) in &cell.fixed {
        base[i] = x;
    }
    let Some((&x, rest)) = cell.free.split_last() else {
        return u128::from(eqs.iter().all(|e| e.eval(f, &base) == 0));
    };
    // per equation: terms as (coefficient, exponent of x, other factors)
    let split: Vec<Vec<(u64, usize, Vec<(usize, u32)>)>> = eqs
        .iter()
        .map(|e| {
            e.terms
                .iter()
                .map(|(c, mono)| {
                    let ex = mono
                        .iter()
                        .find(|&&(i, _)| i == x)
                        .map_or(0, |&(_, k)| k as usize);
                    let others = mono.iter().filter(|&&(i, _)| i != x).cloned().collect();
                    (*c, ex, others)
                })
                .collect()
        })
        .collect();
    let degs: Vec<usize> = split
        .iter()
        .map(|ts| ts.iter().map(|t| t.1).max().unwrap_or(0))
        .collect();
    let total = (q as u128).pow(rest.len() as u32) as u64;
    let nchunks = total.div_ceil(CHUNK);
    let roots = RootCounter::new(f);
    (0..nchunks)
        .into_par_iter()
        .map(|chunk| {
            let mut vals = base.clone();
            let mut polys: Vec<Vec<u64>> = degs.iter().map(|&d| vec![0; d + 1]).collect();
            let mut acc: u128 = 0;
            for idx in chunk * CHUNK..((chunk + 1) * CHUNK).min(total) {
                assign(&mut vals, rest, idx, q);
                for (poly, ts) in polys.iter_mut().zip(&split) {
                    poly.iter_mut().for_each(|c| *c = 0);
                    for (c, ex, others) in ts {
                        let mut t = *c;
                        for &(i, e) in others {
                            t = f.mul_elem(t, f.pow_elem(vals[i], u64::from(e)));
                        }
                        poly[*ex] = f.add_elem(poly[*ex], t);
                    }
                }
                acc += u128::from(roots.count(&polys));
            }
            acc
        })
        .sum()
}

/// Counts common roots in `F_Q` of univariate polynomials over `F_Q`.
struct RootCounter<'a> {
    f: &'a FiniteField,
    ring: PolyRing<FiniteField>,
}

impl<'a> RootCounter<'a> {
    /// Below this order, roots are found by evaluation.
    const EVAL_LIMIT: u64 = 64;

    fn new(f: &'a FiniteField) -> Self {
        RootCounter {
            f,
            ring: PolyRing::new(f.clone(), "x"),
        }
    }

    fn count(&self, polys: &[Vec<u64>]) -> u64 {
        let f = self.f;
        let q = f.order();
        let nonzero: Vec<&Vec<u64>> = polys.iter().filter(|p| p.iter().any(|&c| c != 0)).collect();
        if nonzero.is_empty() {
            return q;
        }
        if nonzero.iter().any(|p| p[1..].iter().all(|&c| c == 0)) {
            return 0;
        }
        if q <= Self::EVAL_LIMIT {
            return f
                .elements()
                .filter(|&x| {
                    nonzero.iter().all(|p| {
                        p.iter()
                            .rev()
                            .fold(0, |acc, &c| f.add_elem(f.mul_elem(acc, x), c))
                            == 0
                    })
                })
                .count() as u64;
        }
        let r = &self.ring;
        let mut g = r.poly(nonzero[0].clone());
        for p in &nonzero[1..] {
            g = r.gcd(&g, &r.poly((*p).clone()));
        }
        if g.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let x = r.poly(vec![0, 1]);
        let h = r.sub(&r.pow_mod(&x, u128::from(q), &g), &x);
        r.gcd(&g, &h).degree().unwrap_or(0) as u64
    }
}

/// Exhaustive count over all normalized representatives, evaluating every
/// equation at every point. Slow; kept as an independent check.
pub fn count_points_naive(v: &Variety, m: u32) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::DegreeZero);
    }
    let q = field_order(v, m);
    let nloc = v.coords().nvars();
    let blocks: Vec<(Block, std::ops::Range<usize>)> = (0..v.blocks().len())
        .map(|b| (v.blocks()[b], v.block_range(b)))
        .collect();
    let all = cells(&blocks);
    let needed = all
        .iter()
        .map(|c| pow_sat(q, c.free.len()))
        .fold(0u128, u128::saturating_add);
    check_budget(needed)?;
    let f = make_field(v.characteristic(), v.degree() * m)?;
    let identity: Vec<usize> = (0..nloc).collect();
    let eqs: Vec<FieldEq> = v
        .equations()
        .iter()
        .map(|e| {
            let terms: Vec<(i64, Vec<u32>)> = e
                .terms()
                .map(|(m, c)| {
                    let r = c
                        .mod_floor(&BigInt::from(v.characteristic()))
                        .to_i64()
                        .unwrap();
                    (r, m.clone())
                })
                .filter(|(r, _)| *r != 0)
                .collect();
            to_field_eq(&f, &terms, &identity)
        })
        .collect();
    let qq = f.order();
    let mut count: u64 = 0;
    for cell in &all {
        let mut vals = vec![0u64; nloc];
        for &(i, x) in &cell.fixed {
            vals[i] = x;
        }
        for idx in 0..(qq as u128).pow(cell.free.len() as u32) as u64 {
            assign(&mut vals, &cell.free, idx, qq);
            if eqs.iter().all(|e| e.eval(&f, &vals) == 0) {
                count += 1;
            }
        }
    }
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(json: &str) -> Variety {
        Variety::from_json(json).unwrap()
    }

    fn elliptic() -> Variety {
        var(r#"{"p":5,"ambient":{"projective":2},"equations":["y^2*z - x^3 - x*z^2 - z^3"]}"#)
    }

    #[test]
    fn spaces() {
        assert_eq!(
            count_points(&Variety::affine(2, 2, 1), 1).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            count_points(&Variety::projective(2, 1, 2), 1).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            count_points(&Variety::point(7, 1), 3).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            count_points(&Variety::gm(3, 1), 2).unwrap(),
            BigInt::from(8)
        );
    }

    #[test]
    fn circle_over_f3() {
        let v = var(r#"{"p":3,"ambient":{"affine":2},"equations":["x^2+y^2-1"]}"#);
        assert_eq!(count_points(&v, 1).unwrap(), BigInt::from(4));
        assert_eq!(count_points_naive(&v, 1).unwrap(), BigInt::from(4));
    }

    #[test]
    fn elliptic_curve_counts() {
        let e = elliptic();
        assert_eq!(count_points(&e, 1).unwrap(), BigInt::from(9));
        assert_eq!(count_points(&e, 2).unwrap(), BigInt::from(27));
        for m in 1..=3 {
            assert_eq!(
                count_points(&e, m).unwrap(),
                count_points_naive(&e, m).unwrap()
            );
        }
    }

    #[test]
    fn constants_and_empty_sets() {
        let empty = var(r#"{"p":3,"ambient":{"affine":1},"equations":["3*x + 1"]}"#);
        assert_eq!(count_points(&empty, 1).unwrap(), BigInt::zero());
        let all = var(r#"{"p":3,"ambient":{"affine":1},"equations":["3*x"]}"#);
        assert_eq!(count_points(&all, 1).unwrap(), BigInt::from(3));
        let none = var(r#"{"p":2,"ambient":{"affine":1},"equations":["x^2 + x + 1"]}"#);
        assert_eq!(count_points(&none, 1).unwrap(), BigInt::zero());
        assert_eq!(count_points(&none, 2).unwrap(), BigInt::from(2));
    }

    #[test]
    fn large_fields_use_the_gcd_path() {
        // x^2 = 2 has two roots exactly when 2 is a square
        let v = var(r#"{"p":7,"ambient":{"affine":1},"equations":["x^2 - 2"]}"#);
        assert_eq!(count_points(&v, 3).unwrap(), BigInt::from(2));
        assert_eq!(count_points_naive(&v, 3).unwrap(), BigInt::from(2));
        let w = var(r#"{"p":5,"ambient":{"affine":1},"equations":["x^2 - 2"]}"#);
        assert_eq!(count_points(&w, 3).unwrap(), BigInt::zero());
        assert_eq!(count_points(&w, 4).unwrap(), BigInt::from(2));
    }

    #[test]
    fn budget_is_enforced() {
        let v = var(
            r#"{"p":101,"ambient":{"affine":5},"equations":["a*b*c*d*e - 1"],"vars":["a","b","c","d","e"]}"#,
        );
        assert!(matches!(
            count_points(&v, 1),
            Err(Error::BudgetExceeded { .. })
        ));
        // free factors cost nothing
        let w = Variety::affine(101, 1, 5)
            .product(&Variety::gm(101, 1))
            .unwrap();
        assert_eq!(enumeration_cost(&w, 2), 101 * 101);
    }

    #[test]
    fn mixed_product_is_multiplicative() {
        let p1 = Variety::projective(3, 1, 1);
        let c = var(r#"{"p":3,"ambient":{"affine":2},"equations":["x^2+y^2-1"]}"#);
        let prod = p1.product(&c).unwrap();
        for m in 1..=2 {
            let n = count_points(&prod, m).unwrap();
            assert_eq!(
                n,
                count_points(&p1, m).unwrap() * count_points(&c, m).unwrap()
            );
            assert_eq!(n, count_points_naive(&prod, m).unwrap());
        }
    }
}
