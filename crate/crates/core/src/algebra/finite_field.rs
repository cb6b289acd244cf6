//! Finite fields `F_{p^k}` with elements packed into a single `u64`.
//!
//! An element `c_0 + c_1 x + … + c_{k-1} x^{k-1}` (reduced modulo the field's
//! monic irreducible modulus) is stored as the integer `Σ c_i p^i`. Small
//! fields additionally carry discrete log tables so multiplication is two
//! lookups.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::PolyRing;
use super::{Field, IntegralDomain, Ring, RingTag};
use crate::error::{Error, Result};

/// Fields up to this order get exp/log tables.
const TABLE_LIMIT: u64 = 1 << 22;

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, `k + 1` coefficients from the constant term up.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.0.p)
            .field("k", &self.0.k)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn field_cache() -> &'static Mutex<HashMap<(u64, u32), FiniteField>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), FiniteField>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `F_{p^k}` with the first monic irreducible modulus of degree `k` in the
/// scan order `Σ c_i p^i` (constant term least significant).
pub fn make_field(p: u64, k: u32) -> Result<FiniteField> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::DegreeZero);
    }
    let q = p
        .checked_pow(k)
        .filter(|&q| q < (1u64 << 62))
        .ok_or(Error::FieldTooLarge { p, k })?;
    if let Some(f) = field_cache().lock().expect("field cache").get(&(p, k)) {
        return Ok(f.clone());
    }
    let modulus = if k == 1 {
        vec![0, 1]
    } else {
        find_irreducible(p, k, q)
    };
    let field = FiniteField::with_modulus(p, k, modulus);
    field_cache()
        .lock()
        .expect("field cache")
        .insert((p, k), field.clone());
    Ok(field)
}

fn find_irreducible(p: u64, k: u32, q: u64) -> Vec<u64> {
    let fp = FiniteField::with_modulus(p, 1, vec![0, 1]);
    let ring = PolyRing::new(fp.clone(), "x");
    for idx in 0..q {
        let mut coeffs = fp.digits(idx, k as usize);
        // a zero constant term means x divides the candidate
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let f = ring.poly(coeffs.clone());
        if is_irreducible(&ring, &f, p, k) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Ben-Or test: `f` of degree `k` is irreducible iff
/// `gcd(f, x^{p^i} - x) = 1` for `1 <= i <= k/2`.
fn is_irreducible(ring: &PolyRing<FiniteField>, f: &super::Poly<u64>, p: u64, k: u32) -> bool {
    let x = ring.from_ints(&[0, 1]);
    let mut h = x.clone();
    for _ in 1..=k / 2 {
        h = ring.pow_mod(&h, u128::from(p), f);
        let g = ring.gcd(f, &ring.sub(&h, &x));
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

impl FiniteField {
    fn with_modulus(p: u64, k: u32, modulus: Vec<u64>) -> Self {
        let q = p.pow(k);
        let mut inner = Inner {
            p,
            k,
            q,
            modulus,
            tables: None,
        };
        if k > 1 && q <= TABLE_LIMIT {
            let bare = FiniteField(Arc::new(Inner {
                tables: None,
                modulus: inner.modulus.clone(),
                ..inner
            }));
            inner.tables = Some(bare.build_tables());
        }
        FiniteField(Arc::new(inner))
    }

    fn build_tables(&self) -> Tables {
        let q = self.0.q;
        let order = q - 1;
        let factors = prime_factors(order);
        let generator = (2..q)
            .chain(std::iter::once(1))
            .find(|&g| factors.iter().all(|&l| self.slow_pow(g, order / l) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur as u32;
            log[cur as usize] = i as u32;
            cur = self.slow_mul(cur, generator);
        }
        Tables { exp, log }
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.0.q
    }

    /// Base-`p` digits of a packed element, `len` of them.
    pub fn digits(&self, mut a: u64, len: usize) -> Vec<u64> {
        let p = self.0.p;
        (0..len)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.0.p + d % self.0.p)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.0.p as i64) as u64
    }

    /// The image of the generator `x` (only meaningful for `k > 1`).
    pub fn generator(&self) -> u64 {
        if self.0.k == 1 {
            0
        } else {
            self.0.p
        }
    }

    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(&a, self.0.p)
    }

    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        let (p, k) = (self.0.p, self.0.k as usize);
        if k == 1 {
            return ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64;
        }
        let da = self.digits(a, k);
        let db = self.digits(b, k);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((u128::from(prod[i + j]) + u128::from(x) * u128::from(y))
                    % u128::from(p)) as u64;
            }
        }
        let m = &self.0.modulus;
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (j, &mj) in m.iter().enumerate().take(k) {
                let idx = top - k + j;
                let sub = (u128::from(c) * u128::from(mj) % u128::from(p)) as u64;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
            prod[top] = 0;
        }
        self.from_digits(&prod[..k])
    }

    fn slow_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn add_elem(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.0;
        if inner.k == 1 {
            let s = a + b;
            return if s >= inner.p { s - inner.p } else { s };
        }
        if inner.p == 2 {
            return a ^ b;
        }
        let p = inner.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 || b > 0 {
            let d = (a % p + b % p) % p;
            out += d * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg_elem(&self, a: u64) -> u64 {
        let inner = &*self.0;
        if inner.p == 2 || a == 0 {
            return a;
        }
        if inner.k == 1 {
            return inner.p - a;
        }
        let p = inner.p;
        let mut a = a;
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 {
            let d = (p - a % p) % p;
            out += d * place;
            place *= p;
            a /= p;
        }
        out
    }

    #[inline]
    pub fn mul_elem(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => {
                let order = t.exp.len();
                let s = t.log[a as usize] as usize + t.log[b as usize] as usize;
                t.exp[if s >= order { s - order } else { s }] as u64
            }
            None => self.slow_mul(a, b),
        }
    }

    pub fn pow_elem(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => {
                let order = t.exp.len() as u128;
                let l = (u128::from(t.log[a as usize]) * u128::from(e)) % order;
                t.exp[l as usize] as u64
            }
            None => self.slow_pow(a, e),
        }
    }

    pub fn inv_elem(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        Some(match &self.0.tables {
            Some(t) => {
                let order = t.exp.len();
                let l = t.log[a as usize] as usize;
                t.exp[(order - l) % order] as u64
            }
            None => self.slow_pow(a, self.0.q - 2),
        })
    }
}

impl Ring for FiniteField {
    type Elem = u64;

    fn tag(&self) -> RingTag {
        RingTag::FiniteField {
            p: self.0.p,
            k: self.0.k,
        }
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.0.p))
            .to_u64()
            .expect("reduced residue fits")
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.add_elem(*a, *b)
    }

    fn neg(&self, a: &u64) -> u64 {
        self.neg_elem(*a)
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_elem(*a, *b)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn pow(&self, a: &u64, e: u64) -> u64 {
        self.pow_elem(*a, e)
    }

    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        self.inv_elem(*a)
    }

    fn is_torsion_free(&self) -> bool {
        false
    }

    fn div_by_int(&self, _a: &u64, _n: u64) -> Result<u64> {
        Err(Error::TorsionUnsupported(self.tag().to_string()))
    }

    fn render(&self, a: &u64) -> String {
        if self.0.k == 1 {
            return a.to_string();
        }
        let digits = self.digits(*a, self.0.k as usize);
        let fp = FiniteField::with_modulus(self.0.p, 1, vec![0, 1]);
        super::expr::render_dense(&fp, &digits, "x")
    }
}

impl IntegralDomain for FiniteField {
    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        if *b == 0 {
            return (*a == 0).then_some(0);
        }
        self.inv_elem(*b).map(|ib| self.mul_elem(*a, ib))
    }
}

impl Field for FiniteField {}
