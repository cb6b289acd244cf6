#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use wittzeta::algebra::{Integers, Poly, PolyRing, Ring, TruncSeries};
use wittzeta::witt::WittVec;

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn zw(c: &[i64], n: usize) -> WittVec<Integers> {
    WittVec::from_coeffs(Integers, ints(c), n).unwrap()
}

pub fn random_ints(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// `1 + c_1 t + …` with `c_i` drawn from `[lo, hi]`.
pub fn random_witt_z(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> WittVec<Integers> {
    let mut c = vec![1];
    c.extend(random_ints(rng, n, lo, hi));
    zw(&c, n)
}

/// Degree drawn from `[0, max_deg]`.
pub fn random_poly_z(rng: &mut ChaCha8Rng, max_deg: usize, lo: i64, hi: i64) -> Poly<BigInt> {
    let len = rng.gen_range(1..=max_deg + 1);
    PolyRing::new(Integers, "u").from_ints(&random_ints(rng, len, lo, hi))
}

pub fn random_witt_zu(rng: &mut ChaCha8Rng, n: usize) -> WittVec<PolyRing<Integers>> {
    let r = PolyRing::new(Integers, "u");
    let mut c = vec![r.one()];
    for _ in 0..n {
        c.push(random_poly_z(rng, 2, -2, 2));
    }
    WittVec::from_coeffs(r, c, n).unwrap()
}

/// Polynomial in `t` with constant term 1 and degree at most `max_deg`.
pub fn random_unit_poly(rng: &mut ChaCha8Rng, max_deg: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut c = vec![1];
    let deg = rng.gen_range(0..=max_deg);
    c.extend(random_ints(rng, deg, lo, hi));
    c
}

/// The `a_n` with `g = Π_n (1 - a_n t^n)^{-1}`.
pub fn witt_coordinates(g: &WittVec<Integers>) -> Vec<BigInt> {
    let n = g.precision();
    let mut cur = g.coeffs().to_vec();
    let mut out = Vec::with_capacity(n);
    for d in 1..=n {
        let a = cur[d].clone();
        // cur *= (1 - a t^d)
        for k in (d..=n).rev() {
            let sub = &a * &cur[k - d];
            cur[k] -= sub;
        }
        out.push(a);
    }
    out
}

/// `∗` from Witt coordinates, using
/// `(1 - a t^n)^{-1} ∗ (1 - b t^m)^{-1} = (1 - a^{m/d} b^{n/d} t^{nm/d})^{-d}`.
pub fn oracle_witt_mul(g: &WittVec<Integers>, h: &WittVec<Integers>) -> Vec<BigInt> {
    let n = g.precision();
    let (a, b) = (witt_coordinates(g), witt_coordinates(h));
    let mut acc = vec![BigInt::zero(); n + 1];
    acc[0] = BigInt::one();
    for i in 1..=n {
        for j in 1..=n {
            let d = i.gcd(&j);
            let l = i * j / d;
            if l > n || a[i - 1].is_zero() || b[j - 1].is_zero() {
                continue;
            }
            let c =
                num_traits::pow(a[i - 1].clone(), j / d) * num_traits::pow(b[j - 1].clone(), i / d);
            for _ in 0..d {
                // acc /= (1 - c t^l)
                for k in l..=n {
                    let add = &c * &acc[k - l];
                    acc[k] += add;
                }
            }
        }
    }
    acc
}

pub fn series_z(c: &[BigInt], n: usize) -> TruncSeries<Integers> {
    TruncSeries::new(Integers, c.to_vec(), n)
}
