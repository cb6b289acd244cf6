//! Fraction-free elimination over integral domains: determinants, Sylvester
//! resultants and linear solves whose intermediate entries never leave the
//! ring.

use super::poly::Poly;
use super::IntegralDomain;
use crate::error::{Error, Result};

type Matrix<E> = Vec<Vec<E>>;

/// Determinant by Bareiss elimination. Every division is exact.
pub fn bareiss_determinant<R: IntegralDomain>(ring: &R, mut m: Matrix<R::Elem>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[k][k], &m[i][j]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring
                    .exact_div(&num, &prev)
                    .expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&det)
    } else {
        det
    }
}

/// The Sylvester matrix of `f` and `g` taken at declared degrees `df`, `dg`.
/// Rows hold coefficients from the highest power down.
pub fn sylvester_matrix<R: IntegralDomain>(
    ring: &R,
    f: &Poly<R::Elem>,
    df: usize,
    g: &Poly<R::Elem>,
    dg: usize,
) -> Matrix<R::Elem> {
    let size = df + dg;
    let coeff = |p: &Poly<R::Elem>, i: usize| p.coeff(i).cloned().unwrap_or_else(|| ring.zero());
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dg {
        let mut row = vec![ring.zero(); size];
        for i in 0..=df {
            row[shift + i] = coeff(f, df - i);
        }
        rows.push(row);
    }
    for shift in 0..df {
        let mut row = vec![ring.zero(); size];
        for i in 0..=dg {
            row[shift + i] = coeff(g, dg - i);
        }
        rows.push(row);
    }
    rows
}

/// Resultant at declared degrees; `df >= deg f` and `dg >= deg g` are the
/// caller's responsibility.
pub fn sylvester_resultant<R: IntegralDomain>(
    ring: &R,
    f: &Poly<R::Elem>,
    df: usize,
    g: &Poly<R::Elem>,
    dg: usize,
) -> R::Elem {
    debug_assert!(f.degree().unwrap_or(0) <= df && g.degree().unwrap_or(0) <= dg);
    bareiss_determinant(ring, sylvester_matrix(ring, f, df, g, dg))
}

/// `Res(f, g)` at the actual degrees of `f` and `g`.
pub fn resultant<R: IntegralDomain>(
    ring: &R,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<R::Elem> {
    let df = f.degree().ok_or(Error::ZeroPolynomial)?;
    let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(sylvester_resultant(ring, f, df, g, dg))
}

/// Solves `a x = b` by fraction-free Gauss–Jordan elimination.
///
/// Free variables are set to zero. Returns `None` if the system is
/// inconsistent or if the solution (computed in the fraction field) has a
/// coordinate outside the ring.
pub fn solve_fraction_free<R: IntegralDomain>(
    ring: &R,
    a: &[Vec<R::Elem>],
    b: &[R::Elem],
) -> Option<Vec<R::Elem>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Matrix<R::Elem> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut prev = ring.one();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(r) = (rank..rows).find(|&r| !ring.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(r, rank);
        let piv = m[rank][col].clone();
        for i in 0..rows {
            if i == rank {
                continue;
            }
            let factor = m[i][col].clone();
            for j in 0..=cols {
                if j == col {
                    continue;
                }
                let num = ring.sub(&ring.mul(&piv, &m[i][j]), &ring.mul(&factor, &m[rank][j]));
                m[i][j] = ring
                    .exact_div(&num, &prev)
                    .expect("fraction-free Gauss-Jordan divides exactly");
            }
            m[i][col] = ring.zero();
        }
        prev = piv;
        pivots.push(col);
        rank += 1;
    }
    if (rank..rows).any(|i| !ring.is_zero(&m[i][cols])) {
        return None;
    }
    let mut x = vec![ring.zero(); cols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = ring.exact_div(&m[i][cols], &prev)?;
    }
    Some(x)
}
