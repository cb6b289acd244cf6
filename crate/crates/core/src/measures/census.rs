use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::count::count_points;
use super::variety::Variety;
use crate::error::{Error, Result};

fn moebius(mut n: usize) -> i64 {
    let mut mu = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// `N_1, …, N_D`.
pub fn point_counts(v: &Variety, degree: usize) -> Result<Vec<BigInt>> {
    (1..=degree as u32).map(|m| count_points(v, m)).collect()
}

/// Closed points by degree from `N_m = Σ_{d | m} d B_d`:
/// `B_d = (1/d) Σ_{e | d} μ(e) N_{d/e}`.
pub fn census_from_counts(counts: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(counts.len());
    for d in 1..=counts.len() {
        let mut s = BigInt::zero();
        for e in (1..=d).filter(|e| d % e == 0) {
            s += moebius(e) * &counts[d / e - 1];
        }
        let (b, r) = s.div_rem(&BigInt::from(d));
        if !r.is_zero() {
            return Err(Error::CensusInconsistent {
                degree: d,
                detail: format!("{s} is not divisible by {d}"),
            });
        }
        if b.is_negative() {
            return Err(Error::CensusInconsistent {
                degree: d,
                detail: format!("negative number of closed points {b}"),
            });
        }
        out.push(b);
    }
    Ok(out)
}

/// `B_1, …, B_D` for the variety over its own field.
pub fn closed_point_census(v: &Variety, degree: usize) -> Result<Vec<BigInt>> {
    census_from_counts(&point_counts(v, degree)?)
}

/// Coefficients `s_0, …, s_N` of `Π_d (1 - t^d)^{-B_d}`, the numbers of
/// effective zero-cycles of each degree.
pub fn sym_from_census(census: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); n + 1];
    s[0] = BigInt::one();
    for (i, b) in census.iter().enumerate().take(n) {
        let d = i + 1;
        // (1 - t^d)^{-b} = Σ_j C(b + j - 1, j) t^{dj}
        let mut factor = vec![BigInt::zero(); n / d + 1];
        factor[0] = BigInt::one();
        for j in 1..factor.len() {
            factor[j] = &factor[j - 1] * (b + BigInt::from(j - 1)) / BigInt::from(j);
        }
        let mut next = vec![BigInt::zero(); n + 1];
        for (k, sk) in s.iter().enumerate() {
            if sk.is_zero() {
                continue;
            }
            for (j, fj) in factor.iter().enumerate() {
                if k + d * j > n {
                    break;
                }
                next[k + d * j] += sk * fj;
            }
        }
        s = next;
    }
    s
}

/// `s_n = #S^n(X)(F_q)` for `n <= N`.
pub fn sym_product_counts(v: &Variety, n: usize) -> Result<Vec<BigInt>> {
    Ok(sym_from_census(&closed_point_census(v, n)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn moebius_values() {
        let mu: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn census_examples() {
        assert_eq!(
            census_from_counts(&ints(&[2, 4, 8])).unwrap(),
            ints(&[2, 1, 2])
        );
        assert_eq!(census_from_counts(&ints(&[3, 5])).unwrap(), ints(&[3, 1]));
        assert_eq!(
            closed_point_census(&Variety::affine(2, 1, 1), 3).unwrap(),
            ints(&[2, 1, 2])
        );
        assert_eq!(census_from_counts(&ints(&[7])).unwrap(), ints(&[7]));
    }

    #[test]
    fn census_detects_bad_counts() {
        assert!(matches!(
            census_from_counts(&ints(&[2, 3])),
            Err(Error::CensusInconsistent { degree: 2, .. })
        ));
        assert!(matches!(
            census_from_counts(&ints(&[4, 2])),
            Err(Error::CensusInconsistent { degree: 2, .. })
        ));
    }

    #[test]
    fn symmetric_products_of_lines() {
        let a1 = sym_product_counts(&Variety::affine(2, 1, 1), 5).unwrap();
        assert_eq!(a1, ints(&[1, 2, 4, 8, 16, 32]));
        let p1 = sym_product_counts(&Variety::projective(3, 1, 1), 4).unwrap();
        assert_eq!(p1, ints(&[1, 4, 13, 40, 121]));
    }
}
