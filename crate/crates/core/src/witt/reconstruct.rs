use super::{RatReduce, RatWitt, WittVec};
use crate::algebra::{solve_fraction_free, IntegralDomain, PolyRing};
use crate::error::{Error, Result};

/// Finds `p / q` with `deg p, deg q <= dmax`, `p(0) = q(0) = 1` and
/// `p ≡ q·g mod t^{N+1}`.
///
/// Candidates are scanned by increasing `deg q`, then increasing `deg p`. For
/// each pair of degree bounds the Hankel system for the denominator is solved
/// by fraction-free elimination; a solution whose coordinates fall outside
/// the ring is discarded. Returns `Ok(None)` if nothing fits.
pub fn rationalize<R>(g: &WittVec<R>, dmax: usize) -> Result<Option<RatWitt<R>>>
where
    R: IntegralDomain + RatReduce,
{
    let n = g.precision();
    if 2 * dmax >= n {
        return Err(Error::PrecisionTooLow { dmax, precision: n });
    }
    let ring = g.ring();
    let c = g.coeffs();
    let coeff = |k: isize| {
        if k < 0 {
            ring.zero()
        } else {
            c[k as usize].clone()
        }
    };
    for dq in 0..=dmax {
        for dp in 0..=dmax {
            // Σ_{i=1}^{dq} q_i c_{k-i} = -c_k  for  k = dp+1 ..= N
            let rows: Vec<Vec<R::Elem>> = (dp + 1..=n)
                .map(|k| (1..=dq).map(|i| coeff(k as isize - i as isize)).collect())
                .collect();
            let rhs: Vec<R::Elem> = (dp + 1..=n).map(|k| ring.neg(&c[k])).collect();
            let tail = if dq == 0 {
                rhs.iter().all(|x| ring.is_zero(x)).then(Vec::new)
            } else {
                solve_fraction_free(ring, &rows, &rhs)
            };
            let Some(tail) = tail else { continue };
            let pr = PolyRing::new(ring.clone(), "t");
            let mut qc = vec![ring.one()];
            qc.extend(tail);
            let q = pr.poly(qc);
            let p = pr.poly(
                (0..=dp)
                    .map(|k| {
                        let mut acc = ring.zero();
                        for i in 0..=k.min(dq) {
                            acc = ring.add(&acc, &ring.mul(&pr.coeff(&q, i), &c[k - i]));
                        }
                        acc
                    })
                    .collect(),
            );
            let candidate = RatWitt::new(ring.clone(), p, q)?;
            debug_assert_eq!(&candidate.expand(n), g);
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}
