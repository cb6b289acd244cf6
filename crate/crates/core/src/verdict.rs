use std::fmt;

use serde::Serialize;

use crate::algebra::Ring;
use crate::witt::WittVec;

/// Outcome of an identity check between two truncated series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub precision: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Mismatch>,
}

/// The first coefficient where the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub degree: usize,
    pub lhs: String,
    pub rhs: String,
}

impl Verdict {
    pub fn holds(precision: usize) -> Self {
        Verdict {
            holds: true,
            precision,
            failure: None,
        }
    }

    pub fn compare<R: Ring>(lhs: &WittVec<R>, rhs: &WittVec<R>) -> Self {
        let precision = lhs.precision().min(rhs.precision());
        let r = lhs.ring();
        let diff = (0..=precision).find(|&k| lhs.coeff(k) != rhs.coeff(k));
        match diff {
            None => Verdict::holds(precision),
            Some(k) => Verdict {
                holds: false,
                precision,
                failure: Some(Mismatch {
                    degree: k,
                    lhs: r.render(lhs.coeff(k)),
                    rhs: r.render(rhs.coeff(k)),
                }),
            },
        }
    }

    /// The first failing verdict, or the last one if all hold.
    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut last = None;
        for v in verdicts {
            if !v.holds {
                return v;
            }
            last = Some(v);
        }
        last.expect("at least one verdict")
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "HOLDS (precision {})", self.precision),
            Some(m) => write!(f, "FAILS at t^{}: lhs={}, rhs={}", m.degree, m.lhs, m.rhs),
        }
    }
}
