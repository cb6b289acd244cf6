use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("constant term of a Witt vector must be 1")]
    NotWittVector,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field of order {p}^{k} is too large")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("precision mismatch: {left} vs {right}")]
    PrecisionMismatch { left: usize, right: usize },
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("value is not integral: {0}")]
    NonIntegral(String),
    #[error("operation needs a torsion-free coefficient ring, got {0}")]
    TorsionUnsupported(String),
    #[error("precision {precision} too low for degree bound {dmax} (need 2*dmax < precision)")]
    PrecisionTooLow { dmax: usize, precision: usize },
    #[error("enumeration of {needed} tuples exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("closed-point census inconsistent at degree {degree}: {detail}")]
    CensusInconsistent { degree: usize, detail: String },
    #[error("atom {atom} has no value under measure {measure}")]
    UnvaluedAtom { atom: String, measure: String },
    #[error("unsupported class: {0}")]
    UnsupportedClass(String),
    #[error("no rational reconstruction with degrees <= {dmax}")]
    NotRationalAtBound { dmax: usize },
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid variety: {0}")]
    InvalidVariety(String),
}
