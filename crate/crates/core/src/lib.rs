//! Exact big Witt vectors, λ-ring σ-operations and Kapranov zeta functions of
//! motivic measures, together with checkers for the identities relating them.

pub mod algebra;
pub mod error;
pub mod lambda;
pub mod measures;
pub mod verdict;
pub mod witt;
pub mod zeta;

pub use error::{Error, Result};
pub use verdict::Verdict;
