//! Classes in the Grothendieck ring of varieties and motivic measures on
//! them. The counting measure is computed from rational points; the Euler
//! and Poincaré measures act on symbolic classes through value tables.

mod census;
mod count;
mod k0;
mod measure;
mod variety;

pub use census::{
    census_from_counts, closed_point_census, point_counts, sym_from_census, sym_product_counts,
};
pub use count::{count_points, count_points_naive, enumeration_cost, ENUMERATION_BUDGET};
pub use k0::{parse_atom, AtomSpec, K0Class, SymbolicAtom, Term};
pub use measure::{
    lefschetz_value, measure_value, CountingMeasure, EulerMeasure, Measure, PoincareMeasure,
    SymPolicy,
};
pub use variety::{Ambient, Block, Variety, VarietySpec};
