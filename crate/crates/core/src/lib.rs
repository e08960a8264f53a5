//! Limit-set radii of trigonometric polynomials `f(x) = Σ c_k e^{iλ_k x}`,
//! the number-partitioning problem behind the inner radius, and windowed
//! scans that connect the two.

// `!(a < b)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod apmin;
pub mod curves;
pub mod partition;
pub mod poly;
pub mod presets;
pub mod series;

pub use apmin::{radii_formulas, scan_extrema, ExtremaFormulas, ScanReport};
pub use partition::{solve, MethodChoice, PartitionResult, WeightSet};
pub use poly::{
    classify_independence, Frequency, IndependenceClass, Rational, Term, TrigPolynomial,
};
