//! Ground truth at desk scale: exhaustive saturation numbers, the
//! lower-bound accounting replayed on concrete graphs, and the asymptotic
//! bound formulas.

mod bounds;
mod rsat;
mod witness;

pub use bounds::{bound_formulas, rsat_coefficient, BoundReport};
pub use rsat::{exact_rsat, RsatResult};
pub use witness::{lower_bound_witness_check, BVertex, JensenSteps, LowerBoundReport, PairVerdict};
