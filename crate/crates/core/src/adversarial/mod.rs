//! Planning against an adversarial stopping time whose only constraint is
//! its expected value `T`.
//!
//! A plan's value is at least 0 exactly when a line through `(T, 0)` lies
//! below its whole utility sequence, and the slopes of such lines form an
//! interval. Paths are summarised by their last utility and that interval;
//! the dominating summaries of short paths suffice to find a lasso, and a
//! binary search over shifted weights recovers the exact optimum.

mod best_paths;
mod decide;
mod pairs;
mod slope;
mod value;

pub use best_paths::{best_paths, best_paths_steps, down_point, BestPathsTable, DownPoint};
pub use decide::{exists_positive_path, Certificate};
pub use pairs::{maximal_set, pair_preferred, RankedPair};
pub use slope::{path_constraint, slope_constraint, SlopeInterval};
pub use value::{
    adversarial_value, bounded_denominator_rational, decide_at_least, shift_weights,
    AdversarialResult,
};
