//! Exact planning on weighted graphs under three stopping-time regimes.
//!
//! * fixed horizon `T`: Bellman recursion and max-plus powering
//!   ([`fixed_horizon`], [`maxplus`]);
//! * a specified finite-support stopping distribution, via a layered graph
//!   ([`specified`]);
//! * an adversarial distribution constrained only by its expected time `T`
//!   ([`adversarial`]), solved exactly with an optimal stationary plan.
//!
//! [`oracle`] holds brute-force ground truth for small instances and
//! [`instances`] builds the standard example graphs. All arithmetic is exact.

pub mod adversarial;
pub mod decomposition;
pub mod distribution;
pub mod error;
pub mod fixed_horizon;
pub mod graph;
pub mod instances;
pub mod maxplus;
pub mod oracle;
pub mod path;
pub mod rational;
pub mod specified;

pub use adversarial::{
    adversarial_value, best_paths, bounded_denominator_rational, exists_positive_path, maximal_set,
    pair_preferred, shift_weights, slope_constraint, AdversarialResult, BestPathsTable,
    Certificate, DownPoint, RankedPair, SlopeInterval,
};
pub use decomposition::{cycle_decomposition, first_good_cycle, CycleDecomposition};
pub use distribution::{expected_utility, StoppingDistribution, Utilities};
pub use error::{Error, Result};
pub use fixed_horizon::{
    best_stationary, build_np_gadget, value_iteration, NpGadget, StationaryPlan,
    DEFAULT_ENUMERATION_BUDGET,
};
pub use graph::{Edge, WeightedGraph};
pub use maxplus::{maxplus_multiply, maxplus_power, maxplus_power_value, MaxPlusMatrix};
pub use path::{lasso_utility_at, utility_sequence, FinitePath, Lasso, UtilitySequence};
pub use rational::Rational;
pub use specified::{
    build_layered_graph, specified_value, LayeredGraph, SpecifiedResult, DEFAULT_WITNESS_BOUND,
};
