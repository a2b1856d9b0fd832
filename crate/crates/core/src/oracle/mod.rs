//! Brute-force ground truth for small instances.
//!
//! Nothing here is efficient: values of individual lassos are computed in
//! closed form and maximised over every simple lasso, which is feasible up
//! to about eight vertices.

mod enumerate;
mod lasso;

pub use enumerate::{enumerate_simple_lassos, SimpleLassos};
pub use lasso::{bidirac_value, convex_hull_value, distribution_value, lasso_value, LassoValue};

use std::cmp::Ordering;

use crate::decomposition::first_good_cycle;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::path::Lasso;
use crate::rational::Rational;

/// Default cap on the number of lassos [`brute_force_adversarial_value`]
/// may evaluate.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceResult {
    pub value: Rational,
    pub best: Lasso,
    pub attained: bool,
}

/// `max` of [`lasso_value`] over all simple lassos from `start`, with the
/// lexicographically smallest maximiser.
pub fn brute_force_adversarial_value(
    graph: &WeightedGraph,
    start: usize,
    horizon: &Rational,
    budget: u64,
) -> Result<BruteForceResult> {
    graph.check_vertex(start)?;
    let mut best: Option<BruteForceResult> = None;
    for (count, lasso) in enumerate_simple_lassos(graph, start).enumerate() {
        if count as u64 >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let v = lasso_value(&lasso, graph, horizon)?;
        let better = match &best {
            None => true,
            Some(b) => match v.value.cmp(&b.value) {
                Ordering::Greater => true,
                Ordering::Equal => lasso < b.best,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some(BruteForceResult {
                value: v.value,
                best: lasso,
                attained: v.attained,
            });
        }
    }
    Ok(best.expect("a total graph has a lasso from every vertex"))
}

/// A simple lasso at least as good as `lasso`.
///
/// With `ν` the slope of the input's supporting line, its cycle
/// decomposition is replayed: cycles of mean below `ν` are cut out, and the
/// lasso is closed on the first cycle of mean at least `ν`. The utilities
/// stay above the supporting line, so the value cannot drop.
pub fn reduce_to_simple_lasso(
    lasso: &Lasso,
    graph: &WeightedGraph,
    horizon: &Rational,
) -> Result<Lasso> {
    let nu = lasso_value(lasso, graph, horizon)?.nu;
    first_good_cycle(lasso, graph, &nu)
}
