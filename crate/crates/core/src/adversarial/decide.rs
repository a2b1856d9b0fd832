//! Deciding whether some plan has adversarial value at least 0.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::adversarial::best_paths::{best_paths, best_paths_steps};
use crate::adversarial::slope::slope_constraint;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::path::Lasso;
use crate::rational::{from_usize, Rational};

/// Evidence for a nonnegative value: every utility of `lasso` lies on or
/// above the line `slope · (t − T)`, and the cycle mean is at least `slope`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub lasso: Lasso,
    pub slope: Rational,
}

/// Searches for a lasso `A·C^ω` of value at least 0 from `start`, with
/// `|A| + |C| ≤ |V|` (the lasso need not be simple).
///
/// A plan has value at least 0 iff some line through `(T, 0)` stays below
/// all of its utilities. The first table holds the maximal pairs of stems
/// from `start`, beginning with the constraint of `u_0 = 0`; for each stem
/// pair ending at `v̂` a second table explores the cycles back to `v̂`. A
/// stem/cycle combination succeeds when its accumulated slope interval
/// still admits a slope no larger than the cycle mean.
///
/// The candidates of each stem length are examined in parallel; the first
/// success in sequential order is returned, so the result is deterministic.
pub fn exists_positive_path(
    graph: &WeightedGraph,
    start: usize,
    horizon: &Rational,
) -> Result<Option<Certificate>> {
    graph.check_vertex(start)?;
    if !horizon.is_positive() {
        return Err(Error::NonPositiveHorizon(horizon.clone()));
    }
    let n = graph.vertex_count();
    let psi0 = slope_constraint(&Rational::zero(), 0, horizon);
    let stems = best_paths(graph, 0, start, &Rational::zero(), &psi0, horizon);
    for i in 0..=n as u64 {
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..stems.entry(i, v).len()).map(move |k| (v, k)))
            .collect();
        let found = candidates.par_iter().find_map_first(|&(hat_v, k)| {
            let stem = &stems.entry(i, hat_v)[k];
            let cycles = best_paths_steps(
                graph,
                i,
                hat_v,
                &stem.utility,
                &stem.constraint,
                horizon,
                n - i as usize,
            );
            for j in 1..=(n as u64 - i) {
                for closing in cycles.entry(i + j, hat_v) {
                    let mean = (&closing.utility - &stem.utility) / from_usize(j as usize);
                    if let Some(slope) = closing.constraint.highest_at_most(&mean) {
                        let lasso = Lasso::new(stem.witness.clone(), closing.witness.clone())
                            .expect("cycle closes at the stem end");
                        return Some(Certificate { lasso, slope });
                    }
                }
            }
            None
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
