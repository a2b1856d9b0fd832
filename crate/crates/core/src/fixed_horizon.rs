//! Fixed-horizon planning: the stopping time is a Dirac at `T`.
//!
//! Also hosts stationary plans, their brute-force optimisation under an
//! arbitrary stopping distribution, and the gadget graph on which that
//! optimisation encodes the simple-cycle-through-two-vertices problem.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::distribution::{expected_utility, StoppingDistribution};
use crate::error::{Error, Result};
use crate::graph::{Edge, WeightedGraph};
use crate::oracle::SimpleLassos;
use crate::path::{FinitePath, Lasso};
use crate::rational::{from_usize, int, Rational};

/// Default cap on the number of stationary plans [`best_stationary`] may
/// evaluate.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1_000_000;

/// Best weight over paths of exactly `horizon` edges from `start`, with a
/// path attaining it.
///
/// Bellman recursion `A_t(v) = max_{v'} w(v, v') + A_{t-1}(v')`, `A_0 = 0`.
/// Among maximising successors the smallest vertex id is chosen.
pub fn value_iteration(
    graph: &WeightedGraph,
    start: usize,
    horizon: u64,
) -> Result<(Rational, FinitePath)> {
    graph.check_vertex(start)?;
    let n = graph.vertex_count();
    let mut values = vec![Rational::zero(); n];
    // choice[t - 1][v]: successor of v on a best path of t edges.
    let mut choice: Vec<Vec<usize>> = Vec::with_capacity(horizon as usize);
    for _ in 0..horizon {
        let mut next_values = Vec::with_capacity(n);
        let mut next_choice = Vec::with_capacity(n);
        for v in graph.vertices() {
            let mut best: Option<(Rational, usize)> = None;
            for (t, w) in graph.successors(v) {
                let candidate = w + &values[*t];
                if best.as_ref().is_none_or(|(b, _)| candidate > *b) {
                    best = Some((candidate, *t));
                }
            }
            let (value, succ) = best.expect("graph is total");
            next_values.push(value);
            next_choice.push(succ);
        }
        values = next_values;
        choice.push(next_choice);
    }
    let mut path = FinitePath::new(start);
    let mut v = start;
    for step in choice.iter().rev() {
        v = step[v];
        path.push(v);
    }
    Ok((values[start].clone(), path))
}

/// One outgoing edge per vertex, stored as the chosen successor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StationaryPlan {
    choices: Vec<usize>,
}

impl StationaryPlan {
    pub fn new(graph: &WeightedGraph, choices: Vec<usize>) -> Result<Self> {
        if choices.len() != graph.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "plan has {} choices for {} vertices",
                choices.len(),
                graph.vertex_count()
            )));
        }
        for (v, &t) in choices.iter().enumerate() {
            if !graph.has_edge(v, t) {
                return Err(Error::InvalidPath { from: v, to: t });
            }
        }
        Ok(StationaryPlan { choices })
    }

    /// The plan that follows `lasso` and sends every vertex off the lasso to
    /// its smallest successor. Fails if the lasso leaves some vertex in two
    /// different directions.
    pub fn from_lasso(graph: &WeightedGraph, lasso: &Lasso) -> Result<Self> {
        lasso.validate(graph)?;
        let mut choices: Vec<Option<usize>> = vec![None; graph.vertex_count()];
        let full = lasso.stem().concat(lasso.cycle());
        for (s, t) in full.edges() {
            match choices[s] {
                Some(prev) if prev != t => {
                    return Err(Error::InvalidParameter(format!(
                        "lasso {lasso} leaves vertex {s} towards both {prev} and {t}"
                    )))
                }
                _ => choices[s] = Some(t),
            }
        }
        let choices = choices
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.unwrap_or_else(|| graph.successors(v)[0].0))
            .collect();
        Ok(StationaryPlan { choices })
    }

    pub fn choice(&self, v: usize) -> usize {
        self.choices[v]
    }

    pub fn choices(&self) -> &[usize] {
        &self.choices
    }

    /// The simple lasso traced from `start`.
    pub fn lasso_from(&self, start: usize) -> Lasso {
        let mut position = vec![None; self.choices.len()];
        let mut vertices = vec![start];
        position[start] = Some(0);
        let mut v = start;
        loop {
            v = self.choices[v];
            if let Some(p) = position[v] {
                let stem = FinitePath::from_vertices(vertices[..=p].to_vec());
                let mut cycle = vertices[p..].to_vec();
                cycle.push(v);
                return Lasso::new(stem, FinitePath::from_vertices(cycle))
                    .expect("closed walk by construction");
            }
            position[v] = Some(vertices.len());
            vertices.push(v);
        }
    }
}

/// Best expected utility under `dist` over all stationary plans from `start`.
///
/// Exhaustive: each simple lasso from `start` is the trace of some
/// stationary plan and vice versa, so the lassos are enumerated and counted
/// against `budget`. Ties go to the lexicographically smallest plan.
pub fn best_stationary(
    graph: &WeightedGraph,
    start: usize,
    dist: &StoppingDistribution,
    budget: u64,
) -> Result<(Rational, StationaryPlan)> {
    graph.check_vertex(start)?;
    let mut best: Option<(Rational, StationaryPlan)> = None;
    for (count, lasso) in SimpleLassos::new(graph, start).enumerate() {
        if count as u64 >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let value = expected_utility(&lasso.utilities(graph)?, dist)?;
        let plan = StationaryPlan::from_lasso(graph, &lasso)?;
        let better = match &best {
            None => true,
            Some((v, p)) => match value.cmp(v) {
                Ordering::Greater => true,
                Ordering::Equal => plan < *p,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some((value, plan));
        }
    }
    Ok(best.expect("a total graph has a lasso from every vertex"))
}

/// The hardness gadget built around a base graph and two of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NpGadget {
    pub graph: WeightedGraph,
    pub start: usize,
    pub sink: usize,
    /// `n + 1` for a base graph on `n` vertices.
    pub horizon: u64,
    /// `n + 2`.
    pub threshold: Rational,
}

/// Adds `start` (id `n`) and `sink` (id `n + 1`) to the base graph.
///
/// All weights become 0 except edges leaving `v2` (weight 1) and the new
/// edge `v1 -> sink` (weight `n + 1`); `sink` has a 0 self-loop and `start`
/// gets a 0-weight edge to every base successor of `v1`. Some stationary
/// plan from `start` reaches utility `n + 2` at time `n + 1` exactly when
/// the base graph has a simple cycle through `v1` and `v2`.
pub fn build_np_gadget(base: &WeightedGraph, v1: usize, v2: usize) -> Result<NpGadget> {
    base.check_vertex(v1)?;
    base.check_vertex(v2)?;
    if v1 == v2 {
        return Err(Error::InvalidParameter(
            "the two gadget vertices must differ".into(),
        ));
    }
    let n = base.vertex_count();
    let (start, sink) = (n, n + 1);
    let mut edges: Vec<Edge> = base
        .edges()
        .map(|e| {
            let w = if e.source == v2 { int(1) } else { int(0) };
            Edge::new(e.source, e.target, w)
        })
        .collect();
    edges.push(Edge::new(v1, sink, from_usize(n + 1)));
    edges.push(Edge::new(sink, sink, int(0)));
    for (t, _) in base.successors(v1) {
        edges.push(Edge::new(start, *t, int(0)));
    }
    Ok(NpGadget {
        graph: WeightedGraph::new(n + 2, edges)?,
        start,
        sink,
        horizon: n as u64 + 1,
        threshold: from_usize(n + 2),
    })
}
