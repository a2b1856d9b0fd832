//! Optimal expected utility under a given finite-support stopping
//! distribution.
//!
//! With support `t_1 < … < t_k` and probabilities `p_1 … p_k`, the expected
//! utility telescopes into `Σ_i (p_i + … + p_k)·(u_{t_i} − u_{t_{i-1}})`
//! with `t_0 = 0`. Each bracket is the weight of a block of `t_i − t_{i-1}`
//! edges, whose best value between two vertices is an entry of a max-plus
//! power of the transition matrix. The problem becomes a longest path
//! through `k` layers.

use num_traits::Zero;

use crate::distribution::StoppingDistribution;
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::maxplus::{MaxPlusMatrix, PowerCache};
use crate::path::FinitePath;
use crate::rational::Rational;

/// Support time beyond which [`specified_value`] skips the witness path.
pub const DEFAULT_WITNESS_BOUND: u64 = 10_000;

/// One hop between consecutive layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerHop {
    /// Number of graph transitions the hop stands for.
    pub span: u64,
    /// Remaining probability mass `p_i + … + p_k`.
    pub factor: Rational,
    /// `factor · M^span`, entrywise.
    pub weights: MaxPlusMatrix,
}

/// Vertices `V × {0..k}`; an edge from layer `i` to layer `i + 1` exists
/// where the hop matrix is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    pub vertex_count: usize,
    pub hops: Vec<LayerHop>,
}

fn build_with_cache(
    graph: &WeightedGraph,
    dist: &StoppingDistribution,
    cache: &mut PowerCache,
) -> LayeredGraph {
    let mut remaining = dist.mass();
    let mut previous = 0u64;
    let mut hops = Vec::with_capacity(dist.points().len());
    for (t, p) in dist.points() {
        let span = t - previous;
        let power = cache.power(span);
        let n = power.dim();
        let mut weights = MaxPlusMatrix::bottom(n);
        for i in 0..n {
            for j in 0..n {
                weights.set(i, j, power.get(i, j).map(|x| x * &remaining));
            }
        }
        hops.push(LayerHop {
            span,
            factor: remaining.clone(),
            weights,
        });
        remaining -= p;
        previous = *t;
    }
    LayeredGraph {
        vertex_count: graph.vertex_count(),
        hops,
    }
}

pub fn build_layered_graph(graph: &WeightedGraph, dist: &StoppingDistribution) -> LayeredGraph {
    build_with_cache(graph, dist, &mut PowerCache::new(graph))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecifiedResult {
    pub value: Rational,
    /// A path of `t_k` edges attaining `value`, when `t_k` is within the
    /// witness bound.
    pub witness: Option<FinitePath>,
}

/// `sup` over plans from `start` of `E_δ(u)`.
///
/// A witness path is produced when the largest support time is at most
/// `witness_bound`; it is expanded hop by hop from the cached squarings.
pub fn specified_value(
    graph: &WeightedGraph,
    start: usize,
    dist: &StoppingDistribution,
    witness_bound: u64,
) -> Result<SpecifiedResult> {
    graph.check_vertex(start)?;
    let mut cache = PowerCache::new(graph);
    let layered = build_with_cache(graph, dist, &mut cache);
    let n = graph.vertex_count();

    // best[v]: best layered weight reaching v in the current layer;
    // parent[i][v]: predecessor of v in layer i + 1.
    let mut best: Vec<Option<Rational>> = vec![None; n];
    best[start] = Some(Rational::zero());
    let mut parent: Vec<Vec<usize>> = Vec::with_capacity(layered.hops.len());
    for hop in &layered.hops {
        let mut next: Vec<Option<Rational>> = vec![None; n];
        let mut from = vec![usize::MAX; n];
        for (u, bu) in best.iter().enumerate() {
            let Some(bu) = bu else { continue };
            for v in 0..n {
                let Some(w) = hop.weights.get(u, v) else {
                    continue;
                };
                let candidate = bu + w;
                if next[v].as_ref().is_none_or(|cur| candidate > *cur) {
                    next[v] = Some(candidate);
                    from[v] = u;
                }
            }
        }
        best = next;
        parent.push(from);
    }
    let (end, value) = best
        .iter()
        .enumerate()
        .filter_map(|(v, b)| b.as_ref().map(|b| (v, b)))
        .fold(None::<(usize, &Rational)>, |acc, (v, b)| match acc {
            Some((_, a)) if a >= b => acc,
            _ => Some((v, b)),
        })
        .expect("graph is total");
    let value = value / dist.mass();

    let witness = (dist.max_time() <= witness_bound).then(|| {
        let mut layer_vertices = vec![end];
        let mut v = end;
        for from in parent.iter().rev() {
            v = from[v];
            layer_vertices.push(v);
        }
        layer_vertices.reverse();
        let mut path = FinitePath::new(start);
        for (hop, pair) in layered.hops.iter().zip(layer_vertices.windows(2)) {
            let piece = cache
                .expand(hop.span, pair[0], pair[1])
                .expect("finite hop entry has a path");
            path = path.concat(&piece);
        }
        path
    });
    Ok(SpecifiedResult { value, witness })
}
