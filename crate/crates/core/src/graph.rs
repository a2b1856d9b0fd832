//! Weighted directed graphs.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A directed edge with its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub weight: Rational,
}

impl Edge {
    pub fn new(source: usize, target: usize, weight: Rational) -> Self {
        Edge {
            source,
            target,
            weight,
        }
    }
}

/// A finite directed graph with exact edge weights.
///
/// Validated on construction: vertex ids lie in `0..vertex_count`, there is at
/// most one edge per ordered pair, and every vertex has an outgoing edge, so
/// every finite path extends to an infinite plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    vertex_count: usize,
    /// Outgoing edges per vertex, sorted by target.
    successors: Vec<Vec<(usize, Rational)>>,
}

impl WeightedGraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut successors: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); vertex_count];
        for edge in edges {
            for vertex in [edge.source, edge.target] {
                if vertex >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex,
                        vertex_count,
                    });
                }
            }
            successors[edge.source].push((edge.target, edge.weight));
        }
        for (source, out) in successors.iter_mut().enumerate() {
            out.sort_by_key(|(target, _)| *target);
            if let Some(w) = out.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::DuplicateEdge {
                    from: source,
                    to: w[0].0,
                });
            }
            if out.is_empty() {
                return Err(Error::DeadEnd(source));
            }
        }
        Ok(WeightedGraph {
            vertex_count,
            successors,
        })
    }

    /// Convenience constructor from integer-weighted triples.
    pub fn from_int_edges(vertex_count: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        Self::new(
            vertex_count,
            edges
                .iter()
                .map(|&(s, t, w)| Edge::new(s, t, crate::rational::int(w))),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    /// Outgoing `(target, weight)` pairs of `v`, sorted by target.
    pub fn successors(&self, v: usize) -> &[(usize, Rational)] {
        &self.successors[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.successors[v].len()
    }

    pub fn weight(&self, source: usize, target: usize) -> Option<&Rational> {
        let out = self.successors.get(source)?;
        out.binary_search_by_key(&target, |(t, _)| *t)
            .ok()
            .map(|i| &out[i].1)
    }

    pub fn has_edge(&self, source: usize, target: usize) -> bool {
        self.weight(source, target).is_some()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(s, out)| out.iter().map(move |(t, w)| Edge::new(s, *t, w.clone())))
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    /// Largest absolute edge weight (`W`).
    pub fn max_abs_weight(&self) -> Rational {
        self.successors
            .iter()
            .flatten()
            .map(|(_, w)| w.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Applies `f` to every weight, keeping the edge set.
    pub fn map_weights(&self, mut f: impl FnMut(&Rational) -> Rational) -> WeightedGraph {
        WeightedGraph {
            vertex_count: self.vertex_count,
            successors: self
                .successors
                .iter()
                .map(|out| out.iter().map(|(t, w)| (*t, f(w))).collect())
                .collect(),
        }
    }

    /// `VertexOutOfRange` unless `vertex` is a vertex of the graph.
    pub fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex,
                vertex_count: self.vertex_count,
            })
        }
    }
}

impl fmt::Display for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertex_count)?;
        for e in self.edges() {
            writeln!(f, "edge {} {} {}", e.source, e.target, e.weight)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn rejects_dead_ends() {
        let err = WeightedGraph::from_int_edges(2, &[(0, 1, 1)]).unwrap_err();
        assert_eq!(err, Error::DeadEnd(1));
    }

    #[test]
    fn rejects_parallel_edges() {
        let err = WeightedGraph::from_int_edges(1, &[(0, 0, 1), (0, 0, 2)]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge { from: 0, to: 0 });
    }

    #[test]
    fn rejects_out_of_range() {
        let err = WeightedGraph::from_int_edges(1, &[(0, 3, 1)]).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { vertex: 3, .. }));
        assert_eq!(
            WeightedGraph::from_int_edges(0, &[]).unwrap_err(),
            Error::EmptyGraph
        );
    }

    #[test]
    fn lookup_and_max_weight() {
        let g = WeightedGraph::from_int_edges(2, &[(0, 1, -7), (1, 0, 3), (0, 0, 2)]).unwrap();
        assert_eq!(g.weight(0, 1), Some(&int(-7)));
        assert_eq!(g.weight(1, 1), None);
        assert_eq!(g.max_abs_weight(), int(7));
        assert_eq!(g.successors(0)[0].0, 0);
        assert_eq!(g.edge_count(), 3);
    }
}
