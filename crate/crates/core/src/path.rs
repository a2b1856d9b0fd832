//! Finite paths, lassos and their utility sequences.
//!
//! Utilities are indexed by the number of edges traversed: `u_0 = 0` and
//! `u_t` is the sum of the first `t` edge weights. Stopping at time `t`
//! therefore collects exactly `t` edges.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::{from_usize, Rational};

/// A finite path stored as its vertex sequence (`len() + 1` vertices).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitePath {
    vertices: Vec<usize>,
}

impl FinitePath {
    /// The empty path sitting at `start`.
    pub fn new(start: usize) -> Self {
        FinitePath {
            vertices: vec![start],
        }
    }

    /// Builds a path from its vertex sequence. Panics on an empty sequence.
    pub fn from_vertices(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        FinitePath { vertices }
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn push(&mut self, v: usize) {
        self.vertices.push(v);
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// `self` followed by `other`; `other` must start where `self` ends.
    pub fn concat(&self, other: &FinitePath) -> FinitePath {
        assert_eq!(self.end(), other.start(), "paths do not chain");
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        FinitePath { vertices }
    }

    /// The first `k` edges.
    pub fn prefix(&self, k: usize) -> FinitePath {
        FinitePath {
            vertices: self.vertices[..=k].to_vec(),
        }
    }

    /// The edges from index `k` on.
    pub fn suffix(&self, k: usize) -> FinitePath {
        FinitePath {
            vertices: self.vertices[k..].to_vec(),
        }
    }

    /// True if no vertex repeats.
    pub fn is_acyclic(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.vertices.len());
        self.vertices.iter().all(|v| seen.insert(*v))
    }

    pub fn validate(&self, graph: &WeightedGraph) -> Result<()> {
        graph.check_vertex(self.start())?;
        for (source, target) in self.edges() {
            if !graph.has_edge(source, target) {
                return Err(Error::InvalidPath {
                    from: source,
                    to: target,
                });
            }
        }
        Ok(())
    }

    /// Sum of the edge weights.
    pub fn weight(&self, graph: &WeightedGraph) -> Result<Rational> {
        let mut total = Rational::zero();
        for (source, target) in self.edges() {
            total += graph.weight(source, target).ok_or(Error::InvalidPath {
                from: source,
                to: target,
            })?;
        }
        Ok(total)
    }
}

impl fmt::Display for FinitePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `u_0, u_1, …, u_n` for a path of `n` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtilitySequence(Vec<Rational>);

impl UtilitySequence {
    pub fn from_values(values: Vec<Rational>) -> Self {
        assert!(!values.is_empty());
        UtilitySequence(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, t: u64) -> Result<&Rational> {
        usize::try_from(t)
            .ok()
            .and_then(|i| self.0.get(i))
            .ok_or(Error::SequenceTooShort {
                time: t,
                len: self.0.len(),
            })
    }

    pub fn last(&self) -> &Rational {
        self.0.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn utility_sequence(path: &FinitePath, graph: &WeightedGraph) -> Result<UtilitySequence> {
    graph.check_vertex(path.start())?;
    let mut values = Vec::with_capacity(path.vertices().len());
    let mut acc = Rational::zero();
    values.push(acc.clone());
    for (source, target) in path.edges() {
        acc += graph.weight(source, target).ok_or(Error::InvalidPath {
            from: source,
            to: target,
        })?;
        values.push(acc.clone());
    }
    Ok(UtilitySequence(values))
}

/// An infinite path `stem · cycle^ω`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lasso {
    stem: FinitePath,
    cycle: FinitePath,
}

impl Lasso {
    pub fn new(stem: FinitePath, cycle: FinitePath) -> Result<Self> {
        if cycle.is_empty() || cycle.start() != cycle.end() || stem.end() != cycle.start() {
            return Err(Error::InvalidLasso);
        }
        Ok(Lasso { stem, cycle })
    }

    pub fn stem(&self) -> &FinitePath {
        &self.stem
    }

    pub fn cycle(&self) -> &FinitePath {
        &self.cycle
    }

    pub fn start(&self) -> usize {
        self.stem.start()
    }

    pub fn stem_len(&self) -> usize {
        self.stem.len()
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn validate(&self, graph: &WeightedGraph) -> Result<()> {
        self.stem.validate(graph)?;
        self.cycle.validate(graph)
    }

    /// Simple iff every strict prefix of `stem · cycle` is acyclic, i.e. the
    /// lasso is the path of a stationary plan.
    pub fn is_simple(&self) -> bool {
        let full = self.stem.concat(&self.cycle);
        let vs = full.vertices();
        FinitePath::from_vertices(vs[..vs.len() - 1].to_vec()).is_acyclic()
    }

    /// Vertex reached after `t` steps.
    pub fn vertex_at(&self, t: usize) -> usize {
        let a = self.stem.len();
        if t <= a {
            self.stem.vertices()[t]
        } else {
            self.cycle.vertices()[(t - a) % self.cycle.len()]
        }
    }

    /// The first `n` edges of the infinite path.
    pub fn unroll(&self, n: usize) -> FinitePath {
        FinitePath::from_vertices((0..=n).map(|t| self.vertex_at(t)).collect())
    }

    pub fn cycle_weight(&self, graph: &WeightedGraph) -> Result<Rational> {
        self.cycle.weight(graph)
    }

    /// `M_C`, the mean weight of the cycle.
    pub fn cycle_mean(&self, graph: &WeightedGraph) -> Result<Rational> {
        Ok(self.cycle.weight(graph)? / from_usize(self.cycle.len()))
    }

    pub fn utilities(&self, graph: &WeightedGraph) -> Result<LassoUtilities> {
        let stem = utility_sequence(&self.stem, graph)?.0;
        let cycle = utility_sequence(&self.cycle, graph)?.0;
        Ok(LassoUtilities { stem, cycle })
    }
}

impl fmt::Display for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.stem, self.cycle)
    }
}

/// Precomputed prefix sums of a lasso, giving `u_t` in O(1) for any `t`.
#[derive(Debug, Clone)]
pub struct LassoUtilities {
    /// `u_0 … u_|A|` along the stem.
    stem: Vec<Rational>,
    /// Prefix sums along one lap of the cycle, starting at 0.
    cycle: Vec<Rational>,
}

impl LassoUtilities {
    pub fn stem_len(&self) -> usize {
        self.stem.len() - 1
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len() - 1
    }

    /// `S_C`.
    pub fn cycle_weight(&self) -> &Rational {
        self.cycle.last().unwrap()
    }

    pub fn cycle_mean(&self) -> Rational {
        self.cycle_weight() / from_usize(self.cycle_len())
    }

    pub fn at(&self, t: u64) -> Rational {
        let a = self.stem_len() as u64;
        if t <= a {
            return self.stem[t as usize].clone();
        }
        let c = self.cycle_len() as u64;
        let laps = (t - a) / c;
        let offset = ((t - a) % c) as usize;
        let base = self.stem.last().unwrap() + &self.cycle[offset];
        if laps == 0 {
            base
        } else {
            base + self.cycle_weight() * crate::rational::from_u64(laps)
        }
    }

    /// `u_0 … u_n`.
    pub fn prefix(&self, n: u64) -> UtilitySequence {
        UtilitySequence((0..=n).map(|t| self.at(t)).collect())
    }
}

/// `u_t` of the infinite path `stem · cycle^ω`.
pub fn lasso_utility_at(lasso: &Lasso, graph: &WeightedGraph, t: u64) -> Result<Rational> {
    Ok(lasso.utilities(graph)?.at(t))
}
