//! Stack-based cycle decomposition of paths, and the cycle surgery that turns
//! a lasso into a simple one.
//!
//! Edges are pushed one by one onto a stack of vertices; when an edge reaches
//! a vertex already on the stack, the closed simple cycle is popped and
//! emitted. The stack always holds an acyclic path.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::path::{FinitePath, Lasso};
use crate::rational::{from_usize, Rational};

/// A simple cycle popped off the stack, with the indices of the input edges
/// it consists of (increasing, not necessarily contiguous).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposedCycle {
    pub cycle: FinitePath,
    pub positions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// Cycles in order of closure.
    pub cycles: Vec<DecomposedCycle>,
    /// What is left on the stack: an acyclic prefix-shaped path.
    pub residual: FinitePath,
    pub residual_positions: Vec<usize>,
    /// Largest number of edges the stack held at any point.
    pub max_stack_len: usize,
}

impl CycleDecomposition {
    /// Merges every emitted edge back by its original index.
    pub fn reconstruct(&self) -> FinitePath {
        let mut edges: Vec<(usize, (usize, usize))> = Vec::new();
        for c in &self.cycles {
            edges.extend(c.positions.iter().copied().zip(c.cycle.edges()));
        }
        edges.extend(
            self.residual_positions
                .iter()
                .copied()
                .zip(self.residual.edges()),
        );
        edges.sort_by_key(|(i, _)| *i);
        let mut vertices = vec![self.residual.start()];
        for (_, (_, target)) in edges {
            vertices.push(target);
        }
        FinitePath::from_vertices(vertices)
    }
}

/// Incremental form of the decomposition.
#[derive(Debug, Clone)]
pub struct CycleStack {
    /// `(vertex, index of the edge that pushed it)`; the bottom entry has none.
    stack: Vec<(usize, Option<usize>)>,
    /// Stack slot of each vertex currently on the stack.
    slot: Vec<Option<usize>>,
    pushed: usize,
    max_len: usize,
}

impl CycleStack {
    pub fn new(start: usize, vertex_bound: usize) -> Self {
        let mut slot = vec![None; vertex_bound.max(start + 1)];
        slot[start] = Some(0);
        CycleStack {
            stack: vec![(start, None)],
            slot,
            pushed: 0,
            max_len: 0,
        }
    }

    pub fn top(&self) -> usize {
        self.stack.last().unwrap().0
    }

    /// Current stack content as a path.
    pub fn path(&self) -> FinitePath {
        FinitePath::from_vertices(self.stack.iter().map(|(v, _)| *v).collect())
    }

    fn positions_from(&self, slot: usize) -> Vec<usize> {
        self.stack[slot + 1..]
            .iter()
            .map(|(_, i)| i.unwrap())
            .collect()
    }

    /// Pushes the edge `top() -> target`. Returns the cycle it closes, if
    /// any, together with the stack slot where that cycle starts.
    pub fn push(&mut self, target: usize) -> Option<(usize, DecomposedCycle)> {
        let index = self.pushed;
        self.pushed += 1;
        if target >= self.slot.len() {
            self.slot.resize(target + 1, None);
        }
        match self.slot[target] {
            Some(s) => {
                let mut vertices: Vec<usize> = self.stack[s..].iter().map(|(v, _)| *v).collect();
                vertices.push(target);
                let mut positions = self.positions_from(s);
                positions.push(index);
                for (v, _) in self.stack.drain(s + 1..) {
                    self.slot[v] = None;
                }
                Some((
                    s,
                    DecomposedCycle {
                        cycle: FinitePath::from_vertices(vertices),
                        positions,
                    },
                ))
            }
            None => {
                self.slot[target] = Some(self.stack.len());
                self.stack.push((target, Some(index)));
                self.max_len = self.max_len.max(self.stack.len() - 1);
                None
            }
        }
    }
}

pub fn cycle_decomposition(path: &FinitePath) -> CycleDecomposition {
    let bound = path.vertices().iter().max().unwrap() + 1;
    let mut stack = CycleStack::new(path.start(), bound);
    let mut cycles = Vec::new();
    for &v in &path.vertices()[1..] {
        if let Some((_, c)) = stack.push(v) {
            cycles.push(c);
        }
    }
    CycleDecomposition {
        cycles,
        residual: stack.path(),
        residual_positions: stack.positions_from(0),
        max_stack_len: stack.max_len,
    }
}

/// Walks the cycle decomposition of `lasso` (as an infinite path) and closes
/// a simple lasso on the first cycle whose mean weight is at least
/// `threshold`; every earlier cycle is dropped.
///
/// If the lasso's utilities lie above a line of slope `threshold`, so do the
/// utilities of the result. Fails if no such cycle turns up, which cannot
/// happen when the lasso's own cycle mean reaches `threshold`.
pub fn first_good_cycle(
    lasso: &Lasso,
    graph: &WeightedGraph,
    threshold: &Rational,
) -> Result<Lasso> {
    lasso.validate(graph)?;
    let n = graph.vertex_count();
    let mut stack = CycleStack::new(lasso.start(), n);
    // The stack contents at cycle-aligned times stabilise after at most |V|
    // laps, after which every lap closes the same cycles.
    let horizon = lasso.stem_len() + (n + 2) * lasso.cycle_len();
    for t in 1..=horizon {
        if let Some((slot, closed)) = stack.push(lasso.vertex_at(t)) {
            let mean = closed.cycle.weight(graph)? / from_usize(closed.cycle.len());
            if &mean >= threshold {
                let stem = FinitePath::from_vertices(stack.path().vertices()[..=slot].to_vec());
                return Lasso::new(stem, closed.cycle);
            }
        }
    }
    Err(Error::InvalidParameter(format!(
        "no cycle with mean weight at least {threshold} in lasso {lasso}"
    )))
}
