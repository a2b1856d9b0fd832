//! Enumeration of simple lassos, the paths of stationary plans.

use crate::graph::WeightedGraph;
use crate::path::{FinitePath, Lasso};

/// Pull-based depth-first enumeration of the simple lassos from a vertex.
///
/// The search walks simple paths; every edge that returns to a vertex on the
/// current path closes one lasso. Lassos come out in lexicographic order of
/// their vertex sequences, each exactly once.
#[derive(Debug, Clone)]
pub struct SimpleLassos<'a> {
    graph: &'a WeightedGraph,
    /// Current simple path with the next successor index to try per vertex.
    stack: Vec<(usize, usize)>,
    position: Vec<Option<usize>>,
}

impl<'a> SimpleLassos<'a> {
    pub fn new(graph: &'a WeightedGraph, start: usize) -> Self {
        let mut position = vec![None; graph.vertex_count()];
        position[start] = Some(0);
        SimpleLassos {
            graph,
            stack: vec![(start, 0)],
            position,
        }
    }
}

impl Iterator for SimpleLassos<'_> {
    type Item = Lasso;

    fn next(&mut self) -> Option<Lasso> {
        loop {
            let (v, next) = *self.stack.last()?;
            let successors = self.graph.successors(v);
            if next == successors.len() {
                self.stack.pop();
                self.position[v] = None;
                continue;
            }
            self.stack.last_mut().unwrap().1 += 1;
            let target = successors[next].0;
            match self.position[target] {
                Some(p) => {
                    let vertices: Vec<usize> = self.stack.iter().map(|(v, _)| *v).collect();
                    let stem = FinitePath::from_vertices(vertices[..=p].to_vec());
                    let mut cycle = vertices[p..].to_vec();
                    cycle.push(target);
                    return Some(
                        Lasso::new(stem, FinitePath::from_vertices(cycle))
                            .expect("closed walk by construction"),
                    );
                }
                None => {
                    self.position[target] = Some(self.stack.len());
                    self.stack.push((target, 0));
                }
            }
        }
    }
}

pub fn enumerate_simple_lassos(graph: &WeightedGraph, start: usize) -> SimpleLassos<'_> {
    SimpleLassos::new(graph, start)
}
