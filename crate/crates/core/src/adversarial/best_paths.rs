//! Tables of `⪰`-maximal pairs of bounded-length paths.

use crate::adversarial::pairs::{maximal_set, RankedPair};
use crate::adversarial::slope::{slope_constraint, SlopeInterval};
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::path::{utility_sequence, FinitePath};
use crate::rational::{from_u64, Rational};

/// `D[t][v]` for `t` in `t0 ..= t0 + steps`: the antichain of pairs of
/// paths of length `t − t0` from the origin vertex to `v`.
///
/// Witnesses are relative to the origin: they start at the origin vertex
/// and have exactly `t − t0` edges. Pairs with an infeasible constraint are
/// never stored, since such a path cannot be part of a plan of value at
/// least 0.
#[derive(Debug, Clone)]
pub struct BestPathsTable {
    t0: u64,
    origin: usize,
    layers: Vec<Vec<Vec<RankedPair>>>,
}

impl BestPathsTable {
    pub fn t0(&self) -> u64 {
        self.t0
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    /// Last time covered by the table.
    pub fn last_time(&self) -> u64 {
        self.t0 + self.layers.len() as u64 - 1
    }

    /// `D[t][v]`; empty outside the covered time range.
    pub fn entry(&self, t: u64, v: usize) -> &[RankedPair] {
        if t < self.t0 {
            return &[];
        }
        self.layers
            .get((t - self.t0) as usize)
            .map_or(&[], |layer| layer[v].as_slice())
    }

    /// Size of the largest entry.
    pub fn max_entry_len(&self) -> usize {
        self.layers
            .iter()
            .flatten()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, usize, &RankedPair)> + '_ {
        self.layers.iter().enumerate().flat_map(move |(i, layer)| {
            layer
                .iter()
                .enumerate()
                .flat_map(move |(v, entry)| entry.iter().map(move |p| (self.t0 + i as u64, v, p)))
        })
    }
}

/// The table for `|V|` steps.
pub fn best_paths(
    graph: &WeightedGraph,
    t0: u64,
    v0: usize,
    u0: &Rational,
    psi0: &SlopeInterval,
    horizon: &Rational,
) -> BestPathsTable {
    best_paths_steps(graph, t0, v0, u0, psi0, horizon, graph.vertex_count())
}

/// The table for `steps` steps.
///
/// Layer `i` is obtained from layer `i − 1` by extending every pair along
/// every edge, adding the constraint of the new utility at time `t0 + i`,
/// and keeping the `⪰`-maximal pairs per vertex.
///
/// Panics if an entry ever holds more than `|V|^4` pairs: each maximal pair
/// is pinned down by its down-point, and there are at most that many.
pub fn best_paths_steps(
    graph: &WeightedGraph,
    t0: u64,
    v0: usize,
    u0: &Rational,
    psi0: &SlopeInterval,
    horizon: &Rational,
    steps: usize,
) -> BestPathsTable {
    let n = graph.vertex_count();
    let bound = n.pow(4);
    let mut first = vec![Vec::new(); n];
    if psi0.is_feasible() {
        first[v0].push(RankedPair::new(
            u0.clone(),
            psi0.clone(),
            FinitePath::new(v0),
        ));
    }
    let mut layers = vec![first];
    for i in 1..=steps as u64 {
        let t = t0 + i;
        let previous = layers.last().unwrap();
        let mut candidates: Vec<Vec<RankedPair>> = vec![Vec::new(); n];
        for (v1, entry) in previous.iter().enumerate() {
            for pair in entry {
                for (v, w) in graph.successors(v1) {
                    let u = &pair.utility + w;
                    let psi = pair.constraint.intersect(&slope_constraint(&u, t, horizon));
                    if !psi.is_feasible() {
                        continue;
                    }
                    let mut witness = pair.witness.clone();
                    witness.push(*v);
                    candidates[*v].push(RankedPair::new(u, psi, witness));
                }
            }
        }
        let layer: Vec<Vec<RankedPair>> = candidates.into_iter().map(maximal_set).collect();
        for (v, entry) in layer.iter().enumerate() {
            assert!(
                entry.len() <= bound,
                "entry D[{t}][{v}] holds {} pairs, above the bound {bound}",
                entry.len()
            );
        }
        layers.push(layer);
    }
    BestPathsTable {
        t0,
        origin: v0,
        layers,
    }
}

/// The two constraint-active points of a path: `t_L < T` maximises
/// `u_t / (t − T)` (the tightest lower bound on the slope) and `t_R > T`
/// minimises it (the tightest upper bound). Earliest times win ties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownPoint {
    pub left_time: u64,
    pub left_vertex: usize,
    pub right: Option<(u64, usize)>,
}

/// The down-point of `path` read from time 0.
pub fn down_point(
    path: &FinitePath,
    graph: &WeightedGraph,
    horizon: &Rational,
) -> Result<DownPoint> {
    let utilities = utility_sequence(path, graph)?;
    let mut left: Option<(Rational, u64)> = None;
    let mut right: Option<(Rational, u64)> = None;
    for (t, u) in utilities.values().iter().enumerate() {
        let t = t as u64;
        let offset = from_u64(t) - horizon;
        if offset == Rational::from_integer(0.into()) {
            continue;
        }
        let ratio = u / &offset;
        if from_u64(t) < *horizon {
            if left.as_ref().is_none_or(|(best, _)| ratio > *best) {
                left = Some((ratio, t));
            }
        } else if right.as_ref().is_none_or(|(best, _)| ratio < *best) {
            right = Some((ratio, t));
        }
    }
    let (_, left_time) = left.expect("time 0 precedes a positive horizon");
    let vertex = |t: u64| path.vertices()[t as usize];
    Ok(DownPoint {
        left_time,
        left_vertex: vertex(left_time),
        right: right.map(|(_, t)| (t, vertex(t))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversarial::slope::path_constraint;
    use crate::rational::int;

    #[test]
    fn self_loop_singletons() {
        let g = WeightedGraph::from_int_edges(1, &[(0, 0, 3)]).unwrap();
        let table = best_paths(&g, 0, 0, &int(0), &SlopeInterval::at_least(int(0)), &int(2));
        for i in 0..=1u64 {
            let entry = table.entry(i, 0);
            assert_eq!(entry.len(), 1);
            assert_eq!(entry[0].utility, int(3 * i as i64));
        }
    }

    #[test]
    fn constraints_match_witnesses() {
        let g = WeightedGraph::from_int_edges(
            3,
            &[
                (0, 1, 2),
                (0, 2, -1),
                (1, 0, -3),
                (1, 2, 1),
                (2, 0, 2),
                (2, 2, -1),
            ],
        )
        .unwrap();
        let horizon = int(2);
        let psi0 = SlopeInterval::at_least(int(0));
        let table = best_paths(&g, 0, 0, &int(0), &psi0, &horizon);
        assert!(table.pairs().count() > 0);
        for (t, v, pair) in table.pairs() {
            assert_eq!(pair.witness.len() as u64, t);
            assert_eq!(pair.witness.end(), v);
            let u = utility_sequence(&pair.witness, &g).unwrap();
            assert_eq!(u.last(), &pair.utility);
            assert_eq!(path_constraint(u.values(), 0, &horizon), pair.constraint);
        }
    }

    #[test]
    fn down_point_of_dip() {
        let g = WeightedGraph::from_int_edges(2, &[(0, 1, -2), (1, 0, 3)]).unwrap();
        let p = FinitePath::from_vertices(vec![0, 1, 0, 1]);
        // u = 0, -2, 1, -1 against T = 2: lower bounds 0 and 2, upper -1.
        let d = down_point(&p, &g, &int(2)).unwrap();
        assert_eq!((d.left_time, d.left_vertex), (1, 1));
        assert_eq!(d.right, Some((3, 1)));
    }
}
