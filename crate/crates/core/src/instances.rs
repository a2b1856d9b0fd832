//! Instance generators: the two worked example graphs, seeded random graphs
//! and base graphs for the stationary-plan hardness gadget.

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, WeightedGraph};
use crate::rational::int;

/// The cycle-or-exit graph on `n + 1` vertices.
///
/// `v_0 … v_{n-1}` form a cycle with weights `-1, 0, …, 0, +1`; `v_0` can
/// also exit to `v_n` with weight `+1`, and `v_n` loops with weight `-1`.
/// Going around the cycle `k` times and then exiting gives utility 1 at
/// `T = k·n + 1`.
pub fn fig1(n: usize) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be at least 2, got {n}"
        )));
    }
    let mut edges = vec![(0, 1, -1)];
    for i in 1..n - 1 {
        edges.push((i, i + 1, 0));
    }
    edges.push((n - 1, 0, 1));
    edges.push((0, n, 1));
    edges.push((n, n, -1));
    WeightedGraph::from_int_edges(n + 1, &edges)
}

pub const FIG2_DEFAULT_LOOPS: [usize; 3] = [6, 10, 15];

/// Three zero-weight loops through `v_0` plus an exit `v_0 -> v_1` of weight
/// `+1` into a `-1` self-loop.
///
/// A loop of length `L` is expanded into `L - 1` fresh intermediate vertices,
/// numbered after `v_0` and `v_1` in loop order. The lengths must be at least
/// 2, pairwise non-coprime and coprime overall, so that no single loop (or
/// pair) can reach every large enough time but all three together can.
pub fn fig2(loops: [usize; 3]) -> Result<WeightedGraph> {
    if loops.iter().any(|&l| l < 2) {
        return Err(Error::InvalidParameter(format!(
            "loop lengths must be at least 2, got {loops:?}"
        )));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if loops[i].gcd(&loops[j]) == 1 {
                return Err(Error::InvalidParameter(format!(
                    "loop lengths {} and {} are coprime",
                    loops[i], loops[j]
                )));
            }
        }
    }
    if loops[0].gcd(&loops[1]).gcd(&loops[2]) != 1 {
        return Err(Error::InvalidParameter(format!(
            "loop lengths {loops:?} share a common factor"
        )));
    }
    let mut edges = vec![(0, 1, 1), (1, 1, -1)];
    let mut next = 2;
    for &len in &loops {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next, 0));
            prev = next;
            next += 1;
        }
        edges.push((prev, 0, 0));
    }
    WeightedGraph::from_int_edges(next, &edges)
}

/// Parameters of [`random_graph`].
#[derive(Debug, Clone, PartialEq)]
pub struct RandomGraphParams {
    pub vertices: usize,
    /// Weights are drawn uniformly from `[-max_weight, max_weight]`.
    pub max_weight: i64,
    /// Probability of each ordered pair (self-loops included) being an edge.
    pub density: f64,
    pub seed: u64,
}

/// A reproducible random total graph. Vertices left without an outgoing
/// edge receive one to a uniformly chosen target.
pub fn random_graph(params: &RandomGraphParams) -> Result<WeightedGraph> {
    let n = params.vertices;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&params.density) {
        return Err(Error::InvalidParameter(format!(
            "density must lie in [0, 1], got {}",
            params.density
        )));
    }
    if params.max_weight < 0 {
        return Err(Error::InvalidParameter(format!(
            "weight bound must be nonnegative, got {}",
            params.max_weight
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let w = params.max_weight;
    let mut edges = Vec::new();
    for s in 0..n {
        let mut any = false;
        for t in 0..n {
            if rng.gen_bool(params.density) {
                edges.push(Edge::new(s, t, int(rng.gen_range(-w..=w))));
                any = true;
            }
        }
        if !any {
            let t = rng.gen_range(0..n);
            edges.push(Edge::new(s, t, int(rng.gen_range(-w..=w))));
        }
    }
    WeightedGraph::new(n, edges)
}

/// Whether some simple cycle of `graph` visits both `a` and `b` (`a != b`).
///
/// Exhaustive: every simple path from `a` through `b` and back is tried.
pub fn has_simple_cycle_through(graph: &WeightedGraph, a: usize, b: usize) -> bool {
    fn search(
        graph: &WeightedGraph,
        v: usize,
        a: usize,
        b: usize,
        seen_b: bool,
        on_path: &mut [bool],
    ) -> bool {
        for &(t, _) in graph.successors(v) {
            if t == a {
                if seen_b {
                    return true;
                }
                continue;
            }
            if on_path[t] {
                continue;
            }
            on_path[t] = true;
            let found = search(graph, t, a, b, seen_b || t == b, on_path);
            on_path[t] = false;
            if found {
                return true;
            }
        }
        false
    }
    let mut on_path = vec![false; graph.vertex_count()];
    on_path[a] = true;
    search(graph, a, a, b, false, &mut on_path)
}

/// A random total graph on `n >= 2` vertices with 0/1 weights and a planted
/// simple cycle through vertices 0 and 1.
pub fn planted_cycle_base(n: usize, seed: u64) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut others: Vec<usize> = (2..n).collect();
    others.shuffle(&mut rng);
    let extra = rng.gen_range(0..=others.len());
    let mut cycle = vec![0];
    let mut inner: Vec<usize> = others[..extra].to_vec();
    let split = rng.gen_range(0..=inner.len());
    inner.insert(split, 1);
    cycle.extend(inner);
    let mut pairs: Vec<(usize, usize)> = cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .map(|(&s, &t)| (s, t))
        .collect();
    for s in 0..n {
        for t in 0..n {
            if rng.gen_bool(0.25) && !pairs.contains(&(s, t)) {
                pairs.push((s, t));
            }
        }
    }
    let covered: Vec<bool> = (0..n).map(|v| pairs.iter().any(|&(s, _)| s == v)).collect();
    for (v, _) in covered.iter().enumerate().filter(|(_, c)| !**c) {
        pairs.push((v, rng.gen_range(0..n)));
    }
    WeightedGraph::new(n, pairs.into_iter().map(|(s, t)| Edge::new(s, t, int(0))))
}

/// A random total graph on `n >= 2` vertices with no simple cycle through
/// vertices 0 and 1, found by rejection sampling over sparse graphs.
pub fn negative_base(n: usize, seed: u64) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g = random_graph(&RandomGraphParams {
            vertices: n,
            max_weight: 0,
            density: 0.3,
            seed: rng.gen(),
        })?;
        if !has_simple_cycle_through(&g, 0, 1) {
            return Ok(g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_shape() {
        let g = fig1(3).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.weight(0, 1), Some(&int(-1)));
        assert_eq!(g.weight(1, 2), Some(&int(0)));
        assert_eq!(g.weight(2, 0), Some(&int(1)));
        assert_eq!(g.weight(0, 3), Some(&int(1)));
        assert_eq!(g.weight(3, 3), Some(&int(-1)));
        assert_eq!(g.edge_count(), 5);
        assert!(fig1(1).is_err());
    }

    #[test]
    fn fig2_shape() {
        let g = fig2(FIG2_DEFAULT_LOOPS).unwrap();
        assert_eq!(g.vertex_count(), 2 + 5 + 9 + 14);
        assert_eq!(g.out_degree(0), 4);
        assert!(fig2([6, 10, 14]).is_err());
        assert!(fig2([6, 35, 15]).is_err());
        assert!(fig2([1, 10, 15]).is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let p = RandomGraphParams {
            vertices: 6,
            max_weight: 5,
            density: 0.4,
            seed: 1,
        };
        assert_eq!(random_graph(&p).unwrap(), random_graph(&p).unwrap());
    }

    #[test]
    fn cycle_search() {
        let tri = WeightedGraph::from_int_edges(3, &[(0, 1, 0), (1, 2, 0), (2, 0, 0)]).unwrap();
        assert!(has_simple_cycle_through(&tri, 0, 1));
        let split = WeightedGraph::from_int_edges(4, &[(0, 2, 0), (2, 0, 0), (1, 3, 0), (3, 1, 0)])
            .unwrap();
        assert!(!has_simple_cycle_through(&split, 0, 1));
        for seed in 0..20 {
            assert!(has_simple_cycle_through(
                &planted_cycle_base(5, seed).unwrap(),
                0,
                1
            ));
            assert!(!has_simple_cycle_through(
                &negative_base(5, seed).unwrap(),
                0,
                1
            ));
        }
    }
}
