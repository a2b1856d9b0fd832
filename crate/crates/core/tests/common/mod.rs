//! Shared generators and brute-force helpers for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use horizon_core::instances::{random_graph, RandomGraphParams};
use horizon_core::rational::{ceil_nat, floor_nat, frac, from_u64, int};
use horizon_core::{FinitePath, Lasso, Rational, StoppingDistribution, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The three expected horizons of the adversarial corpus.
pub fn horizons() -> [Rational; 3] {
    [frac(3, 2), int(4), frac(17, 3)]
}

/// A random graph with `1..=max_vertices` vertices and weights in
/// `[-max_weight, max_weight]`.
pub fn corpus_graph(rng: &mut ChaCha8Rng, max_vertices: usize, max_weight: i64) -> WeightedGraph {
    random_graph(&RandomGraphParams {
        vertices: rng.gen_range(1..=max_vertices),
        max_weight,
        density: rng.gen_range(0.2..0.7),
        seed: rng.gen(),
    })
    .unwrap()
}

/// Every path with exactly `len` edges from `start`.
pub fn all_paths(graph: &WeightedGraph, start: usize, len: usize) -> Vec<FinitePath> {
    let mut paths = vec![FinitePath::new(start)];
    for _ in 0..len {
        paths = paths
            .into_iter()
            .flat_map(|p| {
                graph.successors(p.end()).iter().map(move |(t, _)| {
                    let mut q = p.clone();
                    q.push(*t);
                    q
                })
            })
            .collect();
    }
    paths
}

/// A random walk from `start` that stops once it has at least `min_len`
/// edges and sits on a vertex seen before; the lasso closes on a random
/// earlier visit of that vertex.
pub fn random_lasso(
    graph: &WeightedGraph,
    start: usize,
    min_len: usize,
    rng: &mut ChaCha8Rng,
) -> Lasso {
    let mut walk = vec![start];
    loop {
        let v = *walk.last().unwrap();
        let succ = graph.successors(v);
        walk.push(succ[rng.gen_range(0..succ.len())].0);
        let end = *walk.last().unwrap();
        let earlier: Vec<usize> = (0..walk.len() - 1).filter(|&i| walk[i] == end).collect();
        if walk.len() > min_len && !earlier.is_empty() {
            let j = earlier[rng.gen_range(0..earlier.len())];
            let stem = FinitePath::from_vertices(walk[..=j].to_vec());
            let cycle = FinitePath::from_vertices(walk[j..].to_vec());
            return Lasso::new(stem, cycle).unwrap();
        }
    }
}

/// A random distribution with `points` support points and expected time
/// exactly `horizon`, built as a mixture of two-point distributions that
/// straddle `horizon`.
pub fn random_distribution(
    horizon: &Rational,
    points: usize,
    rng: &mut ChaCha8Rng,
) -> StoppingDistribution {
    let below_max = if horizon.is_integer() {
        floor_nat(horizon) - 1
    } else {
        floor_nat(horizon)
    };
    let above_min = if horizon.is_integer() {
        ceil_nat(horizon) + 1
    } else {
        ceil_nat(horizon)
    };
    let below_count = (below_max + 1) as usize;
    loop {
        let left_n = rng.gen_range(1..points).min(below_count);
        let right_n = points - left_n;
        let mut left = BTreeSet::new();
        while left.len() < left_n {
            left.insert(rng.gen_range(0..=below_max));
        }
        let mut right = BTreeSet::new();
        while right.len() < right_n {
            right.insert(rng.gen_range(above_min..above_min + 20));
        }
        let left: Vec<u64> = left.into_iter().collect();
        let right: Vec<u64> = right.into_iter().collect();
        let pairs = left.len().max(right.len());
        let raw: Vec<u64> = (0..pairs).map(|_| rng.gen_range(1..10)).collect();
        let total: u64 = raw.iter().sum();
        let mut mass = std::collections::BTreeMap::<u64, Rational>::new();
        for (k, r) in raw.iter().enumerate() {
            let weight = frac(*r as i64, total as i64);
            let (l, h) = (left[k % left.len()], right[k % right.len()]);
            let span = from_u64(h - l);
            let p_high = (horizon - from_u64(l)) / &span;
            let p_low = (from_u64(h) - horizon) / &span;
            *mass.entry(l).or_insert_with(|| int(0)) += &weight * p_low;
            *mass.entry(h).or_insert_with(|| int(0)) += &weight * p_high;
        }
        let d = StoppingDistribution::new(mass.into_iter().collect()).unwrap();
        if d.points().len() == points {
            assert_eq!(&d.expected_time(), horizon);
            return d;
        }
    }
}
