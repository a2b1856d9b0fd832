//! Fixed benchmark instances shared by the criterion benches in `benches/`.

use horizon_core::instances::{random_graph, RandomGraphParams};
use horizon_core::WeightedGraph;

/// A reproducible random graph with weights in `[-20, 20]`.
pub fn bench_graph(vertices: usize, density: f64, seed: u64) -> WeightedGraph {
    random_graph(&RandomGraphParams {
        vertices,
        max_weight: 20,
        density,
        seed,
    })
    .expect("valid parameters")
}
