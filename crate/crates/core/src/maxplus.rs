//! Matrices over the max-plus semiring `(max, +)` on `ℚ ∪ {−∞}`.
//!
//! `None` stands for `−∞`: it absorbs under `+` and loses under `max`.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::path::FinitePath;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxPlusMatrix {
    dim: usize,
    entries: Vec<Option<Rational>>,
}

impl MaxPlusMatrix {
    /// All entries `−∞`.
    pub fn bottom(dim: usize) -> Self {
        MaxPlusMatrix {
            dim,
            entries: vec![None; dim * dim],
        }
    }

    /// `0` on the diagonal, `−∞` elsewhere.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::bottom(dim);
        for i in 0..dim {
            m.set(i, i, Some(Rational::from_integer(0.into())));
        }
        m
    }

    /// Transition matrix: `M[i][j] = w(i, j)` on edges, `−∞` elsewhere.
    pub fn from_graph(graph: &WeightedGraph) -> Self {
        let mut m = Self::bottom(graph.vertex_count());
        for e in graph.edges() {
            m.set(e.source, e.target, Some(e.weight));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Option<Rational>>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        MaxPlusMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        self.entries[i * self.dim + j].as_ref()
    }

    pub fn set(&mut self, i: usize, j: usize, value: Option<Rational>) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Option<Rational>] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    /// Largest finite entry of row `i`.
    pub fn row_max(&self, i: usize) -> Option<&Rational> {
        self.row(i).iter().flatten().max()
    }
}

/// Tropical product `C[i][j] = max_k A[i][k] + B[k][j]`.
pub fn maxplus_multiply(a: &MaxPlusMatrix, b: &MaxPlusMatrix) -> Result<MaxPlusMatrix> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    let n = a.dim;
    let mut c = MaxPlusMatrix::bottom(n);
    for i in 0..n {
        for k in 0..n {
            let Some(aik) = a.get(i, k) else { continue };
            for j in 0..n {
                let Some(bkj) = b.get(k, j) else { continue };
                let candidate = aik + bkj;
                let slot = &mut c.entries[i * n + j];
                if slot.as_ref().is_none_or(|cur| candidate > *cur) {
                    *slot = Some(candidate);
                }
            }
        }
    }
    Ok(c)
}

/// `M^k` by repeated squaring.
pub fn maxplus_power(m: &MaxPlusMatrix, mut k: u64) -> MaxPlusMatrix {
    let mut result = MaxPlusMatrix::identity(m.dim);
    let mut base = m.clone();
    while k > 0 {
        if k & 1 == 1 {
            result = maxplus_multiply(&result, &base).unwrap();
        }
        k >>= 1;
        if k > 0 {
            base = maxplus_multiply(&base, &base).unwrap();
        }
    }
    result
}

/// Best weight of a path with exactly `horizon` edges from `start`, read off
/// the row of `start` in `M^horizon`.
pub fn maxplus_power_value(graph: &WeightedGraph, start: usize, horizon: u64) -> Result<Rational> {
    graph.check_vertex(start)?;
    let power = maxplus_power(&MaxPlusMatrix::from_graph(graph), horizon);
    // Totality guarantees a path of every length.
    Ok(power.row_max(start).cloned().expect("graph is total"))
}

/// Cached squarings `M^(2^j)` of a transition matrix, used to evaluate powers
/// and to expand power entries back into explicit paths.
#[derive(Debug, Clone)]
pub struct PowerCache {
    squares: Vec<MaxPlusMatrix>,
}

impl PowerCache {
    pub fn new(graph: &WeightedGraph) -> Self {
        PowerCache {
            squares: vec![MaxPlusMatrix::from_graph(graph)],
        }
    }

    pub fn dim(&self) -> usize {
        self.squares[0].dim
    }

    fn square(&mut self, j: usize) -> &MaxPlusMatrix {
        while self.squares.len() <= j {
            let last = self.squares.last().unwrap();
            let next = maxplus_multiply(last, last).unwrap();
            self.squares.push(next);
        }
        &self.squares[j]
    }

    fn bits(k: u64) -> Vec<usize> {
        (0..64).filter(|j| k >> j & 1 == 1).collect()
    }

    /// Suffix products `R_m = S_{j_m} ⊗ … ⊗ S_{j_last}` over the set bits of `k`.
    fn suffix_products(&mut self, k: u64) -> Vec<(usize, MaxPlusMatrix)> {
        let bits = Self::bits(k);
        let mut out: Vec<(usize, MaxPlusMatrix)> = Vec::with_capacity(bits.len());
        for &j in bits.iter().rev() {
            let s = self.square(j).clone();
            let product = match out.last() {
                Some((_, r)) => maxplus_multiply(&s, r).unwrap(),
                None => s,
            };
            out.push((j, product));
        }
        out.reverse();
        out
    }

    pub fn power(&mut self, k: u64) -> MaxPlusMatrix {
        if k == 0 {
            return MaxPlusMatrix::identity(self.dim());
        }
        self.suffix_products(k).swap_remove(0).1
    }

    /// A path of exactly `k` edges from `from` to `to` whose weight equals
    /// `(M^k)[from][to]`, or `None` if that entry is `−∞`. Ties between
    /// midpoints go to the smallest vertex id.
    pub fn expand(&mut self, k: u64, from: usize, to: usize) -> Option<FinitePath> {
        if k == 0 {
            return (from == to).then(|| FinitePath::new(from));
        }
        let products = self.suffix_products(k);
        products[0].1.get(from, to)?;
        let mut path = FinitePath::new(from);
        let mut cur = from;
        for m in 0..products.len() {
            let j = products[m].0;
            let next = if m + 1 == products.len() {
                to
            } else {
                let target = products[m].1.get(cur, to).unwrap().clone();
                let dim = self.dim();
                let s = self.square(j);
                let rest = &products[m + 1].1;
                (0..dim)
                    .find(|&c| match (s.get(cur, c), rest.get(c, to)) {
                        (Some(x), Some(y)) => x + y == target,
                        _ => false,
                    })
                    .unwrap()
            };
            let piece = self.expand_square(j, cur, next);
            path = path.concat(&piece);
            cur = next;
        }
        Some(path)
    }

    fn expand_square(&mut self, j: usize, from: usize, to: usize) -> FinitePath {
        if j == 0 {
            return FinitePath::from_vertices(vec![from, to]);
        }
        self.square(j);
        let target = self.squares[j].get(from, to).unwrap().clone();
        let half = &self.squares[j - 1];
        let mid = (0..half.dim)
            .find(|&c| match (half.get(from, c), half.get(c, to)) {
                (Some(x), Some(y)) => x + y == target,
                _ => false,
            })
            .unwrap();
        let left = self.expand_square(j - 1, from, mid);
        left.concat(&self.expand_square(j - 1, mid, to))
    }
}
