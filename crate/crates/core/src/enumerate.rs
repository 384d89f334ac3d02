//! Exhaustive enumeration of small labeled graphs.

use crate::error::{Error, Result};
use crate::graph::{BipartiteLayout, Graph};

/// Every labeled graph on `n` vertices as `(edge mask, graph)`, masks in
/// increasing numeric order (bit `k` is the `k`-th pair of
/// [`Graph::pair_order`]).
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = (u64, Graph)>> {
    let pairs = n * n.saturating_sub(1) / 2;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if pairs >= 64 {
        return Err(Error::SizeCap { n, cap: 11 });
    }
    Ok((0..1u64 << pairs).map(move |mask| {
        let g = Graph::from_edge_mask(n, mask).expect("mask fits the pair count");
        (mask, g)
    }))
}

/// A bipartite graph together with the layout it was enumerated under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutGraph {
    pub layout: BipartiteLayout,
    /// Bit `i * b + j` selects the edge `{i, a + j}`.
    pub cross_mask: u64,
    pub graph: Graph,
}

/// Every bipartite graph on `n` vertices under every layout `A = 0..a`,
/// `1 <= a <= n - 1`.
pub fn all_bipartite_graphs(n: usize) -> Result<Vec<LayoutGraph>> {
    let mut out = Vec::new();
    for a in 1..n {
        let layout = BipartiteLayout::new(a, n)?;
        let b = n - a;
        if a * b >= 64 {
            return Err(Error::SizeCap { n, cap: 15 });
        }
        for mask in 0..1u64 << (a * b) {
            let edges = (0..a)
                .flat_map(|i| (0..b).map(move |j| (i, j)))
                .filter(|&(i, j)| mask >> (i * b + j) & 1 == 1)
                .map(|(i, j)| (i, a + j));
            out.push(LayoutGraph {
                layout,
                cross_mask: mask,
                graph: Graph::from_edges(n, edges)?,
            });
        }
    }
    Ok(out)
}
