//! Simple undirected graphs on the vertex set `0..n`.
//!
//! Vertices are 0-based everywhere in this crate. A [`Graph`] is immutable
//! once built; the regularization algorithms mutate private working copies.

use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected labeled graph on vertices `0..n`, stored as a dense
/// adjacency matrix together with its degree sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    degrees: Vec<usize>,
    m: usize,
}

/// Edge counts induced by a vertex subset `S`: inside `S`, inside `V \ S`,
/// and across the cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetEdgeCounts {
    pub inside: usize,
    pub outside: usize,
    pub cut: usize,
}

/// Two vertex classes: `A = 0..a` and `B = a..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BipartiteLayout {
    a: usize,
    n: usize,
}

impl BipartiteLayout {
    pub fn new(a: usize, n: usize) -> Result<Self> {
        if a == 0 || a >= n {
            return Err(Error::InvalidLayout(format!(
                "class size a = {a} must satisfy 1 <= a < n = {n}"
            )));
        }
        Ok(Self { a, n })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.n - self.a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn in_a(&self, v: usize) -> bool {
        v < self.a
    }

    pub fn class_a(&self) -> std::ops::Range<usize> {
        0..self.a
    }

    pub fn class_b(&self) -> std::ops::Range<usize> {
        self.a..self.n
    }

    /// Checks that `g` has the same order and every edge crosses the classes.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::InvalidLayout(format!(
                "layout is for n = {} but graph has n = {}",
                self.n,
                g.n()
            )));
        }
        for (u, v) in g.edges() {
            if self.in_a(u) == self.in_a(v) {
                return Err(Error::InvalidLayout(format!(
                    "edge {{{u}, {v}}} lies inside one class (a = {})",
                    self.a
                )));
            }
        }
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Self {
            n,
            adj: vec![false; n * n],
            degrees: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates
    /// (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !g.insert_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::empty(n).map(|g| g.complement())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Neighbors of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.n..(u + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(v, &present)| present.then_some(v))
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    adj[u * n + v] = !self.has_edge(u, v);
                }
            }
        }
        let degrees = self.degrees.iter().map(|d| n - 1 - d).collect();
        Self {
            n,
            adj,
            degrees,
            m: n * (n - 1) / 2 - self.m,
        }
    }

    /// Size of the symmetric difference of the two edge sets.
    pub fn edit_distance(&self, other: &Self) -> Result<usize> {
        self.same_order(other)?;
        let mut count = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) != other.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Number of edges of `self` that are not edges of `other`.
    pub fn edges_missing_from(&self, other: &Self) -> Result<usize> {
        self.same_order(other)?;
        Ok(self
            .edges()
            .into_iter()
            .filter(|&(u, v)| !other.has_edge(u, v))
            .count())
    }

    /// Counts `e(S)`, `e(V \ S)` and `e(S, V \ S)`. Repeated vertices in
    /// `subset` are treated as a single membership.
    pub fn subset_edge_counts(&self, subset: &[usize]) -> Result<SubsetEdgeCounts> {
        let mut member = vec![false; self.n];
        for &v in subset {
            self.check_vertex(v)?;
            member[v] = true;
        }
        Ok(self.counts_for_membership(&member))
    }

    pub(crate) fn counts_for_membership(&self, member: &[bool]) -> SubsetEdgeCounts {
        let mut counts = SubsetEdgeCounts {
            inside: 0,
            outside: 0,
            cut: 0,
        };
        for (u, v) in self.edges() {
            match (member[u], member[v]) {
                (true, true) => counts.inside += 1,
                (false, false) => counts.outside += 1,
                _ => counts.cut += 1,
            }
        }
        counts
    }

    /// Replaces every vertex `u` by `t` independent copies labeled
    /// `u * t + j`; copies of `u` and `v` are adjacent iff `uv` is an edge.
    pub fn blow_up(&self, t: usize) -> Result<Self> {
        self.blow_up_with(t, false)
    }

    /// [`Graph::blow_up`] with every copy class additionally made a clique.
    pub fn closed_blow_up(&self, t: usize) -> Result<Self> {
        self.blow_up_with(t, true)
    }

    fn blow_up_with(&self, t: usize, closed: bool) -> Result<Self> {
        if t == 0 {
            return Err(Error::ZeroBlowUp);
        }
        let mut out = Self::empty(self.n * t)?;
        for u in 0..self.n {
            for v in 0..self.n {
                let joined = if u == v { closed } else { self.has_edge(u, v) };
                if !joined {
                    continue;
                }
                for i in 0..t {
                    for j in 0..t {
                        let (x, y) = (u * t + i, v * t + j);
                        if x < y {
                            out.insert_edge(x, y);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.n;
        let mut out = Self::empty(self.n + other.n).expect("positive order");
        for (u, v) in self.edges() {
            out.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            out.insert_edge(u + shift, v + shift);
        }
        out
    }

    /// Vertex pairs `(u, v)`, `u < v`, in lexicographic order. Bit `k` of an
    /// edge mask refers to the `k`-th pair of this order.
    pub fn pair_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..n).flat_map(move |u| ((u + 1)..n).map(move |v| (u, v)))
    }

    /// Graph whose edges are the pairs selected by `mask` (see
    /// [`Graph::pair_order`]). Requires `n * (n - 1) / 2 <= 64`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs > 64 {
            return Err(Error::SizeCap { n, cap: 11 });
        }
        let mut g = Self::empty(n)?;
        for (k, (u, v)) in Self::pair_order(n).enumerate() {
            if mask >> k & 1 == 1 {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when the graph has more
    /// than 64 vertex pairs.
    pub fn edge_mask(&self) -> Option<u64> {
        if self.n * (self.n - 1) / 2 > 64 {
            return None;
        }
        let mut mask = 0u64;
        for (k, (u, v)) in Self::pair_order(self.n).enumerate() {
            if self.has_edge(u, v) {
                mask |= 1 << k;
            }
        }
        Some(mask)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    pub(crate) fn same_order(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VertexCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Returns false if the edge was already present.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        if self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.m += 1;
        true
    }

    /// Returns false if the edge was absent.
    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.n + v] = false;
        self.adj[v * self.n + u] = false;
        self.degrees[u] -= 1;
        self.degrees[v] -= 1;
        self.m -= 1;
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}
