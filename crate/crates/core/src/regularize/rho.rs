//! Distance to the nearest regular graph on the same vertex set.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::measures::{int, DegreeProfile, Rational};

pub const DEFAULT_RHO_CAP: usize = 6;

/// Largest order whose vertex pairs fit into a 64-bit edge mask.
const MASK_LIMIT: usize = 11;

/// `(s/2, s + 3n/2)`. The upper bound is certified by rough followed by fine
/// regularization. The lower bound measures degrees against the mean, which
/// is not where `sum |d_i - r|` is smallest, and it can exceed the true
/// distance: one edge on five vertices has `s/2 = 6/5` but is one deletion
/// from the empty graph. [`rho_degree_lower_bound`] is always valid.
pub fn rho_bounds(g: &Graph) -> (Rational, Rational) {
    let s = DegreeProfile::new(g).s;
    (s / int(2), s + int(3 * g.n()) / int(2))
}

/// `min_r sum |d_i - r| / 2` over degrees `r` with `n r` even. Each edit
/// changes two degrees by one, so no regular graph is closer.
pub fn rho_degree_lower_bound(g: &Graph) -> Rational {
    let n = g.n();
    (0..n.max(1))
        .filter(|r| (n * r).is_multiple_of(2))
        .map(|r| g.degrees().iter().map(|&d| d.abs_diff(r)).sum::<usize>())
        .min()
        .map(|total| int(total) / int(2))
        .expect("r = 0 is always admissible")
}

/// Every labeled regular graph on `n` vertices, as edge masks in
/// [`Graph::pair_order`].
#[derive(Debug, Clone)]
pub struct RegularCatalog {
    n: usize,
    graphs: Vec<(usize, u64)>,
}

impl RegularCatalog {
    pub fn new(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > cap.min(MASK_LIMIT) {
            return Err(Error::SizeCap {
                n,
                cap: cap.min(MASK_LIMIT),
            });
        }
        let pairs: Vec<(usize, usize)> = Graph::pair_order(n).collect();
        let mut graphs = Vec::new();
        for r in 0..n {
            if !(n * r).is_multiple_of(2) {
                continue;
            }
            let mut search = Search {
                pairs: &pairs,
                r,
                degree: vec![0; n],
                undecided: vec![n - 1; n],
                out: &mut graphs,
            };
            search.run(0, 0);
        }
        Ok(Self { n, graphs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Number of `r`-regular labeled graphs in the catalog.
    pub fn count_of_degree(&self, r: usize) -> usize {
        self.graphs.iter().filter(|(d, _)| *d == r).count()
    }

    /// Minimum edit distance from `g` to a catalogued graph, and the first
    /// graph (in enumeration order) attaining it.
    pub fn nearest(&self, g: &Graph) -> Result<(usize, Graph)> {
        if g.n() != self.n {
            return Err(Error::VertexCountMismatch {
                left: g.n(),
                right: self.n,
            });
        }
        let mask = g.edge_mask().expect("order checked against the mask limit");
        let (distance, best) = self
            .graphs
            .iter()
            .map(|&(_, r)| ((mask ^ r).count_ones() as usize, r))
            .min_by_key(|&(d, _)| d)
            .expect("the empty graph is always regular");
        Ok((distance, Graph::from_edge_mask(self.n, best)?))
    }

    pub fn rho(&self, g: &Graph) -> Result<usize> {
        self.nearest(g).map(|(d, _)| d)
    }
}

struct Search<'a> {
    pairs: &'a [(usize, usize)],
    r: usize,
    degree: Vec<usize>,
    undecided: Vec<usize>,
    out: &'a mut Vec<(usize, u64)>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, mask: u64) {
        if k == self.pairs.len() {
            if self.degree.iter().all(|&d| d == self.r) {
                self.out.push((self.r, mask));
            }
            return;
        }
        let (u, v) = self.pairs[k];
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;

        if self.degree[u] < self.r && self.degree[v] < self.r {
            self.degree[u] += 1;
            self.degree[v] += 1;
            if self.feasible(u) && self.feasible(v) {
                self.run(k + 1, mask | 1 << k);
            }
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        if self.feasible(u) && self.feasible(v) {
            self.run(k + 1, mask);
        }

        self.undecided[u] += 1;
        self.undecided[v] += 1;
    }

    fn feasible(&self, x: usize) -> bool {
        self.degree[x] + self.undecided[x] >= self.r
    }
}

/// Exact regularization distance for `n <= DEFAULT_RHO_CAP`.
pub fn rho_exact(g: &Graph) -> Result<usize> {
    rho_exact_with_cap(g, DEFAULT_RHO_CAP)
}

pub fn rho_exact_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    RegularCatalog::new(g.n(), cap)?.rho(g)
}

/// Exact distance for `K_{a,b}` set against three quarters of `s(K_{a,b})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicliqueRho {
    pub a: usize,
    pub b: usize,
    pub rho: usize,
    pub s: Rational,
    pub three_quarters_s: Rational,
}

impl BicliqueRho {
    pub fn meets_three_quarters(&self) -> bool {
        int(self.rho) >= self.three_quarters_s
    }
}

/// All `K_{a,b}` with `1 <= a <= b` and `a + b <= max_order`.
pub fn biclique_rho_survey(max_order: usize) -> Result<Vec<BicliqueRho>> {
    let mut rows = Vec::new();
    for total in 2..=max_order {
        let catalog = RegularCatalog::new(total, max_order)?;
        for a in 1..=total / 2 {
            let b = total - a;
            let g = Graph::from_edges(total, (0..a).flat_map(|u| (a..total).map(move |v| (u, v))))?;
            let s = DegreeProfile::new(&g).s;
            rows.push(BicliqueRho {
                a,
                b,
                rho: catalog.rho(&g)?,
                s,
                three_quarters_s: s * Rational::new(3, 4),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::rational;

    #[test]
    fn catalog_counts_small_orders() {
        let c = RegularCatalog::new(4, 6).unwrap();
        assert_eq!(
            (0..4).map(|r| c.count_of_degree(r)).collect::<Vec<_>>(),
            vec![1, 3, 3, 1]
        );
        // 2-regular graphs on 5 labeled vertices are the 12 five-cycles.
        assert_eq!(RegularCatalog::new(5, 6).unwrap().count_of_degree(2), 12);
        // 1-regular on 6 labeled vertices: 15 perfect matchings; 2-regular: 70.
        let c6 = RegularCatalog::new(6, 6).unwrap();
        assert_eq!(c6.count_of_degree(1), 15);
        assert_eq!(c6.count_of_degree(2), 70);
        assert_eq!(c6.count_of_degree(3), 70);
    }

    #[test]
    fn rho_examples() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(rho_exact(&p3), Ok(1));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(rho_exact(&star), Ok(3));
        let c5 = Graph::from_edges(5, (0..5).map(|v| (v, (v + 1) % 5))).unwrap();
        assert_eq!(rho_exact(&c5), Ok(0));
    }

    #[test]
    fn rho_respects_cap() {
        let g = Graph::empty(7).unwrap();
        assert_eq!(rho_exact(&g), Err(Error::SizeCap { n: 7, cap: 6 }));
        assert_eq!(rho_exact_with_cap(&g, 7), Ok(0));
        assert!(rho_exact_with_cap(&Graph::empty(12).unwrap(), 20).is_err());
    }

    #[test]
    fn stated_lower_bound_can_exceed_rho() {
        let edge = Graph::from_edges(5, [(0, 1)]).unwrap();
        assert_eq!(rho_bounds(&edge).0, rational(6, 5));
        assert_eq!(rho_exact(&edge), Ok(1));
        assert_eq!(rho_degree_lower_bound(&edge), int(1));
    }

    #[test]
    fn degree_lower_bound_never_exceeds_rho() {
        for n in 1..=5 {
            let catalog = RegularCatalog::new(n, 6).unwrap();
            for (_, g) in crate::enumerate::all_graphs(n).unwrap() {
                assert!(rho_degree_lower_bound(&g) <= int(catalog.rho(&g).unwrap()));
            }
        }
    }

    #[test]
    fn bounds_examples() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(rho_bounds(&star), (rational(3, 2), int(9)));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            rho_bounds(&p3),
            (rational(2, 3), rational(4, 3) + rational(9, 2))
        );
        let c4 = Graph::from_edges(4, (0..4).map(|v| (v, (v + 1) % 4))).unwrap();
        assert_eq!(rho_bounds(&c4), (int(0), int(6)));
    }
}
