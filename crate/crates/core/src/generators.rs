//! Deterministic graph families, including seeded random ones.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BipartiteLayout, Graph};

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete {
        n: usize,
    },
    Empty {
        n: usize,
    },
    /// `K_{1,leaves}` with center 0.
    Star {
        leaves: usize,
    },
    Path {
        n: usize,
    },
    /// Requires `n >= 3`.
    Cycle {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    DisjointUnion(Box<Family>, Box<Family>),
    /// Erdős–Rényi `G(n, p)`; pairs are sampled in lexicographic order.
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Each of the `a * b` cross pairs is present with probability `p`.
    RandomBipartite {
        a: usize,
        b: usize,
        p: f64,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub layout: Option<BipartiteLayout>,
}

pub fn generate(family: &Family) -> Result<Generated> {
    let plain = |graph| {
        Ok(Generated {
            graph,
            layout: None,
        })
    };
    match *family {
        Family::Complete { n } => plain(Graph::complete(positive("n", n)?)?),
        Family::Empty { n } => plain(Graph::empty(positive("n", n)?)?),
        Family::Star { leaves } => {
            positive("leaves", leaves)?;
            let graph = Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))?;
            let layout = Some(BipartiteLayout::new(1, leaves + 1)?);
            Ok(Generated { graph, layout })
        }
        Family::Path { n } => {
            let n = positive("n", n)?;
            plain(Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?)
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            plain(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?)
        }
        Family::CompleteBipartite { a, b } => {
            positive("a", a)?;
            positive("b", b)?;
            let graph =
                Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))?;
            Ok(Generated {
                graph,
                layout: Some(BipartiteLayout::new(a, a + b)?),
            })
        }
        Family::DisjointUnion(ref left, ref right) => {
            let left = generate(left)?;
            let right = generate(right)?;
            plain(left.graph.disjoint_union(&right.graph))
        }
        Family::Gnp { n, p, seed } => {
            let n = positive("n", n)?;
            probability(p)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edges: Vec<_> = Graph::pair_order(n)
                .filter(|_| rng.gen::<f64>() < p)
                .collect();
            plain(Graph::from_edges(n, edges)?)
        }
        Family::RandomBipartite { a, b, p, seed } => {
            positive("a", a)?;
            positive("b", b)?;
            probability(p)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..a {
                for v in a..a + b {
                    if rng.gen::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
            Ok(Generated {
                graph: Graph::from_edges(a + b, edges)?,
                layout: Some(BipartiteLayout::new(a, a + b)?),
            })
        }
    }
}

fn positive(name: &str, x: usize) -> Result<usize> {
    if x == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(x)
}

fn probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}
