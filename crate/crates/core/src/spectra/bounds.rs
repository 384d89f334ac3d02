use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{BipartiteLayout, Graph};

use super::{graph_spectrum, Spectrum};

/// Classical estimates of the spectral radius `mu` of a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalBounds {
    pub mu: f64,
    /// Hofmeister: `mu^2 >= (1/n) sum_u d(u)^2`. Stores the right side.
    pub hofmeister: f64,
    /// Stanley: `mu <= -1/2 + sqrt(2m + 1/4)`.
    pub stanley: f64,
    /// Berman–Zhang: `mu <= max_{uv in E} sqrt(d(u) d(v))`, 0 without edges.
    pub berman_zhang: f64,
    pub bipartite: Option<BipartiteBounds>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartiteBounds {
    /// Cvetković: `mu <= sqrt(m)`.
    pub cvetkovic: f64,
    /// Rayleigh quotient: `mu >= m / sqrt(ab)`.
    pub rayleigh: f64,
}

pub fn classical_bounds(g: &Graph, layout: Option<&BipartiteLayout>) -> Result<ClassicalBounds> {
    let spectrum = graph_spectrum::<f64>(g)?;
    classical_bounds_with(g, &spectrum, layout)
}

/// As [`classical_bounds`], reusing an already computed spectrum of `g`.
pub fn classical_bounds_with(
    g: &Graph,
    spectrum: &Spectrum<f64>,
    layout: Option<&BipartiteLayout>,
) -> Result<ClassicalBounds> {
    let n = g.n() as f64;
    let m = g.m() as f64;
    let sum_sq: f64 = g.degrees().iter().map(|&d| (d * d) as f64).sum();
    let berman_zhang = g
        .edges()
        .into_iter()
        .map(|(u, v)| ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .fold(0.0, f64::max);
    let bipartite = match layout {
        Some(layout) => {
            layout.validate(g)?;
            let ab = (layout.a() * layout.b()) as f64;
            Some(BipartiteBounds {
                cvetkovic: m.sqrt(),
                rayleigh: m / ab.sqrt(),
            })
        }
        None => None,
    };
    Ok(ClassicalBounds {
        mu: spectrum.largest(),
        hofmeister: sum_sq / n,
        stanley: -0.5 + (2.0 * m + 0.25).sqrt(),
        berman_zhang,
        bipartite,
    })
}
