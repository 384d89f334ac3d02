//! Degree-deviation measures in exact rational arithmetic.

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{BipartiteLayout, Graph};

/// Exact rational used for every degree-based quantity.
pub type Rational = Ratio<i128>;

pub fn rational(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(x: usize) -> Rational {
    Rational::from_integer(x as i128)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| *r.numer() as f64 / *r.denom() as f64)
}

/// Degree sequence summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub m: usize,
    /// `2m / n`
    pub mean_degree: Rational,
    /// `s(G) = sum_u |d(u) - 2m/n|`
    pub s: Rational,
    /// `var(G) = (1/n) sum_u (d(u) - 2m/n)^2`
    pub var: Rational,
}

impl DegreeProfile {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mean = rational(2 * g.m() as i128, n as i128);
        let mut s = Rational::zero();
        let mut sq = Rational::zero();
        for &d in g.degrees() {
            let dev = int(d) - mean;
            s += dev.abs();
            sq += dev * dev;
        }
        Self {
            degrees: g.degrees().to_vec(),
            m: g.m(),
            mean_degree: mean,
            s,
            var: sq / int(n),
        }
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_regular(&self) -> bool {
        self.s.is_zero()
    }

    /// `s^2 / n^2`, the left end of the chain `s^2/n^2 <= var <= s`.
    pub fn s_squared_over_n_squared(&self) -> Rational {
        let n = int(self.n());
        self.s * self.s / (n * n)
    }

    pub fn chain_holds(&self) -> bool {
        self.s_squared_over_n_squared() <= self.var && self.var <= self.s
    }

    pub fn s_f64(&self) -> f64 {
        to_f64(&self.s)
    }

    pub fn var_f64(&self) -> f64 {
        to_f64(&self.var)
    }

    pub fn mean_f64(&self) -> f64 {
        to_f64(&self.mean_degree)
    }

    pub fn sum_of_squared_degrees(&self) -> u128 {
        self.degrees
            .iter()
            .map(|&d| (d as u128) * (d as u128))
            .sum()
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    DegreeProfile::new(g)
}

/// Bipartite deviation `s2(G) = sum_{A} |d - m/a| + sum_{B} |d - m/b|`.
pub fn s2_deviation(g: &Graph, layout: &BipartiteLayout) -> Result<Rational> {
    layout.validate(g)?;
    let m = int(g.m());
    let mean_a = m / int(layout.a());
    let mean_b = m / int(layout.b());
    let deviation = |range: std::ops::Range<usize>, mean: Rational| {
        range
            .map(|u| (int(g.degree(u)) - mean).abs())
            .fold(Rational::zero(), |acc, x| acc + x)
    };
    Ok(deviation(layout.class_a(), mean_a) + deviation(layout.class_b(), mean_b))
}

/// Rational wrapper that serializes as `"p/q"` (or `"p"` for integers).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactValue(pub Rational);

impl Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse::<Rational>()
            .map(ExactValue)
            .map_err(|e| serde::de::Error::custom(format!("bad rational {text:?}: {e}")))
    }
}
