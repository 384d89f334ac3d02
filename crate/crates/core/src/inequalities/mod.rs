//! Checkers for the spectral and degree-deviation inequalities, each
//! reporting a signed margin and the data needed to reproduce it.
//!
//! Eigenvalue indices in witnesses are 1-based (`mu_1 >= ... >= mu_n`);
//! vertex labels are 0-based.

mod result;

pub use result::{CheckResult, ClaimKind, Pairing, Witness, DEFAULT_TOL};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteLayout, Graph};
use crate::measures::{int, s2_deviation, to_f64, DegreeProfile, ExactValue, Rational};
use crate::spectra::{classical_bounds_with, graph_spectrum, Spectrum};

/// Exhaustive subset scans in [`GraphAnalysis::lear_split`] run up to this
/// order (`C(14, 7) = 3432` subsets).
pub const LEAR_SCAN_CAP: usize = 14;

/// A graph together with its complement, degree profile and both spectra,
/// so that many checks can share one pair of eigensolves.
#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    graph: Graph,
    complement: Graph,
    profile: DegreeProfile,
    spectrum: Spectrum<f64>,
    complement_spectrum: Spectrum<f64>,
}

impl GraphAnalysis {
    pub fn new(g: &Graph) -> Result<Self> {
        let complement = g.complement();
        Ok(Self {
            spectrum: graph_spectrum(g)?,
            complement_spectrum: graph_spectrum(&complement)?,
            profile: DegreeProfile::new(g),
            graph: g.clone(),
            complement,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn complement(&self) -> &Graph {
        &self.complement
    }

    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    pub fn spectrum(&self) -> &Spectrum<f64> {
        &self.spectrum
    }

    pub fn complement_spectrum(&self) -> &Spectrum<f64> {
        &self.complement_spectrum
    }

    pub fn mu(&self) -> f64 {
        self.spectrum.largest()
    }

    /// `epsilon(G) = mu(G) - 2m/n`
    pub fn epsilon(&self) -> f64 {
        self.mu() - self.profile.mean_f64()
    }

    fn n(&self) -> usize {
        self.graph.n()
    }

    fn require_order_two(&self) -> Result<()> {
        if self.n() < 2 {
            return Err(Error::Precondition(
                "check needs at least two vertices".into(),
            ));
        }
        Ok(())
    }

    /// Lower bounds `var/(2 sqrt(2m)) <= epsilon` and
    /// `s^2/(2 n^2 sqrt(2m)) <= epsilon`, upper bound `epsilon <= sqrt(s)`,
    /// and the exact chain `s^2/n^2 <= var <= s`.
    pub fn irregularity_checks(&self, tol: f64) -> Vec<CheckResult> {
        let p = &self.profile;
        let n = self.n() as f64;
        let m = p.m as f64;
        let s = p.s_f64();
        let eps = self.epsilon();
        let witness = Witness::Irregularity {
            epsilon: eps,
            mu: self.mu(),
            mean_degree: p.mean_f64(),
        };
        let (lower_var, lower_s, eps_for_lower) = if p.m == 0 {
            (0.0, 0.0, 0.0)
        } else {
            let root = (2.0 * m).sqrt();
            (
                p.var_f64() / (2.0 * root),
                s * s / (2.0 * n * n * root),
                eps,
            )
        };

        let chain_lower = p.s_squared_over_n_squared();
        let exact = |name: &str, lhs: Rational, rhs: Rational| {
            CheckResult::with_margin(
                name,
                ClaimKind::Invariant,
                to_f64(&lhs),
                to_f64(&rhs),
                to_f64(&(rhs - lhs)),
                tol,
            )
            .witness(Witness::Exact {
                lhs: ExactValue(lhs),
                rhs: ExactValue(rhs),
            })
        };

        vec![
            CheckResult::at_most(
                "irregularity_lower_var",
                ClaimKind::Invariant,
                lower_var,
                eps_for_lower,
                tol,
            )
            .witness(witness.clone()),
            CheckResult::at_most(
                "irregularity_lower_s",
                ClaimKind::Invariant,
                lower_s,
                eps_for_lower,
                tol,
            )
            .witness(witness.clone()),
            CheckResult::at_most(
                "irregularity_upper_sqrt_s",
                ClaimKind::Invariant,
                eps,
                s.sqrt(),
                tol,
            )
            .witness(witness),
            exact("deviation_chain_lower", chain_lower, p.var),
            exact("deviation_chain_upper", p.var, p.s),
        ]
    }

    /// `s2^2/(2 n^2 sqrt(ab)) <= mu - m/sqrt(ab) <= sqrt(s2/2)`.
    pub fn bipartite_checks(&self, layout: &BipartiteLayout, tol: f64) -> Result<Vec<CheckResult>> {
        let s2 = s2_deviation(&self.graph, layout)?;
        let n = self.n() as f64;
        let root_ab = ((layout.a() * layout.b()) as f64).sqrt();
        let s2f = to_f64(&s2);
        let center = self.profile.m as f64 / root_ab;
        let gap = self.mu() - center;
        let upper = (s2f / 2.0).sqrt();
        let witness = Witness::Bipartite {
            s2: ExactValue(s2),
            center,
            swap_bound: upper,
        };
        Ok(vec![
            CheckResult::at_most(
                "bipartite_lower",
                ClaimKind::Invariant,
                s2f * s2f / (2.0 * n * n * root_ab),
                gap,
                tol,
            )
            .witness(witness.clone()),
            CheckResult::at_most("bipartite_upper", ClaimKind::Invariant, gap, upper, tol)
                .witness(witness),
        ])
    }

    /// `mu_k(G) + mu_{n-k+1}(complement) >= -1 - 2 sqrt(2 s)` for `k = 1..n-1`.
    pub fn pair_lower_checks(&self, tol: f64) -> Result<Vec<CheckResult>> {
        self.require_order_two()?;
        let n = self.n();
        let bound = -1.0 - 2.0 * (2.0 * self.profile.s_f64()).sqrt();
        Ok((1..n)
            .map(|k| {
                let (witness, sum) = self.pair_witness(k, n - k + 1, None);
                CheckResult::at_most("pair_lower", ClaimKind::Invariant, bound, sum, tol)
                    .witness(witness)
            })
            .collect())
    }

    /// Both complement pairings of the upper bound `... <= -1`: pairing A is
    /// the literal `(k, n-k+1)` for `k = 1..n-1` and is audited; pairing B is
    /// `(k, n-k+2)` for `k = 2..n`, which follows from Weyl's inequalities.
    pub fn pair_upper_audit(&self, tol: f64) -> Result<Vec<CheckResult>> {
        self.require_order_two()?;
        let n = self.n();
        let a = (1..n).map(|k| {
            let (witness, sum) = self.pair_witness(k, n - k + 1, Some(Pairing::A));
            CheckResult::at_most("pair_upper_a", ClaimKind::Audit, sum, -1.0, tol).witness(witness)
        });
        let b = (2..=n).map(|k| {
            let (witness, sum) = self.pair_witness(k, n - k + 2, Some(Pairing::B));
            CheckResult::at_most("pair_upper_b", ClaimKind::Invariant, sum, -1.0, tol)
                .witness(witness)
        });
        Ok(a.chain(b).collect())
    }

    fn pair_witness(&self, k: usize, j: usize, pairing: Option<Pairing>) -> (Witness, f64) {
        let mu_graph = self.spectrum.mu(k);
        let mu_complement = self.complement_spectrum.mu(j);
        (
            Witness::Index {
                k,
                index_in_graph: k,
                index_in_complement: j,
                mu_graph,
                mu_complement,
                pairing,
            },
            mu_graph + mu_complement,
        )
    }

    /// `mu_n(G) + mu_n(complement) <= -1 - s^2/n^3`.
    pub fn min_sum_check(&self, tol: f64) -> Result<CheckResult> {
        self.require_order_two()?;
        let n = self.n();
        let s = self.profile.s_f64();
        let nf = n as f64;
        let (witness, sum) = self.pair_witness(n, n, None);
        Ok(CheckResult::at_most(
            "min_sum",
            ClaimKind::Invariant,
            sum,
            -1.0 - s * s / (nf * nf * nf),
            tol,
        )
        .witness(witness))
    }

    /// Interlacing bound on `mu_n` from the quotient matrix of the
    /// bipartition `(v1, v2)`.
    pub fn haemers_check(&self, v1: &[usize], v2: &[usize], tol: f64) -> Result<CheckResult> {
        let n = self.n();
        if v1.is_empty() || v2.is_empty() {
            return Err(Error::InvalidPartition(
                "both parts must be nonempty".into(),
            ));
        }
        let mut member = vec![None; n];
        for (part, side) in [(v1, true), (v2, false)] {
            for &v in part {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if member[v].replace(side).is_some() {
                    return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
                }
            }
        }
        if member.iter().any(Option::is_none) {
            return Err(Error::InvalidPartition(
                "parts do not cover every vertex".into(),
            ));
        }
        let in_v1: Vec<bool> = member.into_iter().map(|m| m == Some(true)).collect();
        let counts = self.graph.counts_for_membership(&in_v1);
        let (n1, n2) = (v1.len() as f64, v2.len() as f64);
        let r1 = counts.inside as f64 / n1;
        let r2 = counts.outside as f64 / n2;
        let cut = counts.cut as f64;
        let rhs = r1 + r2 - ((r1 - r2).powi(2) + cut * cut / (n1 * n2)).sqrt();
        let mut sorted1 = v1.to_vec();
        let mut sorted2 = v2.to_vec();
        sorted1.sort_unstable();
        sorted2.sort_unstable();
        Ok(CheckResult::at_most(
            "haemers",
            ClaimKind::Invariant,
            self.spectrum.smallest(),
            rhs,
            tol,
        )
        .witness(Witness::Partition {
            v1: sorted1,
            v2: sorted2,
            e1: counts.inside,
            e2: counts.outside,
            cut: counts.cut,
        }))
    }

    /// The claim that the `floor(n/2)` vertices of smallest degree form a set
    /// `S` with `e(V \ S) - e(S) >= s/2`. For `n <= scan_cap` every
    /// `floor(n/2)`-subset is also scanned and the best value recorded.
    pub fn lear_split(&self, tol: f64, scan_cap: usize) -> Result<CheckResult> {
        self.require_order_two()?;
        let n = self.n();
        let half = n / 2;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (self.graph.degree(v), v));
        let mut subset = order[..half].to_vec();
        subset.sort_unstable();
        let counts = self.graph.subset_edge_counts(&subset)?;
        let achieved = counts.outside as i128 - counts.inside as i128;
        let target = self.profile.s / int(2);
        let margin = Rational::from_integer(achieved) - target;

        let (exhaustive_best, exhaustive_subset) = if n <= scan_cap.min(LEAR_SCAN_CAP) {
            let (best, best_set) = self.best_half_split(half);
            (Some(best as f64), Some(best_set))
        } else {
            (None, None)
        };
        Ok(CheckResult::with_margin(
            "lear_split",
            ClaimKind::Audit,
            to_f64(&target),
            achieved as f64,
            to_f64(&margin),
            tol,
        )
        .witness(Witness::Subset {
            subset,
            exhaustive_best,
            exhaustive_subset,
        }))
    }

    /// Maximum of `e(V \ S) - e(S)` over all `size`-subsets, with the first
    /// maximizing subset in increasing bitmask order.
    fn best_half_split(&self, size: usize) -> (i64, Vec<usize>) {
        let n = self.n();
        let edges = self.graph.edges();
        let mut best: Option<(i64, u32)> = None;
        let limit = 1u32 << n;
        let mut mask: u32 = (1u32 << size) - 1;
        loop {
            let mut value = 0i64;
            for &(u, v) in &edges {
                match (mask >> u & 1, mask >> v & 1) {
                    (1, 1) => value -= 1,
                    (0, 0) => value += 1,
                    _ => {}
                }
            }
            if best.is_none_or(|(b, _)| value > b) {
                best = Some((value, mask));
            }
            if size == 0 {
                break;
            }
            // Next mask with the same popcount.
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            if ripple >= limit {
                break;
            }
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
            if mask >= limit {
                break;
            }
        }
        let (value, mask) = best.expect("at least one subset");
        (value, (0..n).filter(|&v| mask >> v & 1 == 1).collect())
    }

    /// Hofmeister, Stanley and Berman–Zhang for every graph; Cvetković and
    /// the Rayleigh lower bound when a layout is given.
    pub fn classical_checks(
        &self,
        layout: Option<&BipartiteLayout>,
        tol: f64,
    ) -> Result<Vec<CheckResult>> {
        let b = classical_bounds_with(&self.graph, &self.spectrum, layout)?;
        let mu = b.mu;
        let inv = ClaimKind::Invariant;
        let mut out = vec![
            CheckResult::at_most("hofmeister", inv, b.hofmeister, mu * mu, tol),
            CheckResult::at_most("stanley", inv, mu, b.stanley, tol),
            CheckResult::at_most("berman_zhang", inv, mu, b.berman_zhang, tol),
        ];
        if let Some(bip) = b.bipartite {
            out.push(CheckResult::at_most(
                "cvetkovic",
                inv,
                mu,
                bip.cvetkovic,
                tol,
            ));
            out.push(CheckResult::at_most("rayleigh", inv, bip.rayleigh, mu, tol));
        }
        Ok(out)
    }

    pub fn tightness_ratios(&self) -> TightnessRatios {
        let p = &self.profile;
        let n = self.n() as f64;
        let m = p.m as f64;
        let s = p.s_f64();
        let eps = self.epsilon();
        let irregular = s > 0.0;
        let with_edges = irregular && p.m > 0;
        TightnessRatios {
            n: self.n(),
            m: p.m,
            epsilon: eps,
            s,
            upper_ratio: irregular.then(|| eps / s.sqrt()),
            lower_ratio: with_edges.then(|| eps * n * n * m.sqrt() / (s * s)),
            conjecture_lower_ratio: with_edges.then(|| eps / (s * s / (2.0 * n * n * m.sqrt()))),
            conjecture_upper_ratio: irregular.then(|| eps / (s / 2.0).sqrt()),
        }
    }
}

/// Normalized irregularity for probing how tight the bounds on `epsilon` are.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TightnessRatios {
    pub n: usize,
    pub m: usize,
    pub epsilon: f64,
    pub s: f64,
    /// `epsilon / sqrt(s)`
    pub upper_ratio: Option<f64>,
    /// `epsilon * n^2 * sqrt(m) / s^2`
    pub lower_ratio: Option<f64>,
    /// `epsilon / (s^2 / (2 n^2 sqrt(m)))`; the conjectured lower bound
    /// holds iff this is at least 1.
    pub conjecture_lower_ratio: Option<f64>,
    /// `epsilon / sqrt(s/2)`; the conjectured upper bound holds iff this is
    /// at most 1.
    pub conjecture_upper_ratio: Option<f64>,
}

pub fn check_irregularity_bounds(g: &Graph, tol: f64) -> Result<Vec<CheckResult>> {
    Ok(GraphAnalysis::new(g)?.irregularity_checks(tol))
}

pub fn check_bipartite_bounds(
    g: &Graph,
    layout: &BipartiteLayout,
    tol: f64,
) -> Result<Vec<CheckResult>> {
    layout.validate(g)?;
    GraphAnalysis::new(g)?.bipartite_checks(layout, tol)
}

pub fn check_pair_lower(g: &Graph, tol: f64) -> Result<Vec<CheckResult>> {
    GraphAnalysis::new(g)?.pair_lower_checks(tol)
}

pub fn check_pair_upper_audit(g: &Graph, tol: f64) -> Result<Vec<CheckResult>> {
    GraphAnalysis::new(g)?.pair_upper_audit(tol)
}

pub fn check_min_sum(g: &Graph, tol: f64) -> Result<CheckResult> {
    GraphAnalysis::new(g)?.min_sum_check(tol)
}

pub fn haemers_min_bound(g: &Graph, v1: &[usize], v2: &[usize], tol: f64) -> Result<CheckResult> {
    GraphAnalysis::new(g)?.haemers_check(v1, v2, tol)
}

pub fn lear_split(g: &Graph, tol: f64) -> Result<CheckResult> {
    GraphAnalysis::new(g)?.lear_split(tol, LEAR_SCAN_CAP)
}

pub fn tightness_ratios(g: &Graph) -> Result<TightnessRatios> {
    Ok(GraphAnalysis::new(g)?.tightness_ratios())
}

pub fn check_classical_bounds(
    g: &Graph,
    layout: Option<&BipartiteLayout>,
    tol: f64,
) -> Result<Vec<CheckResult>> {
    GraphAnalysis::new(g)?.classical_checks(layout, tol)
}

/// `mu(g1) - mu(g2) <= sqrt(2 |E(g1) \ E(g2)|)`, plus the bipartite form
/// with `sqrt(|E(g1) \ E(g2)|)` when `layout` is valid for both graphs.
pub fn pr1_gap_check(
    g1: &Graph,
    g2: &Graph,
    layout: Option<&BipartiteLayout>,
    tol: f64,
) -> Result<Vec<CheckResult>> {
    let missing = g1.edges_missing_from(g2)?;
    let mu1 = graph_spectrum::<f64>(g1)?.largest();
    let mu2 = graph_spectrum::<f64>(g2)?.largest();
    pr1_from_parts(
        mu1,
        mu2,
        missing,
        layout.filter(|l| l.validate(g1).is_ok() && l.validate(g2).is_ok()),
        tol,
    )
}

pub(crate) fn pr1_from_parts(
    mu1: f64,
    mu2: f64,
    missing: usize,
    shared_layout: Option<&BipartiteLayout>,
    tol: f64,
) -> Result<Vec<CheckResult>> {
    let witness = Witness::EdgeDifference { missing };
    let mut out = vec![CheckResult::at_most(
        "pr1_gap",
        ClaimKind::Invariant,
        mu1 - mu2,
        (2.0 * missing as f64).sqrt(),
        tol,
    )
    .witness(witness.clone())];
    if shared_layout.is_some() {
        out.push(
            CheckResult::at_most(
                "pr1_gap_bipartite",
                ClaimKind::Invariant,
                mu1 - mu2,
                (missing as f64).sqrt(),
                tol,
            )
            .witness(witness),
        );
    }
    Ok(out)
}

/// Computed values for the star example of the pair lower bound, next to
/// the values stated in the literature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarPairExample {
    pub leaves: usize,
    pub s_computed: ExactValue,
    /// `2(n-1)/(n+1)`
    pub s_stated: ExactValue,
    /// `mu_{n+1}(K_{1,n}) + mu_2(K_n + K_1)`
    pub sum_computed: f64,
    /// `-1 - sqrt(n)`
    pub sum_stated: f64,
}

pub fn star_pair_example(leaves: usize) -> Result<StarPairExample> {
    if leaves == 0 {
        return Err(Error::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    let g = Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))?;
    let a = GraphAnalysis::new(&g)?;
    let l = leaves as i128;
    Ok(StarPairExample {
        leaves,
        s_computed: ExactValue(a.profile.s),
        s_stated: ExactValue(Rational::new(2 * (l - 1), l + 1)),
        sum_computed: a.spectrum.mu(leaves + 1) + a.complement_spectrum.mu(2),
        sum_stated: -1.0 - (leaves as f64).sqrt(),
    })
}

/// Every unordered bipartition of `0..n` into two nonempty parts, with
/// vertex 0 in the first part.
pub fn all_bipartitions(n: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    let count: u64 = if n >= 2 { (1u64 << (n - 1)) - 1 } else { 0 };
    (0..count).map(move |rest| {
        // Bits of `rest` place vertices 1..n into the first part; the
        // all-ones pattern is excluded so the second part is nonempty.
        let in_first = |v: usize| v == 0 || rest >> (v - 1) & 1 == 1;
        let v1 = (0..n).filter(|&v| in_first(v)).collect();
        let v2 = (0..n).filter(|&v| !in_first(v)).collect();
        (v1, v2)
    })
}

/// `count` seeded bipartitions of `0..n` with both parts nonempty.
pub fn random_bipartitions(n: usize, count: usize, seed: u64) -> Vec<(Vec<usize>, Vec<usize>)> {
    if n < 2 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let v1: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
        let v2: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
        if !v1.is_empty() && !v2.is_empty() {
            out.push((v1, v2));
        }
    }
    out
}

#[cfg(test)]
mod tests;
