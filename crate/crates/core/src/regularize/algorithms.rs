//! Edge-rewiring procedures that push a graph towards regularity.
//!
//! Whenever a step may choose among several vertices, the lowest index
//! wins, so every run yields the same edit script.

use std::collections::BTreeSet;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{BipartiteLayout, Graph};
use crate::measures::{int, s2_deviation, DegreeProfile, Rational};

use super::script::{EditScript, Tracked};

/// A regularized graph, the edits that produced it, and the bound the edit
/// count is certified against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularizationOutcome {
    pub result: Graph,
    pub script: EditScript,
    pub certified_bound: Rational,
}

impl RegularizationOutcome {
    pub fn edits(&self) -> usize {
        self.script.len()
    }

    /// `|script| <= bound`; for integer edit counts this is the same as
    /// comparing against the floor of the bound.
    pub fn within_bound(&self) -> bool {
        int(self.edits()) <= self.certified_bound
    }

    fn from_tracked(tracked: Tracked, certified_bound: Rational) -> Self {
        Self {
            result: tracked.graph,
            script: EditScript::new(tracked.steps),
            certified_bound,
        }
    }
}

/// Same `n` and `m`, maximum degree at most minimum degree plus one, using
/// at most `s(g)` edge changes.
///
/// With `d = floor(2m/n)`, edges first move from a maximum-degree vertex to
/// a minimum-degree one while `delta < d` and `Delta > d + 1`. If `delta = d`
/// afterwards, edges move from vertices of degree at least `d + 2` to
/// vertices of degree `d`. Otherwise `Delta = d + 1` and the same second
/// phase runs on the complement, thresholded at its minimum degree.
pub fn rough_regularize(g: &Graph) -> Result<RegularizationOutcome> {
    let bound = DegreeProfile::new(g).s;
    let d = 2 * g.m() / g.n();
    let mut work = Tracked::new(g.clone());

    loop {
        let (u, low) = lowest_min(&work.graph, 0..g.n());
        let (v, high) = lowest_max(&work.graph, 0..g.n());
        if !(low < d && high > d + 1) {
            break;
        }
        work.shift_edge(v, u)?;
    }

    let (low, high) = (work.graph.min_degree(), work.graph.max_degree());
    if high > low + 1 {
        if low == d {
            drain_excess(&mut work, d)?;
        } else if high == d + 1 {
            let mut complement = Tracked::new(work.graph.complement());
            let threshold = complement.graph.min_degree();
            drain_excess(&mut complement, threshold)?;
            work.absorb_complement(complement);
        } else {
            return Err(Error::AlgorithmInvariant(format!(
                "degree range [{low}, {high}] after the first phase with d = {d}"
            )));
        }
    }
    Ok(RegularizationOutcome::from_tracked(work, bound))
}

/// While some vertex has degree `>= threshold + 2`, move one of its edges to
/// a vertex of degree exactly `threshold`.
fn drain_excess(work: &mut Tracked, threshold: usize) -> Result<()> {
    let n = work.graph.n();
    while let Some(v) = (0..n).find(|&v| work.graph.degree(v) >= threshold + 2) {
        let u = (0..n)
            .find(|&u| work.graph.degree(u) == threshold)
            .ok_or_else(|| {
                Error::AlgorithmInvariant(format!("no vertex of degree {threshold} left"))
            })?;
        work.shift_edge(v, u)?;
    }
    Ok(())
}

/// Bipartite variant: same classes and `m`, degrees within each class differ
/// by at most one, using at most `s2(g)` edge changes. Each class is
/// balanced separately by moving edges between its own vertices, which
/// leaves the other class's degrees untouched.
pub fn bipartite_rough_regularize(
    g: &Graph,
    layout: &BipartiteLayout,
) -> Result<RegularizationOutcome> {
    let bound = s2_deviation(g, layout)?;
    let mut work = Tracked::new(g.clone());
    balance_class(&mut work, layout.class_a())?;
    balance_class(&mut work, layout.class_b())?;
    Ok(RegularizationOutcome::from_tracked(work, bound))
}

fn balance_class(work: &mut Tracked, class: Range<usize>) -> Result<()> {
    let d = work.graph.m() / class.len();

    loop {
        let (u, low) = lowest_min(&work.graph, class.clone());
        let (v, high) = lowest_max(&work.graph, class.clone());
        if !(low < d && high > d + 1) {
            break;
        }
        work.shift_edge(v, u)?;
    }

    let (_, low) = lowest_min(&work.graph, class.clone());
    let (_, high) = lowest_max(&work.graph, class.clone());
    if high <= low + 1 {
        return Ok(());
    }
    let find = |g: &Graph, pred: &dyn Fn(usize) -> bool| class.clone().find(|&x| pred(g.degree(x)));
    if low == d {
        while let Some(v) = find(&work.graph, &|deg| deg >= d + 2) {
            let u = find(&work.graph, &|deg| deg == d).ok_or_else(|| {
                Error::AlgorithmInvariant(format!("no class vertex of degree {d} left"))
            })?;
            work.shift_edge(v, u)?;
        }
    } else if high == d + 1 {
        while let Some(u) = find(&work.graph, &|deg| deg < d) {
            let v = find(&work.graph, &|deg| deg == d + 1).ok_or_else(|| {
                Error::AlgorithmInvariant(format!("no class vertex of degree {} left", d + 1))
            })?;
            work.shift_edge(v, u)?;
        }
    } else {
        return Err(Error::AlgorithmInvariant(format!(
            "class degree range [{low}, {high}] after the first phase with d = {d}"
        )));
    }
    Ok(())
}

/// Turns a graph whose degrees are all `d` or `d + 1` into an `r`-regular
/// graph, `r` in `{d, d + 1}`, with at most `3n/2` edge changes. `m` may
/// change.
///
/// The vertices of degree `d + 1` are paired off: first by deleting edges
/// inside that set, then two at a time by deleting `uw`, `vt` and adding
/// `wt`. When the set has odd size the procedure runs on the complement,
/// where the corresponding set is even.
pub fn fine_regularize(g: &Graph) -> Result<RegularizationOutcome> {
    let (low, high) = (g.min_degree(), g.max_degree());
    if high > low + 1 {
        return Err(Error::Precondition(format!(
            "degrees must differ by at most one, found range [{low}, {high}]"
        )));
    }
    let bound = int(3 * g.n()) / int(2);
    let mut work = Tracked::new(g.clone());
    if high == low {
        return Ok(RegularizationOutcome::from_tracked(work, bound));
    }
    let upper = g.degrees().iter().filter(|&&x| x == high).count();
    if upper % 2 == 0 {
        pair_off(&mut work, low)?;
    } else {
        let mut complement = Tracked::new(g.complement());
        let threshold = complement.graph.min_degree();
        pair_off(&mut complement, threshold)?;
        work.absorb_complement(complement);
    }
    Ok(RegularizationOutcome::from_tracked(work, bound))
}

fn pair_off(work: &mut Tracked, d: usize) -> Result<()> {
    let mut high: BTreeSet<usize> = (0..work.graph.n())
        .filter(|&v| work.graph.degree(v) == d + 1)
        .collect();

    while let Some((u, v)) = first_edge_within(&work.graph, &high) {
        work.remove(u, v)?;
        high.remove(&u);
        high.remove(&v);
    }

    while high.len() >= 2 {
        let mut it = high.iter().copied();
        let (u, v) = (it.next().unwrap(), it.next().unwrap());
        let g = &work.graph;
        let (w, t) = g
            .neighbors(u)
            .flat_map(|w| g.neighbors(v).map(move |t| (w, t)))
            .find(|&(w, t)| w != t && w != v && t != u && !g.has_edge(w, t))
            .ok_or_else(|| {
                Error::AlgorithmInvariant(format!(
                    "no disjoint neighbors available for the pair ({u}, {v})"
                ))
            })?;
        work.remove(u, w)?;
        work.remove(v, t)?;
        work.add(w, t)?;
        high.remove(&u);
        high.remove(&v);
    }

    if !high.is_empty() {
        return Err(Error::AlgorithmInvariant(
            "odd number of vertices of the higher degree".into(),
        ));
    }
    Ok(())
}

fn first_edge_within(g: &Graph, set: &BTreeSet<usize>) -> Option<(usize, usize)> {
    set.iter()
        .flat_map(|&u| set.range(u + 1..).map(move |&v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v))
}

fn lowest_min(g: &Graph, range: Range<usize>) -> (usize, usize) {
    range
        .map(|v| (v, g.degree(v)))
        .min_by_key(|&(v, d)| (d, v))
        .expect("nonempty vertex range")
}

fn lowest_max(g: &Graph, range: Range<usize>) -> (usize, usize) {
    range
        .map(|v| (v, g.degree(v)))
        .min_by_key(|&(v, d)| (std::cmp::Reverse(d), v))
        .expect("nonempty vertex range")
}
