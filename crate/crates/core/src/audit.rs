//! Corpus construction and audit reports.
//!
//! A report is deterministic for a fixed configuration: corpus items are
//! evaluated in parallel but merged back in corpus order, and every random
//! choice is derived from the configured seed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::all_graphs;
use crate::error::{Error, Result};
use crate::generators::{generate, Family};
use crate::graph::{BipartiteLayout, Graph};
use crate::inequalities::{
    all_bipartitions, pr1_from_parts, random_bipartitions, CheckResult, ClaimKind, GraphAnalysis,
    TightnessRatios, LEAR_SCAN_CAP,
};
use crate::measures::{int, to_f64, ExactValue};
use crate::regularize::{bipartite_rough_regularize, fine_regularize, rough_regularize};
use crate::spectra::graph_spectrum;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_NAME: &str = "irregularity";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest order accepted for exhaustive corpora.
pub const EXHAUSTIVE_CAP: usize = 7;
/// Up to this order Haemers' bound is checked on every bipartition.
pub const HAEMERS_EXHAUSTIVE_CAP: usize = 6;
pub const DEFAULT_RANDOM_PARTITIONS: usize = 20;

/// Groups of checks that can be selected for an audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Irregularity,
    Bipartite,
    PairLower,
    PairUpper,
    MinSum,
    Haemers,
    Lear,
    Classical,
    Pr1,
    Regularization,
    Ratios,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::Irregularity,
        CheckKind::Bipartite,
        CheckKind::PairLower,
        CheckKind::PairUpper,
        CheckKind::MinSum,
        CheckKind::Haemers,
        CheckKind::Lear,
        CheckKind::Classical,
        CheckKind::Pr1,
        CheckKind::Regularization,
        CheckKind::Ratios,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Irregularity => "irregularity",
            CheckKind::Bipartite => "bipartite",
            CheckKind::PairLower => "pair_lower",
            CheckKind::PairUpper => "pair_upper",
            CheckKind::MinSum => "min_sum",
            CheckKind::Haemers => "haemers",
            CheckKind::Lear => "lear",
            CheckKind::Classical => "classical",
            CheckKind::Pr1 => "pr1",
            CheckKind::Regularization => "regularization",
            CheckKind::Ratios => "ratios",
        }
    }

    /// Parses `all` or a comma-separated list of names.
    pub fn parse_list(text: &str) -> Result<Vec<CheckKind>> {
        let mut set = BTreeSet::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                set.extend(Self::ALL);
            } else {
                set.insert(part.parse()?);
            }
        }
        if set.is_empty() {
            return Err(Error::InvalidParameter("no checks selected".into()));
        }
        Ok(set.into_iter().collect())
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub tol: f64,
    pub seed: u64,
    /// Human-readable description of the corpus.
    pub corpus: String,
    pub checks: Vec<CheckKind>,
    pub random_partitions: usize,
}

impl AuditConfig {
    pub fn new(corpus: impl Into<String>, checks: Vec<CheckKind>) -> Self {
        Self {
            tol: crate::inequalities::DEFAULT_TOL,
            seed: 0,
            corpus: corpus.into(),
            checks,
            random_partitions: DEFAULT_RANDOM_PARTITIONS,
        }
    }

    fn wants(&self, kind: CheckKind) -> bool {
        self.checks.contains(&kind)
    }
}

/// One graph to audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusItem {
    pub id: String,
    pub graph: Graph,
    pub layout: Option<BipartiteLayout>,
}

impl CorpusItem {
    pub fn new(id: impl Into<String>, graph: Graph, layout: Option<BipartiteLayout>) -> Self {
        Self {
            id: id.into(),
            graph,
            layout,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub s: ExactValue,
    pub var: ExactValue,
    pub s_value: f64,
    pub var_value: f64,
    /// Absent when evaluation failed.
    pub mu_max: Option<f64>,
    pub mu_min: Option<f64>,
    pub epsilon: Option<f64>,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub checks_run: usize,
    pub holds: usize,
    /// Failed audit checks.
    pub findings: usize,
    /// Failed invariant checks plus entries whose evaluation errored.
    pub breaches: usize,
    pub errors: usize,
}

impl Summary {
    pub fn from_entries(entries: &[AuditEntry]) -> Self {
        let mut s = Summary {
            graphs: entries.len(),
            ..Summary::default()
        };
        for e in entries {
            s.checks_run += e.checks.len();
            s.holds += e.checks.iter().filter(|c| c.holds).count();
            s.findings += e.checks.iter().filter(|c| c.is_finding()).count();
            s.breaches += e.checks.iter().filter(|c| c.is_breach()).count();
            if e.error.is_some() {
                s.errors += 1;
                s.breaches += 1;
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub graph_id: String,
    #[serde(flatten)]
    pub ratios: TightnessRatios,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub tool: String,
    pub tool_version: String,
    pub schema_version: u32,
    pub config: AuditConfig,
    pub entries: Vec<AuditEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ratio_table: Option<Vec<RatioRow>>,
    pub summary: Summary,
}

/// Overall outcome of an audit, in increasing severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AuditStatus {
    Clean,
    Findings,
    Breaches,
}

impl AuditReport {
    pub fn status(&self) -> AuditStatus {
        if self.summary.breaches > 0 {
            AuditStatus::Breaches
        } else if self.summary.findings > 0 {
            AuditStatus::Findings
        } else {
            AuditStatus::Clean
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Drops every check that holds, keeping entries with errors or failures.
    pub fn retain_failures(&mut self) {
        for e in &mut self.entries {
            e.checks.retain(|c| !c.holds);
        }
        self.entries
            .retain(|e| !e.checks.is_empty() || e.error.is_some());
    }

    /// One flat row per check.
    pub fn csv_rows(&self) -> Vec<CsvRow> {
        let mut rows = Vec::new();
        for e in &self.entries {
            for c in &e.checks {
                rows.push(CsvRow {
                    graph_id: e.graph_id.clone(),
                    n: e.n,
                    m: e.m,
                    s: e.s_value,
                    var: e.var_value,
                    mu_max: e.mu_max,
                    mu_min: e.mu_min,
                    check: c.name.clone(),
                    kind: c.kind,
                    lhs: c.lhs,
                    rhs: c.rhs,
                    margin: c.margin,
                    holds: c.holds,
                    witness: c
                        .witness
                        .as_ref()
                        .map(|w| serde_json::to_string(w).expect("witness serializes"))
                        .unwrap_or_default(),
                });
            }
        }
        rows
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub s: f64,
    pub var: f64,
    pub mu_max: Option<f64>,
    pub mu_min: Option<f64>,
    pub check: String,
    pub kind: ClaimKind,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
    pub witness: String,
}

/// Evaluates every item and assembles the report; items are processed in
/// parallel and the entries keep corpus order.
pub fn run_audit(items: &[CorpusItem], config: AuditConfig) -> AuditReport {
    let evaluated: Vec<(AuditEntry, Option<TightnessRatios>)> = items
        .par_iter()
        .enumerate()
        .map(|(index, item)| audit_item(index, item, &config))
        .collect();
    let ratio_table = config.wants(CheckKind::Ratios).then(|| {
        items
            .iter()
            .zip(&evaluated)
            .filter_map(|(item, (_, r))| {
                r.clone().map(|ratios| RatioRow {
                    graph_id: item.id.clone(),
                    ratios,
                })
            })
            .collect()
    });
    let entries: Vec<AuditEntry> = evaluated.into_iter().map(|(e, _)| e).collect();
    AuditReport {
        tool: TOOL_NAME.to_string(),
        tool_version: TOOL_VERSION.to_string(),
        schema_version: SCHEMA_VERSION,
        summary: Summary::from_entries(&entries),
        config,
        entries,
        ratio_table,
    }
}

/// Runs the selected checks on one item. The index seeds the random
/// bipartitions used for larger graphs.
pub fn audit_item(
    index: usize,
    item: &CorpusItem,
    config: &AuditConfig,
) -> (AuditEntry, Option<TightnessRatios>) {
    let g = &item.graph;
    let profile = crate::measures::DegreeProfile::new(g);
    let mut entry = AuditEntry {
        graph_id: item.id.clone(),
        n: g.n(),
        m: g.m(),
        s: ExactValue(profile.s),
        var: ExactValue(profile.var),
        s_value: to_f64(&profile.s),
        var_value: to_f64(&profile.var),
        mu_max: None,
        mu_min: None,
        epsilon: None,
        checks: Vec::new(),
        error: None,
    };
    match evaluate(index, item, config) {
        Ok((analysis, checks, ratios)) => {
            entry.mu_max = Some(analysis.mu());
            entry.mu_min = Some(analysis.spectrum().smallest());
            entry.epsilon = Some(analysis.epsilon());
            entry.checks = checks;
            (entry, ratios)
        }
        Err(e) => {
            entry.error = Some(e.to_string());
            (entry, None)
        }
    }
}

type Evaluation = (GraphAnalysis, Vec<CheckResult>, Option<TightnessRatios>);

fn evaluate(index: usize, item: &CorpusItem, config: &AuditConfig) -> Result<Evaluation> {
    let g = &item.graph;
    let tol = config.tol;
    let a = GraphAnalysis::new(g)?;
    let layout = item.layout.as_ref();
    if let Some(layout) = layout {
        layout.validate(g)?;
    }
    let order_two = g.n() >= 2;
    let mut checks = Vec::new();

    if config.wants(CheckKind::Irregularity) {
        checks.extend(a.irregularity_checks(tol));
    }
    if config.wants(CheckKind::Bipartite) {
        if let Some(layout) = layout {
            checks.extend(a.bipartite_checks(layout, tol)?);
        }
    }
    if config.wants(CheckKind::Classical) {
        checks.extend(a.classical_checks(layout, tol)?);
    }
    if order_two && config.wants(CheckKind::PairLower) {
        checks.extend(a.pair_lower_checks(tol)?);
    }
    if order_two && config.wants(CheckKind::PairUpper) {
        checks.extend(a.pair_upper_audit(tol)?);
    }
    if order_two && config.wants(CheckKind::MinSum) {
        checks.push(a.min_sum_check(tol)?);
    }
    if order_two && config.wants(CheckKind::Haemers) {
        let partitions: Vec<_> = if g.n() <= HAEMERS_EXHAUSTIVE_CAP {
            all_bipartitions(g.n()).collect()
        } else {
            random_bipartitions(
                g.n(),
                config.random_partitions,
                mix_seed(config.seed, index),
            )
        };
        for (v1, v2) in partitions {
            checks.push(a.haemers_check(&v1, &v2, tol)?);
        }
    }
    if order_two && config.wants(CheckKind::Lear) {
        checks.push(a.lear_split(tol, LEAR_SCAN_CAP)?);
    }
    if config.wants(CheckKind::Pr1) {
        checks.extend(pr1_against_regularized(&a, layout, tol)?);
    }
    if config.wants(CheckKind::Regularization) {
        checks.extend(regularization_checks(g, layout, tol)?);
    }
    let ratios = config
        .wants(CheckKind::Ratios)
        .then(|| a.tightness_ratios());
    Ok((a, checks, ratios))
}

/// Compares `g` with its rough regularization in both directions, and with
/// the class-wise regularization when a layout is present.
fn pr1_against_regularized(
    a: &GraphAnalysis,
    layout: Option<&BipartiteLayout>,
    tol: f64,
) -> Result<Vec<CheckResult>> {
    let g = a.graph();
    let mut out = Vec::new();
    let mut compare = |other: &Graph, shared: Option<&BipartiteLayout>| -> Result<()> {
        let mu_other = graph_spectrum::<f64>(other)?.largest();
        out.extend(pr1_from_parts(
            a.mu(),
            mu_other,
            g.edges_missing_from(other)?,
            shared,
            tol,
        )?);
        out.extend(pr1_from_parts(
            mu_other,
            a.mu(),
            other.edges_missing_from(g)?,
            shared,
            tol,
        )?);
        Ok(())
    };
    compare(&rough_regularize(g)?.result, None)?;
    if let Some(layout) = layout {
        compare(&bipartite_rough_regularize(g, layout)?.result, Some(layout))?;
    }
    Ok(out)
}

/// Edit-count and degree-spread contracts of the regularization procedures,
/// as checks `lhs <= rhs` with exact integer/rational sides.
fn regularization_checks(
    g: &Graph,
    layout: Option<&BipartiteLayout>,
    tol: f64,
) -> Result<Vec<CheckResult>> {
    let inv = ClaimKind::Invariant;
    let mut out = Vec::new();
    let exact_le = |name: &str, lhs: crate::measures::Rational, rhs: crate::measures::Rational| {
        CheckResult::with_margin(
            name,
            inv,
            to_f64(&lhs),
            to_f64(&rhs),
            to_f64(&(rhs - lhs)),
            tol,
        )
    };

    let rough = rough_regularize(g)?;
    let replay_ok = rough.script.replay(g).ok().as_ref() == Some(&rough.result);
    out.push(exact_le(
        "rough_edits",
        int(rough.edits()),
        rough.certified_bound,
    ));
    out.push(exact_le(
        "rough_spread",
        int(rough.result.max_degree() - rough.result.min_degree()),
        int(1),
    ));
    out.push(exact_le(
        "rough_replay",
        int(usize::from(!replay_ok)),
        int(0),
    ));

    if let Some(layout) = layout {
        let bip = bipartite_rough_regularize(g, layout)?;
        let spread = |range: std::ops::Range<usize>| {
            let degrees: Vec<usize> = range.map(|v| bip.result.degree(v)).collect();
            degrees.iter().max().unwrap() - degrees.iter().min().unwrap()
        };
        let replay_ok = bip.script.replay(g).ok().as_ref() == Some(&bip.result);
        out.push(exact_le(
            "bipartite_rough_edits",
            int(bip.edits()),
            bip.certified_bound,
        ));
        out.push(exact_le(
            "bipartite_rough_spread",
            int(spread(layout.class_a()).max(spread(layout.class_b()))),
            int(1),
        ));
        out.push(exact_le(
            "bipartite_rough_replay",
            int(usize::from(!replay_ok)),
            int(0),
        ));
    }

    let fine = fine_regularize(&rough.result)?;
    out.push(exact_le(
        "fine_edits",
        int(fine.edits()),
        fine.certified_bound,
    ));
    out.push(exact_le(
        "fine_spread",
        int(fine.result.max_degree() - fine.result.min_degree()),
        int(0),
    ));
    Ok(out)
}

fn mix_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// All labeled graphs on `n <= EXHAUSTIVE_CAP` vertices, identified by
/// their edge masks.
pub fn exhaustive_corpus(n: usize) -> Result<Vec<CorpusItem>> {
    if n > EXHAUSTIVE_CAP {
        return Err(Error::SizeCap {
            n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    Ok(all_graphs(n)?
        .map(|(mask, g)| CorpusItem::new(mask.to_string(), g, None))
        .collect())
}

/// Named graph families for generated corpora.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Complete,
    Empty,
    /// `K_{1,n}`
    Star,
    Path,
    Cycle,
    /// `K_{n,n}`
    CompleteBipartite,
    /// `K_{n,n+1}`
    NearBalanced,
    /// `K_n` plus an isolated vertex.
    CompletePlusIsolated,
    Gnp,
    RandomBipartite,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Complete,
        FamilyKind::Empty,
        FamilyKind::Star,
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::CompleteBipartite,
        FamilyKind::NearBalanced,
        FamilyKind::CompletePlusIsolated,
        FamilyKind::Gnp,
        FamilyKind::RandomBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::Empty => "empty",
            FamilyKind::Star => "star",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::NearBalanced => "near_balanced",
            FamilyKind::CompletePlusIsolated => "complete_plus_isolated",
            FamilyKind::Gnp => "gnp",
            FamilyKind::RandomBipartite => "random_bipartite",
        }
    }

    fn is_random(self) -> bool {
        matches!(self, FamilyKind::Gnp | FamilyKind::RandomBipartite)
    }

    fn min_parameter(self) -> usize {
        if self == FamilyKind::Cycle {
            3
        } else {
            1
        }
    }

    fn family(self, k: usize) -> Family {
        match self {
            FamilyKind::Complete => Family::Complete { n: k },
            FamilyKind::Empty => Family::Empty { n: k },
            FamilyKind::Star => Family::Star { leaves: k },
            FamilyKind::Path => Family::Path { n: k },
            FamilyKind::Cycle => Family::Cycle { n: k },
            FamilyKind::CompleteBipartite => Family::CompleteBipartite { a: k, b: k },
            FamilyKind::NearBalanced => Family::CompleteBipartite { a: k, b: k + 1 },
            FamilyKind::CompletePlusIsolated => Family::DisjointUnion(
                Box::new(Family::Complete { n: k }),
                Box::new(Family::Empty { n: 1 }),
            ),
            FamilyKind::Gnp | FamilyKind::RandomBipartite => {
                unreachable!("random families are sampled, not indexed")
            }
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// Parameters for a generated corpus.
///
/// Deterministic families take the parameters `k = nmin, nmin + step, ...`
/// up to `nmax` (star: `k` leaves; near_balanced: `K_{k,k+1}`). Random families draw `count`
/// graphs with order (or class sizes) uniform in `nmin..=nmax`, edge
/// probability uniform in `[0, 1)`, and a per-graph seed, all from a stream
/// seeded by `seed`.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub nmin: usize,
    pub nmax: usize,
    pub step: usize,
    pub count: usize,
    pub seed: u64,
}

impl FamilySpec {
    /// A deterministic sweep over `nmin..=nmax` with step 1; random
    /// families also need `count` and `seed`.
    pub fn new(kind: FamilyKind, nmin: usize, nmax: usize) -> Self {
        Self {
            kind,
            nmin,
            nmax,
            step: 1,
            count: 0,
            seed: 0,
        }
    }

    pub fn describe(&self) -> String {
        if self.kind.is_random() {
            format!(
                "family={} nmin={} nmax={} count={} seed={}",
                self.kind.name(),
                self.nmin,
                self.nmax,
                self.count,
                self.seed
            )
        } else {
            format!(
                "family={} nmin={} nmax={} step={}",
                self.kind.name(),
                self.nmin,
                self.nmax,
                self.step
            )
        }
    }
}

pub fn family_corpus(spec: &FamilySpec) -> Result<Vec<CorpusItem>> {
    let nmin = spec.nmin.max(spec.kind.min_parameter());
    if spec.nmax < nmin {
        return Err(Error::InvalidParameter(format!(
            "nmax = {} is below the smallest admissible size {nmin}",
            spec.nmax
        )));
    }
    if spec.step == 0 {
        return Err(Error::InvalidParameter("step must be positive".into()));
    }
    let name = spec.kind.name();
    if !spec.kind.is_random() {
        return (nmin..=spec.nmax)
            .step_by(spec.step)
            .map(|k| {
                let gen = generate(&spec.kind.family(k))?;
                Ok(CorpusItem::new(
                    format!("{name}-{k}"),
                    gen.graph,
                    gen.layout,
                ))
            })
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|i| {
            let family = match spec.kind {
                FamilyKind::Gnp => Family::Gnp {
                    n: rng.gen_range(nmin..=spec.nmax),
                    p: rng.gen(),
                    seed: rng.gen(),
                },
                _ => Family::RandomBipartite {
                    a: rng.gen_range(nmin..=spec.nmax),
                    b: rng.gen_range(nmin..=spec.nmax),
                    p: rng.gen(),
                    seed: rng.gen(),
                },
            };
            let gen = generate(&family)?;
            Ok(CorpusItem::new(
                format!("{name}-{i}"),
                gen.graph,
                gen.layout,
            ))
        })
        .collect()
}
