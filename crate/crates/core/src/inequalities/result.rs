use serde::{Deserialize, Serialize};

use crate::measures::ExactValue;

pub const DEFAULT_TOL: f64 = 1e-8;

/// How a failed check is classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// Expected to hold on every input; a failure is an invariant breach.
    Invariant,
    /// A literal published claim under audit; a failure is a finding.
    Audit,
}

/// Which complement pairing a `k`-indexed eigenvalue sum uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pairing {
    /// `mu_k(G) + mu_{n-k+1}(complement)`, `k = 1..n-1`.
    A,
    /// `mu_k(G) + mu_{n-k+2}(complement)`, `k = 2..n`.
    B,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Irregularity {
        epsilon: f64,
        mu: f64,
        mean_degree: f64,
    },
    Exact {
        lhs: ExactValue,
        rhs: ExactValue,
    },
    Index {
        k: usize,
        index_in_graph: usize,
        index_in_complement: usize,
        mu_graph: f64,
        mu_complement: f64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        pairing: Option<Pairing>,
    },
    Partition {
        v1: Vec<usize>,
        v2: Vec<usize>,
        e1: usize,
        e2: usize,
        cut: usize,
    },
    Subset {
        subset: Vec<usize>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        exhaustive_best: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        exhaustive_subset: Option<Vec<usize>>,
    },
    Bipartite {
        s2: ExactValue,
        center: f64,
        swap_bound: f64,
    },
    EdgeDifference {
        missing: usize,
    },
}

/// One instance of a claim `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub kind: ClaimKind,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; negative values are violations.
    pub margin: f64,
    /// `margin >= -tol`
    pub holds: bool,
    pub tol: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl CheckResult {
    /// Result for the claim `lhs <= rhs`.
    pub fn at_most(name: &str, kind: ClaimKind, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::with_margin(name, kind, lhs, rhs, rhs - lhs, tol)
    }

    /// Result whose margin was computed by a more accurate route than
    /// `rhs - lhs` (exact arithmetic).
    pub fn with_margin(
        name: &str,
        kind: ClaimKind,
        lhs: f64,
        rhs: f64,
        margin: f64,
        tol: f64,
    ) -> Self {
        Self {
            name: name.to_string(),
            kind,
            lhs,
            rhs,
            margin,
            holds: margin >= -tol,
            tol,
            witness: None,
        }
    }

    pub fn witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    /// A failed audit check.
    pub fn is_finding(&self) -> bool {
        !self.holds && self.kind == ClaimKind::Audit
    }

    /// A failed invariant check.
    pub fn is_breach(&self) -> bool {
        !self.holds && self.kind == ClaimKind::Invariant
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn holds_tracks_margin() {
        let r = CheckResult::at_most("x", ClaimKind::Invariant, 1.0, 1.0 - 1e-9, 1e-8);
        assert!(r.holds);
        let r = CheckResult::at_most("x", ClaimKind::Audit, 1.0, 0.5, 1e-8);
        assert!(!r.holds && r.is_finding() && !r.is_breach());
        assert_eq!(r.margin, -0.5);
    }
}
