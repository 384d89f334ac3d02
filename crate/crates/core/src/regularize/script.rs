use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One edge change. Endpoints are stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditStep {
    Add(usize, usize),
    Remove(usize, usize),
}

impl EditStep {
    pub fn add(u: usize, v: usize) -> Self {
        Self::Add(u.min(v), u.max(v))
    }

    pub fn remove(u: usize, v: usize) -> Self {
        Self::Remove(u.min(v), u.max(v))
    }

    pub fn endpoints(self) -> (usize, usize) {
        match self {
            Self::Add(u, v) | Self::Remove(u, v) => (u, v),
        }
    }

    /// The same pair change seen from the complement graph.
    pub fn complemented(self) -> Self {
        match self {
            Self::Add(u, v) => Self::Remove(u, v),
            Self::Remove(u, v) => Self::Add(u, v),
        }
    }
}

impl fmt::Display for EditStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Add(u, v) => write!(f, "+{u} {v}"),
            Self::Remove(u, v) => write!(f, "-{u} {v}"),
        }
    }
}

impl FromStr for EditStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("malformed edit step {s:?}"));
        let mut chars = s.trim().chars();
        let sign = chars.next();
        let rest = chars.as_str();
        let mut fields = rest.split_whitespace().map(str::parse::<usize>);
        let (u, v) = match (fields.next(), fields.next(), fields.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) if u != v => (u, v),
            _ => return Err(bad()),
        };
        match sign {
            Some('+') => Ok(Self::add(u, v)),
            Some('-') => Ok(Self::remove(u, v)),
            _ => Err(bad()),
        }
    }
}

/// Ordered edge insertions and deletions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EditScript {
    steps: Vec<EditStep>,
}

impl EditScript {
    pub fn new(steps: Vec<EditStep>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[EditStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the script to `source`, failing on the first step that adds a
    /// present edge or removes an absent one.
    pub fn replay(&self, source: &Graph) -> Result<Graph> {
        let mut g = source.clone();
        for (i, &step) in self.steps.iter().enumerate() {
            let (u, v) = step.endpoints();
            let in_range = u < g.n() && v < g.n() && u != v;
            let ok = in_range
                && match step {
                    EditStep::Add(..) => g.insert_edge(u, v),
                    EditStep::Remove(..) => g.delete_edge(u, v),
                };
            if !ok {
                let reason = if !in_range {
                    "vertex out of range".to_string()
                } else if matches!(step, EditStep::Add(..)) {
                    "edge already present".to_string()
                } else {
                    "edge absent".to_string()
                };
                return Err(Error::Replay {
                    step: i,
                    reason: format!("{step}: {reason}"),
                });
            }
        }
        Ok(g)
    }

    /// One step per line: `+u v` or `-u v`.
    pub fn to_text(&self) -> String {
        self.steps.iter().map(|s| format!("{s}\n")).collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// A graph under modification that records every change it undergoes.
pub(crate) struct Tracked {
    pub graph: Graph,
    pub steps: Vec<EditStep>,
}

impl Tracked {
    pub fn new(graph: Graph) -> Self {
        Self {
            graph,
            steps: Vec::new(),
        }
    }

    pub fn add(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || !self.graph.insert_edge(u, v) {
            return Err(Error::AlgorithmInvariant(format!(
                "attempted to add existing edge {{{u}, {v}}}"
            )));
        }
        self.steps.push(EditStep::add(u, v));
        Ok(())
    }

    pub fn remove(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.graph.delete_edge(u, v) {
            return Err(Error::AlgorithmInvariant(format!(
                "attempted to remove absent edge {{{u}, {v}}}"
            )));
        }
        self.steps.push(EditStep::remove(u, v));
        Ok(())
    }

    /// Deletes `vw` and adds `uw` for the lowest-index `w` adjacent to `v`
    /// but neither equal nor adjacent to `u`.
    pub fn shift_edge(&mut self, from: usize, to: usize) -> Result<()> {
        let w = self
            .graph
            .neighbors(from)
            .find(|&w| w != to && !self.graph.has_edge(to, w))
            .ok_or_else(|| {
                Error::AlgorithmInvariant(format!("no neighbor of {from} is free to move to {to}"))
            })?;
        self.remove(from, w)?;
        self.add(to, w)
    }

    /// Appends the complement-side history of `other` (a tracked complement
    /// of this graph's current state) and adopts its final state.
    pub fn absorb_complement(&mut self, other: Tracked) {
        self.steps
            .extend(other.steps.into_iter().map(EditStep::complemented));
        self.graph = other.graph.complement();
    }
}
