use thiserror::Error;

/// Reasons an edge-list document is rejected. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected `<n> <m>` or `<n> <m> bipartite <a>`")]
    MalformedHeader { line: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed edge, expected `<u> <v>`")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error(
        "line {line}: edge {{{u}, {v}}} lies inside one class of the bipartite layout (a = {a})"
    )]
    CrossingViolation {
        line: usize,
        u: usize,
        v: usize,
        a: usize,
    },
    #[error("header declares {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("bipartite class size a = {a} must satisfy 1 <= a < n = {n}")]
    LayoutSize { a: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex counts differ: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("invalid bipartite layout: {0}")]
    InvalidLayout(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("blow-up factor must be positive")]
    ZeroBlowUp,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("spectrum has {found} values, expected {expected}")]
    SpectrumLength { expected: usize, found: usize },
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    Convergence { residual: f64, sweeps: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("algorithm invariant breached: {0}")]
    AlgorithmInvariant(String),
    #[error("n = {n} exceeds the cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("illegal edit step {step}: {reason}")]
    Replay { step: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
