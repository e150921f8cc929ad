use thiserror::Error;

use crate::lattice::NamedSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested object is not defined for this `n`.
    #[error("{what} is not defined for n = {n} (requires n {requirement})")]
    Domain {
        what: &'static str,
        n: i64,
        requirement: &'static str,
    },

    #[error("set {set} holds {expected}-tuples, got a {found}-tuple")]
    ArityMismatch {
        set: NamedSet,
        expected: usize,
        found: usize,
    },

    /// A closed form produced a non-integer count. Only reachable through a
    /// wrong coefficient table.
    #[error("closed form for {set} at n = {n}: {numerator} is not divisible by {denominator}")]
    InexactDivision {
        set: NamedSet,
        n: i64,
        numerator: String,
        denominator: u32,
    },

    /// Components that are proven disjoint were found to overlap.
    #[error("components of {set} overlap at n = {n}: enumerated union has {union} points, component sizes sum to {sum}")]
    Inconsistent {
        set: NamedSet,
        n: i64,
        union: usize,
        sum: usize,
    },

    #[error("invalid range [{lo}, {hi}]: {reason}")]
    Range {
        lo: i64,
        hi: i64,
        reason: &'static str,
    },

    #[error("graph has {edges} edges; exhaustive matching search is capped at {cap}")]
    GraphTooLarge { edges: usize, cap: usize },

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: loop edge on vertex {vertex:?}")]
    LoopEdge { line: usize, vertex: String },

    #[error("{labels} labels supplied for a graph on {vertices} vertices")]
    LabelCount { labels: usize, vertices: usize },

    #[error("unknown set tag {0:?}")]
    UnknownSet(String),
}
