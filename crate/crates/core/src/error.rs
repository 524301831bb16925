//! Crate-wide error type.

use crate::analysis::DeltaTriple;
use crate::realizability::Clause;

/// Everything that can go wrong across the crate.
///
/// Operations document which variants they produce; nothing here is
/// recoverable state, so a single flat enum keeps call sites simple.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Requested graph order outside 1..=64.
    #[error("graph order {0} outside supported range 1..=64")]
    InvalidOrder(usize),

    /// An edge endpoint pair with u == v.
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),

    /// Vertex index not below the graph order.
    #[error("vertex {v} out of range for graph on {n} vertices")]
    BadVertex { v: usize, n: usize },

    /// Induced subgraph over an empty vertex selection.
    #[error("empty vertex selection")]
    EmptySelection,

    /// Malformed serialized graph (graph6 or JSON).
    #[error("format error: {0}")]
    FormatError(String),

    /// Operation requires a connected graph.
    #[error("graph is not connected")]
    NotConnected,

    /// Operation undefined on a single-vertex graph.
    #[error("operation undefined for a one-vertex graph")]
    Degenerate,

    /// Local connectivity is undefined for adjacent endpoints.
    #[error("vertices {0} and {1} are adjacent; separator count undefined")]
    AdjacentPair(usize, usize),

    /// Local connectivity is undefined for identical endpoints.
    #[error("identical endpoints {0}")]
    SamePair(usize),

    /// Enumeration universe exceeds the supported order for its mode.
    #[error("universe for n = {n} too large; this mode supports n <= {limit}")]
    UniverseTooLarge { n: usize, limit: usize },

    /// Realizability questions are answered only for n >= 8.
    #[error("n = {n} below the characterized range (n >= 8); use the exhaustive census instead")]
    OutOfTheoremRange { n: usize },

    /// The queried triple is infeasible, so no witness exists.
    #[error("no graph realizes the requested triple (clause {clause})")]
    NotRealizable { clause: Clause },

    /// A constructed witness failed its own verification.
    #[error("construction produced {got} instead of {expected}")]
    ConstructionMismatch {
        expected: DeltaTriple,
        got: DeltaTriple,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
