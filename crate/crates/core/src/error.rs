use thiserror::Error;

use crate::diagram::{AxiomViolation, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a diagram needs at least one vertex")]
    EmptyDiagram,
    #[error("expected exactly one root (vertex without parent), found {0}")]
    RootCount(usize),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("parent map does not form a rooted tree (vertex {0} is unreachable from the root)")]
    NotATree(VertexId),
    #[error("vertex {0} lists a proximity target twice")]
    DuplicateProximity(VertexId),
    #[error("diagram violates the proximity axioms: {}", format_violations(.0))]
    Axioms(Vec<AxiomViolation>),
    #[error("weight vector has {found} entries for {expected} vertices")]
    WeightCount { expected: usize, found: usize },
    #[error("diagram is not consistent: vertex {vertex} has excess {excess}")]
    Inconsistent { vertex: VertexId, excess: i64 },
    #[error("diagram is not minimal")]
    NotMinimal,
    #[error("consistent diagram has no minimal form reachable by removing free vertices")]
    NoMinimalForm,
    #[error("diagram is not a minimal bamboo: {0}")]
    NotABamboo(String),
    #[error("invalid singularity spec: {0}")]
    InvalidSpec(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("malformed diagram JSON: {0}")]
    Json(String),
    #[error("enumeration exceeded the cap of {cap} diagrams")]
    ResourceLimit { cap: usize },
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn format_violations(v: &[AxiomViolation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
