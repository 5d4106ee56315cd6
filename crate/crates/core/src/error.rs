use thiserror::Error;

/// Errors raised while building or querying trees and forests.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("a tree on {n} vertices needs {expected} edges, got {got}")]
    EdgeCount { n: usize, expected: usize, got: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph contains a cycle")]
    Cycle,
    #[error("cannot delete the only vertex of a tree")]
    DeleteFromSingleton,
    #[error("operation needs at least {needed} vertices, tree has {n}")]
    TooSmall { needed: usize, n: usize },
}

/// Errors raised while reading the line-oriented tree and forest text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error(transparent)]
    Invalid(#[from] TreeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("trees are not isomorphic")]
    NotIsomorphic,
    #[error("malformed canonical code: {0}")]
    MalformedCode(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} outside supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("no attachment of a leaf to card_u matches card_v")]
    NoCandidate,
    #[error("accepted candidates fall into {classes} isomorphism classes")]
    MultipleCandidates { classes: usize },
    #[error("card_u must be a single tree, found {components} components")]
    CardUNotTree { components: usize },
    #[error("cards have {u} and {v} vertices; they must match")]
    CardOrderMismatch { u: usize, v: usize },
    #[error("index built for order {index}, tree has order {tree}")]
    OrderMismatch { index: usize, tree: usize },
    #[error("tree is not part of the indexed universe")]
    NotInUniverse,
    #[error("class reconstruction number is undefined for order {0}")]
    DegenerateOrder(usize),
    #[error(transparent)]
    Tree(#[from] TreeError),
}
