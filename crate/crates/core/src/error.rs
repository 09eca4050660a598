use thiserror::Error;

use crate::recognition::{ClassId, Witness};

/// Errors raised by graph construction, I/O and the colouring pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("unknown fixture `{0}` (expected one of: mycielski_grotzsch, fig3_w3x4, fig5_base)")]
    UnknownFixture(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not {class}: found induced {witness}")]
    NotInClass { class: ClassId, witness: Witness },

    #[error("input is not {expected}: found induced {witness}")]
    Precondition { expected: &'static str, witness: Witness },

    #[error("vertices {0:?} do not form a clique")]
    NotClique(Vec<usize>),

    #[error("clique of size {given} is not maximum (clique number is {omega})")]
    NotMaximum { given: usize, omega: usize },

    #[error("clique number {omega} below the minimum of {min} for this colourer")]
    OmegaTooSmall { omega: usize, min: usize },

    #[error("{operation} is limited to n <= {limit}, got n = {n}")]
    Capability { operation: &'static str, limit: usize, n: usize },

    #[error("colouring covers {given} vertices, graph has {n}")]
    PartialColouring { given: usize, n: usize },

    #[error("colour 0 assigned to vertex {0}; colours are 1-based")]
    ZeroColour(usize),

    #[error("structural property violated during colouring: {0}")]
    Invariant(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
