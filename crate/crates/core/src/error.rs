use thiserror::Error;

/// Errors raised by the engine.
///
/// Input problems (`Parse`, `InvalidTree`, `Dimension`) are recoverable and
/// reported to the user; the remaining variants flag a violated structural
/// identity and carry enough context to locate it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("path does not make an extreme turn at vertex {vertex}")]
    NotATurn { vertex: String },

    #[error("arc {arc} is a boundary arc")]
    BoundaryArc { arc: String },

    #[error("arc {arc} is not a member of the facet")]
    NotInFacet { arc: String },

    #[error("flag colors disagree at the marked corners of arc {arc}; handedness convention is inconsistent")]
    ColorMismatch { arc: String },

    #[error("facet invariant violated: {0}")]
    FacetInvariant(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("vector has length {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },

    #[error("partition is not the image of any facet")]
    UnknownPartition,

    #[error("module is not a submodule of the given module")]
    NotASubmodule,

    #[error("no torsion decomposition found for {module}")]
    NoTorsionDecomposition { module: String },

    #[error("{0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
