use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group axiom violated: {0}")]
    GroupAxiom(String),
    #[error("Specht action solve inconsistent for generator {0}")]
    InconsistentAction(String),
    #[error("quotient by the Gram radical is zero for shape {0}")]
    ZeroQuotient(String),
    #[error("subspace is not invariant under generator {0}")]
    NotInvariant(String),
    #[error("generator labels differ: {0}")]
    LabelMismatch(String),
    #[error("module is indecomposable (endomorphism algebra is local)")]
    Indecomposable,
    #[error("constituents are Galois-conjugate; the module splits only over an extension field")]
    GaloisConjugate,
    #[error("unexpected endomorphism algebra of dimension {0}")]
    UnexpectedEndDimension(usize),
    #[error("irreducibility test inconclusive after {0} attempts")]
    Inconclusive(usize),
    #[error("polarization is degenerate")]
    Degenerate,
    #[error("dimension {0} is too large for exhaustive enumeration")]
    TooLarge(usize),
    #[error("{0}")]
    NotQuadraticType(String),
    #[error("extension inapplicable: {0}")]
    ExtensionInapplicable(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("set not invariant under given subgroup: {0}")]
    NotInSpread(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
