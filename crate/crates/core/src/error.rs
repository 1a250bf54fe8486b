use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("carrier mismatch: expected size {expected}, got {got}")]
    CarrierMismatch { expected: usize, got: usize },
    #[error("duplicate identifier `{0}` in carrier")]
    DuplicateIdentifier(String),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("matrix dimensions {rows}x{cols} do not match carriers {want_rows}x{want_cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("carrier larger than {max} not supported (got {got})", max = crate::bitset::MAX_CARRIER)]
    CarrierTooLarge { got: usize },
    #[error("concept not in lattice")]
    ConceptNotInLattice,
    #[error("unsupported relation sort {0} for this operation")]
    UnsupportedSort(String),
    #[error("relation `{0}` is not I-compatible")]
    NotICompatible(String),
    #[error("missing relation `{0}`")]
    MissingRelation(String),
    #[error("search space too large: {size} exceeds guard {guard}")]
    SearchSpaceExceeded { size: u128, guard: u128 },
    #[error("unbound atom `{0}`")]
    UnboundAtom(String),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("modal connective not allowed here: {0}")]
    UnsupportedFormula(String),
    #[error("input order is not a lattice: {0}")]
    NotALattice(String),
    #[error("operator table is not normal: {0}")]
    NotNormal(String),
    #[error("not a Heyting algebra: {0}")]
    NotHeyting(String),
    #[error("invalid Kent context: {0}")]
    InvalidKent(String),
    #[error("invalid T-model: {0}")]
    InvalidTModel(String),
    #[error("invalid probability space: {0}")]
    InvalidSpace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
