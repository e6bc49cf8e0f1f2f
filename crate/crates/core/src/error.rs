use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Unified error type for the toolkit.
///
/// Variants are grouped by layer: character algebra, parsing, group
/// theory, decision descriptors, and table/remote plumbing. Check
/// *failures* are not errors — verifiers return structured reports —
/// so every variant here means the inputs were unusable, not that an
/// identity turned out false.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("embedding assigns no value to generator `{0}`")]
    MissingAssignment(String),

    #[error("embedding value for `{gen}` violates its order {order}: |z^order - 1| = {residual:.3e}")]
    OrderViolation { gen: String, order: u32, residual: f64 },

    #[error("embedding value for `{0}` is zero (characters are valued in C*)")]
    ZeroValue(String),

    #[error("parse error in {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("parse error at line {line} in {what}: {detail}")]
    ParseAt { what: &'static str, line: usize, detail: String },

    #[error("local parameter must have degree >= 1")]
    EmptyParameter,

    #[error("operation requires degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("input shape violation: {0}")]
    ShapeViolation(String),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailed(String),

    #[error("not a character: {0}")]
    NonCharacter(String),

    #[error("bad group input: {0}")]
    GroupInput(String),

    #[error("no character table available for `{group}` and the induced-from-cyclic fallback failed: {detail}")]
    NoTable { group: String, detail: String },

    #[error("inconsistent descriptor: {0}")]
    Descriptor(String),

    #[error("coefficient field mismatch: {0}")]
    FieldMismatch(String),

    #[error("conductor inputs invalid: {0}")]
    Conductor(String),

    #[error("truncation bound {bound} exceeds the supported maximum {max}")]
    TruncationOverflow { bound: u64, max: u64 },

    #[error("table data invalid: {0}")]
    TableData(String),

    #[error("remote source unavailable: {0}")]
    Unavailable(String),

    #[error("network error: {0}")]
    Network(String),

    #[error("remote response violates the coefficient schema: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
