use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A pasting precondition failed. `index` is the offending child (1-based)
    /// or boundary position (0-based), as described in `reason`.
    #[error("boundary mismatch at index {index}: {reason}")]
    BoundaryMismatch { index: usize, reason: String },

    #[error("unknown cell: {0}")]
    UnknownCell(String),

    #[error("vertical 1-cells do not compose: {0}")]
    NotComposable(String),

    #[error("budget exceeded: frame {frame} has more than {limit} cells")]
    BudgetExceeded { frame: String, limit: usize },

    #[error("malformed frame: {0}")]
    FrameError(String),

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("malformed universe: {0}")]
    MalformedUniverse(String),

    #[error("malformed presentation: {0}")]
    MalformedPresentation(String),

    #[error("arity {arity} exceeds the tabulated bound {bound}")]
    ArityBoundExceeded { arity: usize, bound: usize },

    #[error("span {span}: {leg} leg is not injective")]
    NotMonic { span: String, leg: String },

    #[error("composite left the structure: {0}")]
    ClosureViolation(String),

    #[error("not a category: {0}")]
    NotACategory(String),

    #[error("not a monad: {0}")]
    NotAMonad(String),

    #[error("not a functor: {0}")]
    NotAFunctor(String),

    #[error("not a profunctor: {0}")]
    NotAProfunctor(String),

    #[error("not a subset: {0}")]
    NotASubset(String),

    #[error("malformed data: {0}")]
    MalformedData(String),

    #[error("source enriched category is invalid: {0}")]
    SourceInvalid(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown demo {0}")]
    UnknownDemo(String),

    #[error("kind {0} is not supported by this command")]
    UnsupportedKind(String),
}

impl Error {
    pub(crate) fn boundary(index: usize, reason: impl Into<String>) -> Self {
        Error::BoundaryMismatch {
            index,
            reason: reason.into(),
        }
    }
}
