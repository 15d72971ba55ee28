use thiserror::Error;

/// Errors produced by front, ruling, cable and skein operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid front at column {column}: {reason}")]
    InvalidFront { column: usize, reason: String },

    #[error("empty diagram")]
    EmptyDiagram,

    #[error("operation requires a single-component front, found {components} components")]
    MultiComponent { components: usize },

    #[error("column {column} is not a crossing")]
    NotACrossing { column: usize },

    #[error("switch set is not a ruling of this front: {0}")]
    NotARuling(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("bad stabilization location: column {column}, level {level}")]
    BadLocation { column: usize, level: usize },

    #[error("cable parameters out of range: q = {q} < {min_q} = t*p + p (formula range violated; it fails for q <= t*p + p - 1)")]
    CableRange { q: i64, min_q: i64 },

    #[error("cable C_({p},{q}) is a {components}-component link (gcd {gcd}); pass allow_link to construct it")]
    CableNotKnot {
        p: i64,
        q: i64,
        gcd: i64,
        components: usize,
    },

    #[error("cable parameter p must be at least 2, got {p}")]
    CableBadP { p: i64 },

    #[error("twist box parameter r must be nonnegative, got {r}")]
    NegativeTwist { r: i64 },

    #[error("diagram has {crossings} crossings, exceeding the cap of {cap}")]
    CrossingCapExceeded { crossings: usize, cap: usize },

    #[error("surgery coefficient must have the form 1/n: {0}")]
    BadSurgeryCoefficient(String),

    #[error("{0}")]
    Domain(String),

    #[error("internal postcondition failed: {0}")]
    Postcondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
