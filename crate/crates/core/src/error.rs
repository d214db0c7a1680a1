use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("surface mismatch: F{0} vs F{1}")]
    SurfaceMismatch(i64, i64),

    #[error("splitting type must have at least one part")]
    EmptySplittingType,

    #[error("{what} = {value} is outside the supported range (|x| <= {limit})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        limit: i64,
    },

    #[error("cannot parse splitting type {input:?}: {reason}")]
    ParseSplittingType { input: String, reason: String },

    #[error("Hirzebruch index e must be at least {min}, got {got}")]
    IndexTooSmall { min: i64, got: i64 },

    #[error("inadmissible configuration: {} violated", .0.join(", "))]
    Inadmissible(Vec<&'static str>),

    #[error("outside non-special regime")]
    OutsideNonSpecialRegime,

    #[error("non-generic endomorphism count not defined by source")]
    NonGenericUndefined,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
