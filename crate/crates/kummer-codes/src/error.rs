use thiserror::Error;

/// Everything that can go wrong when validating parameters or assembling a design.
///
/// Computation itself is exact integer arithmetic and does not fail; errors only
/// arise from inputs that violate a documented precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KummerError {
    #[error("gcd(m,r) must be 1 (got m={m}, r={r})")]
    NonCoprime { m: i64, r: i64 },

    #[error("parameter {name}={value} is below the minimum {min}")]
    ParameterTooSmall {
        name: &'static str,
        value: i64,
        min: i64,
    },

    #[error("q={q} is not a prime power")]
    NotPrimePower { q: i64 },

    #[error("the characteristic of F_{q} divides m={m}")]
    CharDividesM { m: i64, q: i64 },

    #[error("finite place index {index} is out of range 1..={max}")]
    PlaceOutOfRange { index: i64, max: i64 },

    #[error("m={m} is not of the form u*r+1 for r={r}")]
    NotUrPlusOne { m: i64, r: i64 },

    #[error("{s} places requested but at most {max} are supported here")]
    TooManyPlaces { s: usize, max: usize },

    #[error("s={s} is out of range 1..={max}")]
    SOutOfRange { s: i64, max: i64 },

    #[error("tuple entry {value} is below the minimum {min}")]
    EntryOutOfRange { value: i64, min: i64 },

    #[error("expected {expected} entries, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("duplicate place in signature")]
    DuplicatePlace,

    #[error("place list must not be empty")]
    EmptyPlaces,

    #[error("the infinite place must be listed first")]
    InftyNotFirst,

    #[error(
        "invalid box: low and high must have equal positive length with 1 <= low[i] <= high[i]"
    )]
    InvalidBox,

    #[error("box contains a non-pure tuple, witness {witness:?}")]
    BoxNotPure { witness: Vec<i64> },

    #[error("degree window violated: deg G = {deg_g} is outside ({lower}, {upper})")]
    DegreeOutOfRange { deg_g: i64, lower: i64, upper: i64 },

    #[error("arithmetic overflow in exact computation")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, KummerError>;
