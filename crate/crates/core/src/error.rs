use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("characteristic {0} is even; only odd characteristic is supported")]
    EvenCharacteristic(u32),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field of size {p}^{deg} exceeds the size guard of {limit} elements")]
    FieldTooLarge { p: u32, deg: u32, limit: u64 },
    #[error("encoding {enc} is outside a field of size {size}")]
    ElementOutOfRange { enc: u32, size: u32 },
    #[error("zero has no multiplicative inverse")]
    DivisionByZero,
    #[error("s = {s} must be at least 2 and divide q + 1 = {}", q + 1)]
    InvalidCurveParameter { q: u32, s: u32 },
    #[error("point ({x}, {y}) is not on the curve")]
    PointNotOnCurve { x: u32, y: u32 },
    #[error("support point ({x}, {y}) appears more than once")]
    DuplicateSupportPoint { x: u32, y: u32 },
    #[error("degree m = {0} must be nonnegative here")]
    NegativeDegree(i64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("enumeration of {count} codewords exceeds the guard of {limit}")]
    EnumerationGuard { count: u128, limit: u64 },
    #[error("code carries no curve metadata, so no designed distance is available")]
    NoDesignedDistance,
    #[error("MacWilliams transform produced a non-integral or negative coefficient at weight {0}")]
    MacWilliams(usize),
    #[error("code is not Hermitian self-orthogonal ({nonzero} nonzero Gram entries)")]
    NotSelfOrthogonal { nonzero: usize },
    #[error("stabilizer rows fail symplectic commutation")]
    CommutationFailure,
    #[error("invalid weight enumerator: {0}")]
    InvalidEnumerator(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
