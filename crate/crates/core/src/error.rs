use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("variable index {index} out of range for dimension {dimension}")]
    VariableOutOfRange { index: usize, dimension: usize },
    #[error("operation needs an exact polynomial, got a truncated series")]
    NotExact,
    #[error("substitution map has a constant term; pass allow_shift to permit it")]
    ConstantTermInMap,
    #[error("the zero {0} is not allowed here")]
    ZeroInput(&'static str),
    #[error("the field does not vanish at the origin")]
    NonSingularAtOrigin,
    #[error("the function does not vanish at the origin")]
    NonVanishingAtOrigin,
    #[error("truncation degree must be at least 1")]
    DegreeTooSmall,
    #[error("wedge of {fields} fields in dimension {dimension}")]
    TooManyFields { fields: usize, dimension: usize },
    #[error("empty basis")]
    EmptyBasis,
    #[error("weights must be positive with gcd 1, got {0:?}")]
    InvalidWeight(Vec<u32>),
    #[error("the pair is not generically linearly independent (wedge vanishes identically)")]
    DependentPair,
    #[error("claimed factorization does not reproduce the denominator: {0}")]
    FactorizationMismatch(String),
    #[error("invalid table request: {0}")]
    InvalidTableRow(String),
    #[error("the singularity at the origin is not isolated")]
    NonIsolatedSingularity,
    #[error("root search budget exceeded for {0}")]
    RootBudgetExceeded(String),
    #[error("term count {count} exceeds the cap of {cap}")]
    TermCapExceeded { count: usize, cap: usize },
    #[error("{0}")]
    Parse(#[from] crate::text::ParseError),
}
