use thiserror::Error;

/// Errors raised by the algebra engine and the command layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square class of zero is undefined")]
    ZeroInput,
    #[error("square-free part needs a prime factor above the trial-division bound {bound}")]
    FactorizationBoundExceeded { bound: u64 },
    #[error("invalid ground field: {0}")]
    InvalidField(String),
    #[error("cannot parse field element {0:?}")]
    ParseElement(String),
    #[error("operands live in different algebras")]
    AlgebraMismatch,
    #[error("cubic polynomial is not separable (discriminant zero)")]
    NotEtale,
    #[error("operation requires a commutative algebra")]
    NotCommutative,
    #[error("operands belong to different Jordan models")]
    ModelMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("trial count must be at least 1")]
    InvalidTrials,
    #[error("Tits parameter lambda must be nonzero")]
    ZeroLambda,
    #[error("linear map is singular")]
    SingularMap,
    #[error("trace form restricted to the subalgebra is degenerate")]
    DegenerateTrace,
    #[error("vector does not lie in the orthogonal complement")]
    NotInComplement,
    #[error("randomized search exhausted after {trials} trials")]
    SearchExhausted { trials: usize },
    #[error("vector is not isotropic for the Springer form")]
    NotIsotropic,
    #[error("could not build a free basis of the complement over the subalgebra")]
    BasisConstructionFailed,
    #[error("model is not a split 27-dimensional first Tits construction")]
    NotSplitModel,
    #[error("unsupported subalgebra: {0}")]
    UnsupportedSubalgebra(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("operation requires a prime ground field")]
    RequiresPrimeField,
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
