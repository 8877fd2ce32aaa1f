use num_complex::Complex64;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("missing assignment for parameter `{0}`")]
    MissingAssignment(String),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("`{0}` is not a tail of the variable order")]
    NotAnOrderTail(String),
    #[error("saturation by zero")]
    SaturationByZero,
    #[error("nonsquare family: {polynomials} polynomials for {variables} unknowns")]
    NonSquareFamily { polynomials: usize, variables: usize },
    #[error("positive-dimensional ideal")]
    PositiveDimensional,
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no generic parameter point found after {0} attempts")]
    GenericSamplingFailed(u32),
    #[error("root finding did not converge ({} roots below tolerance)", partial.len())]
    RootsDidNotConverge { partial: Vec<Complex64> },
    #[error("non-finite value in numeric result")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
