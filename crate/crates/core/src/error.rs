use thiserror::Error;

/// Coarse classification used by front-ends to pick an exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input or API misuse (parse errors, ambient mismatch, shapes).
    Usage,
    /// The inputs are well formed but a mathematical hypothesis fails.
    Hypothesis,
    /// A configured search or stabilization cap was reached.
    ResourceCap,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different ambient rings")]
    AmbientMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("ideal quotient by the zero polynomial")]
    QuotientByZero,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("ideal is not primary to the maximal ideal at the origin")]
    NotMPrimary,
    #[error(
        "Hilbert-Samuel function did not stabilize for n <= {cap}; lengths so far: {lengths:?}"
    )]
    NoStabilization { cap: usize, lengths: Vec<u64> },
    #[error("the candidate reduction is not contained in the ideal")]
    NotContained,
    #[error("reduction property I^(k+1) = Q I^k not verified for k <= {cap}")]
    ReductionNotVerified { cap: usize },
    #[error("parameter ideal must have {expected} generators, found {found}")]
    WrongGeneratorCount { expected: usize, found: usize },
    #[error("Cohen-Macaulay hypothesis was not asserted")]
    CohenMacaulayNotAsserted,
    #[error("free-module rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
}

impl GroebnerError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            GroebnerError::Poly(_) | GroebnerError::RankMismatch { .. } => ErrorKind::Usage,
            GroebnerError::QuotientByZero
            | GroebnerError::UnitIdeal
            | GroebnerError::NotMPrimary
            | GroebnerError::NotContained
            | GroebnerError::WrongGeneratorCount { .. }
            | GroebnerError::CohenMacaulayNotAsserted => ErrorKind::Hypothesis,
            GroebnerError::NoStabilization { .. } | GroebnerError::ReductionNotVerified { .. } => {
                ErrorKind::ResourceCap
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("presentation has no relations")]
    NoRelations,
    #[error("the quotient is the zero ring")]
    ZeroRing,
    #[error("`{0}` is a unit in the local ring")]
    Unit(String),
    #[error("cannot determine the height of the relation ideal: {0}")]
    Height(String),
}

impl RingError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            RingError::Poly(_) => ErrorKind::Usage,
            RingError::Groebner(e) => e.kind(),
            _ => ErrorKind::Hypothesis,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MfError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("not a matrix factorization: {0}")]
    Invalid(String),
    #[error("factorizations have different potentials")]
    PotentialMismatch,
    #[error("`{0}` does not stably annihilate the factorization")]
    NotAnnihilating(String),
    #[error("certificate failed independent verification: {0}")]
    Certificate(String),
    #[error("malformed factorization document: {0}")]
    Format(String),
}

impl MfError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            MfError::Groebner(e) => e.kind(),
            MfError::NotAnnihilating(_) | MfError::Certificate(_) => ErrorKind::Hypothesis,
            _ => ErrorKind::Usage,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("exponent lists have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("all product exponents are zero")]
    AllZeroExponents,
    #[error("exponent m_{0} must be positive")]
    NonPositiveExponent(usize),
    #[error("dimension of a quotient singularity category is unknown")]
    UnknownDimension,
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("value is infinite")]
    Infinite,
    #[error("power not found below the search cap {0}")]
    NotFound(u32),
    #[error("integer overflow while evaluating a bound")]
    Overflow,
    #[error("no applicable bound: {0}")]
    NoApplicableBound(String),
}

impl BoundsError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            BoundsError::Ring(e) => e.kind(),
            BoundsError::LengthMismatch(..) | BoundsError::AllZeroExponents => ErrorKind::Usage,
            BoundsError::NonPositiveExponent(_) => ErrorKind::Usage,
            BoundsError::NotFound(_) | BoundsError::Overflow => ErrorKind::ResourceCap,
            _ => ErrorKind::Hypothesis,
        }
    }
}
