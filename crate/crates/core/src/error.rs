use thiserror::Error;

/// Errors raised by the arithmetic, completion and evaluation routines.
///
/// Variants other than [`Error::Internal`] and [`Error::InvalidInput`] are
/// mathematical precondition failures: the request is well-formed but the
/// object it asks for is not defined at the given precision or modulus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leading coefficient {0} of the divisor is not a unit")]
    NonUnitLeadingCoefficient(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("both operands are zero")]
    BothZero,
    #[error("both operands are constants; no polynomial certificate exists")]
    BothConstant,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the index set is empty")]
    EmptySet,
    #[error("indices must differ (got {0} twice)")]
    EqualIndices(u64),
    #[error("operands live on different filtration chains ({0} vs {1})")]
    ChainMismatch(String, String),
    #[error("digit {index} has degree {degree}, bound is < {bound}")]
    DigitDegreeViolation { index: usize, degree: usize, bound: usize },
    #[error("target modulus does not divide the source modulus")]
    NotCoarser,
    #[error("series {name} does not converge at level {level} within {bound} terms")]
    NonConvergent { name: String, level: usize, bound: usize },
    #[error("alternating units need odd m >= 3 (got {0})")]
    EvenM(u64),
    #[error("cyclotomic integers of different orders ({0} vs {1})")]
    OrderMismatch(u64, u64),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("component at n = {n} has degree {degree}, bound is < {bound}")]
    DegreeViolation { n: u64, degree: usize, bound: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonUnitLeadingCoefficient(_) => "NonUnitLeadingCoefficient",
            Error::DivisionByZeroPolynomial => "DivisionByZeroPolynomial",
            Error::BothZero => "BothZero",
            Error::BothConstant => "BothConstant",
            Error::NotPrime(_) => "NotPrime",
            Error::EmptySet => "EmptySet",
            Error::EqualIndices(_) => "EqualIndices",
            Error::ChainMismatch(..) => "ChainMismatch",
            Error::DigitDegreeViolation { .. } => "DigitDegreeViolation",
            Error::NotCoarser => "NotCoarser",
            Error::NonConvergent { .. } => "NonConvergent",
            Error::EvenM(_) => "EvenM",
            Error::OrderMismatch(..) => "OrderMismatch",
            Error::InsufficientPrecision(_) => "InsufficientPrecision",
            Error::DegreeViolation { .. } => "DegreeViolation",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Internal(_) => "Internal",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
