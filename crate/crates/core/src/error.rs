use thiserror::Error;

/// Errors raised by the library. The CLI maps [`Error::Parse`] and
/// [`Error::Usage`] to exit code 2 and everything else to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("division by zero")]
    DivideByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("field too large for enumeration: {size} elements exceeds budget {budget}")]
    FieldTooLarge { size: u128, budget: u64 },
    #[error("degenerate map: {0}")]
    DegenerateMap(String),
    #[error("map degree {0} is below 2")]
    DegreeTooLow(usize),
    #[error("map is inseparable (Wronskian vanishes identically)")]
    InseparableMap,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("point is not periodic with period {0}")]
    NotPeriodic(usize),
    #[error("place does not match the field: {0}")]
    PlaceMismatch(String),
    #[error("singular curve (discriminant vanishes)")]
    SingularCurve,
    #[error("unsupported multiplier m = {0}")]
    UnsupportedM(i64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("bad specialization: {0}")]
    BadSpecialization(String),
    #[error("polynomial is inseparable or has repeated roots")]
    InseparablePolynomial,
    #[error("valuation not forced by the ultrametric inequality at step {0}")]
    IndeterminateStep(usize),
    #[error("reduction is constant; tameness of this model is undefined")]
    DegenerateReduction,
    #[error("parse error at {line}:{col}: expected {expected}")]
    Parse {
        line: usize,
        col: usize,
        expected: String,
    },
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Variant name, as used in CLI reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ReducibleModulus(_) => "ReducibleModulus",
            Error::DivideByZero => "DivideByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::InexactDivision(_) => "InexactDivision",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::DegenerateMap(_) => "DegenerateMap",
            Error::DegreeTooLow(_) => "DegreeTooLow",
            Error::InseparableMap => "InseparableMap",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NotPeriodic(_) => "NotPeriodic",
            Error::PlaceMismatch(_) => "PlaceMismatch",
            Error::SingularCurve => "SingularCurve",
            Error::UnsupportedM(_) => "UnsupportedM",
            Error::Unsupported(_) => "Unsupported",
            Error::BadSpecialization(_) => "BadSpecialization",
            Error::InseparablePolynomial => "InseparablePolynomial",
            Error::IndeterminateStep(_) => "IndeterminateStep",
            Error::DegenerateReduction => "DegenerateReduction",
            Error::Parse { .. } => "ParseError",
            Error::Usage(_) => "Usage",
        }
    }

    /// Process exit code for this error: 2 for input problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Usage(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn parse(col: usize, expected: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            col,
            expected: expected.into(),
        }
    }
}
