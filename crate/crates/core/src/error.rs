use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant maps to a stable, machine-readable code via [`Error::code`];
/// the command-line front end prints these codes and documents them in its
/// help text, so they must never be renamed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    ZeroDegree,
    #[error("polynomial is reducible over the rationals")]
    Reducible,
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("coefficient vector has length {got}, ring degree is {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("|N(beta)| = {0} must exceed 1")]
    NormTooSmall(String),
    #[error("norm {0} is too large to enumerate a digit set")]
    NormTooLarge(String),
    #[error("digits {0} and {1} are congruent modulo beta")]
    NotRepresentative(usize, usize),
    #[error("digit set has {got} elements, |N(beta)| = {expected}")]
    DigitCount { expected: String, got: usize },
    #[error("the zero digit is required but missing from the digit set")]
    MissingZeroDigit,
    #[error("expansion does not terminate (cycle of length {})", cycle.len())]
    NotTerminating { cycle: Vec<Vec<String>> },
    #[error("state budget of {0} distinct states exceeded")]
    StateBudgetExceeded(usize),
    #[error("closure budget of {0} elements exceeded")]
    ClosureBudgetExceeded(usize),
    #[error("prime {q} is ramified in beta")]
    RamifiedPrime { q: u64 },
    #[error("prime above {q} has inertia degree {degree} > 1")]
    NotDegreeOne { q: u64, degree: usize },
    #[error("valuation reached precision cap {0}")]
    PrecisionExhausted(u32),
    #[error("argument outside the convergence domain: {0}")]
    OutOfDomain(String),
    #[error("p-adic operands differ in prime or precision")]
    PrecisionMismatch,
    #[error("alpha is not coprime to beta (shares the prime above {q})")]
    NotCoprime { q: u64 },
    #[error("alpha is a root of unity (alpha^{order} = 1)")]
    RootOfUnity { order: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable identifier used in machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotMonic => "E_NOT_MONIC",
            Error::ZeroDegree => "E_ZERO_DEGREE",
            Error::Reducible => "E_REDUCIBLE",
            Error::RingMismatch => "E_RING_MISMATCH",
            Error::WrongLength { .. } => "E_WRONG_LENGTH",
            Error::DivisionByZero => "E_DIVISION_BY_ZERO",
            Error::NormTooSmall(_) => "E_NORM_TOO_SMALL",
            Error::NormTooLarge(_) => "E_NORM_TOO_LARGE",
            Error::NotRepresentative(..) => "E_NOT_REPRESENTATIVE",
            Error::DigitCount { .. } => "E_DIGIT_COUNT",
            Error::MissingZeroDigit => "E_MISSING_ZERO_DIGIT",
            Error::NotTerminating { .. } => "E_NOT_TERMINATING",
            Error::StateBudgetExceeded(_) => "E_STATE_BUDGET",
            Error::ClosureBudgetExceeded(_) => "E_CLOSURE_BUDGET",
            Error::RamifiedPrime { .. } => "E_RAMIFIED_PRIME",
            Error::NotDegreeOne { .. } => "E_NOT_DEGREE_ONE",
            Error::PrecisionExhausted(_) => "E_PRECISION_EXHAUSTED",
            Error::OutOfDomain(_) => "E_OUT_OF_DOMAIN",
            Error::PrecisionMismatch => "E_PRECISION_MISMATCH",
            Error::NotCoprime { .. } => "E_NOT_COPRIME",
            Error::RootOfUnity { .. } => "E_ROOT_OF_UNITY",
            Error::HypothesisViolated(_) => "E_HYPOTHESIS_VIOLATED",
            Error::Parse(_) => "E_PARSE",
            Error::InvalidArgument(_) => "E_INVALID_ARGUMENT",
        }
    }

    /// Whether the error signals that the inputs fall outside the hypotheses
    /// of the counting theorem (as opposed to a malformed request or a bug).
    pub fn is_hypothesis_rejection(&self) -> bool {
        matches!(
            self,
            Error::RamifiedPrime { .. }
                | Error::NotDegreeOne { .. }
                | Error::NotCoprime { .. }
                | Error::RootOfUnity { .. }
        )
    }

    /// All codes with a one-line description, for help text.
    pub const CODES: &'static [(&'static str, &'static str)] = &[
        ("E_NOT_MONIC", "defining polynomial is not monic"),
        ("E_ZERO_DEGREE", "defining polynomial is constant"),
        ("E_REDUCIBLE", "defining polynomial is reducible"),
        ("E_RING_MISMATCH", "operands live in different rings"),
        ("E_WRONG_LENGTH", "coefficient vector length differs from ring degree"),
        ("E_DIVISION_BY_ZERO", "division by zero"),
        ("E_NORM_TOO_SMALL", "|N(beta)| <= 1"),
        ("E_NORM_TOO_LARGE", "|N(beta)| too large for a digit table"),
        ("E_NOT_REPRESENTATIVE", "digit set is not a residue system mod beta"),
        ("E_DIGIT_COUNT", "digit set size differs from |N(beta)|"),
        ("E_MISSING_ZERO_DIGIT", "operation needs 0 in the digit set"),
        ("E_NOT_TERMINATING", "radix expansion is infinite"),
        ("E_STATE_BUDGET", "expansion exceeded the state budget"),
        ("E_CLOSURE_BUDGET", "CNS closure exceeded its budget"),
        ("E_RAMIFIED_PRIME", "beta is divisible by a ramified prime"),
        ("E_NOT_DEGREE_ONE", "beta is divisible by a prime of inertia degree > 1"),
        ("E_PRECISION_EXHAUSTED", "p-adic valuation hit the precision cap"),
        ("E_OUT_OF_DOMAIN", "p-adic log/exp argument outside convergence domain"),
        ("E_PRECISION_MISMATCH", "p-adic operands have different prime or precision"),
        ("E_NOT_COPRIME", "alpha and beta share a prime"),
        ("E_ROOT_OF_UNITY", "alpha is a root of unity"),
        ("E_HYPOTHESIS_VIOLATED", "a proved inequality failed (implementation bug)"),
        ("E_PARSE", "malformed input"),
        ("E_INVALID_ARGUMENT", "invalid argument"),
    ];
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
