use thiserror::Error;

/// Errors raised by the algebraic constructions and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("size exceeds the 64-bit word bound: {0}")]
    SizeExceeded(String),
    #[error("gcd({n}, {modulus}) != 1")]
    NotCoprime { n: u64, modulus: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("product over the extension has a coefficient outside the base field")]
    CoefficientNotInBase,
    #[error("polynomial has zero (or non-unit) constant term")]
    ZeroConstantTerm,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not in the principal unit group 1 + gamma R")]
    NotInSylow,
    #[error("element is not a unit: {0}")]
    NotUnit(String),
    #[error("bad factorization: {0}")]
    BadFactorization(String),
    #[error("exponent {k} at representative {rep} is outside [0, {t}]")]
    ExponentOutOfRange { rep: u64, k: u32, t: u32 },
    #[error("exponent vector has {got} entries, expected {expected}")]
    BadIndexSet { expected: usize, got: usize },
    #[error("codes live in different ambient spaces")]
    MismatchedAmbient,
    #[error("nilpotency index {0} is odd")]
    OddNilpotency(u32),
    #[error("q = {0} is even")]
    EvenQ(u64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("equivalent conditions disagree: {0}")]
    ConditionMismatch(String),
    #[error("oracle bound exceeded: {size} > {bound}")]
    BoundExceeded { size: u128, bound: u64 },
    #[error("internal identity failed: {0}")]
    IdentityFailed(String),
}

impl Error {
    /// Short machine-readable name, used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPrime(_) => "non_prime",
            Error::SizeExceeded(_) => "size_exceeded",
            Error::NotCoprime { .. } => "not_coprime",
            Error::NotPrimePower(_) => "not_prime_power",
            Error::CoefficientNotInBase => "coefficient_not_in_base",
            Error::ZeroConstantTerm => "zero_constant_term",
            Error::Parse(_) => "parse_error",
            Error::NotInSylow => "not_in_sylow",
            Error::NotUnit(_) => "not_unit",
            Error::BadFactorization(_) => "bad_factorization",
            Error::ExponentOutOfRange { .. } => "exponent_out_of_range",
            Error::BadIndexSet { .. } => "bad_index_set",
            Error::MismatchedAmbient => "mismatched_ambient",
            Error::OddNilpotency(_) => "odd_nilpotency",
            Error::EvenQ(_) => "even_q",
            Error::HypothesisViolated(_) => "hypothesis_violated",
            Error::ConditionMismatch(_) => "condition_mismatch",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::IdentityFailed(_) => "identity_failed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
