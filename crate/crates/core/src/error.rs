use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("too many variables: {0} (at most {max})", max = crate::MAX_VARS)]
    TooManyVariables(usize),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("monomial is not divisible")]
    NotDivisible,
    #[error("input polynomial {0} is zero")]
    ZeroGenerator(usize),
    #[error("empty input system")]
    EmptySystem,
    #[error("module order not supported here: {0}")]
    UnsupportedOrder(String),
    #[error("the appendix module order does not terminate; an iteration cap is required")]
    CapRequired,
    #[error("input contract violated: {0}")]
    ContractViolation(String),
    #[error("certificate missing")]
    CertificateMissing,
    #[error("certificate check failed for signature {0}")]
    CertificateMismatch(String),
    #[error("input is not a Gröbner basis")]
    NotAGroebnerBasis,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
