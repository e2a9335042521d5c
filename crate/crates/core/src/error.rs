use thiserror::Error;

/// Failures raised at the boundary of the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0}: argument must be nonzero")]
    ZeroArgument(&'static str),
    #[error("{0}: argument must not be a unit")]
    UnitArgument(&'static str),
    #[error("gcd of zero and zero is undefined")]
    GcdOfZeros,
    #[error("gcd test requires a nonempty set")]
    EmptySet,
    #[error("common divisors of a set of zeros cannot be enumerated in {0}")]
    UnboundedDivisors(String),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("residue {value} is out of range for modulus {modulus}")]
    ResidueOutOfRange { value: u64, modulus: u64 },
    #[error("mixed moduli {left} and {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("member set is not an ideal of Z/{0}Z")]
    NotAnIdeal(u64),
    #[error("the ideal is the whole ring")]
    WholeRing,
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
