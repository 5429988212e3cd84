use num_bigint::BigInt;
use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorization of {value} incomplete: cofactor {cofactor} has no prime factor below {bound}")]
    FactorizationIncomplete {
        value: BigInt,
        cofactor: BigInt,
        bound: u64,
    },
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("polynomial is reducible over Q")]
    Reducible,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("expected a monic polynomial of degree {expected}, got degree {found:?}")]
    WrongDegree { expected: usize, found: Option<usize> },
    #[error("Tschirnhaus element is not primitive")]
    NotPrimitive,
    #[error("root certification failed at {digits} digits")]
    PrecisionExhausted { digits: u32 },
    #[error("closed Witt formula stayed degenerate after {attempts} perturbations")]
    DegenerateUnresolvable { attempts: usize },
    #[error("quartic field is not principal")]
    NotPrincipal,
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("Galois closure is not octahedral")]
    NotOctahedral,
    #[error("discriminant is -3 modulo squares (cyclotomic case)")]
    CyclotomicExcluded,
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("excluded parameter s = {0}")]
    ExcludedParameter(String),
    #[error("invalid type parameter: (-1, {0}) is not trivial")]
    InvalidTypeParameter(String),
    #[error("place {0} is not a prime")]
    NotPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
