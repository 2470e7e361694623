use thiserror::Error;

/// Errors raised by code constructions and verifiers.
///
/// Every precondition named by an operation maps to its own variant so
/// callers (and the CLI) can surface the exact violation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial must have nonzero constant term")]
    ZeroConstantTerm,
    #[error("could not parse polynomial literal {literal:?}: {reason}")]
    PolyParse { literal: String, reason: String },
    #[error("code length must be odd, got {0}")]
    EvenLength(usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{g} does not divide x^{n}+1")]
    NotADivisor { n: usize, g: String },
    #[error("burst width {b} out of range for length {n}")]
    BurstWidthOutOfRange { n: usize, b: usize },
    #[error("cyclotomic cosets require odd modulus, got {0}")]
    EvenModulus(usize),
    #[error("{0:?} is not a cyclotomic coset (not closed under doubling)")]
    NotACoset(Vec<usize>),
    #[error("field/length mismatch: expected n = 2^{m} - 1 = {expected}, got {got}")]
    FieldLengthMismatch { m: usize, expected: usize, got: usize },
    #[error("{0} is not irreducible")]
    NotIrreducible(String),
    #[error("{0} is not primitive")]
    NotPrimitive(String),
    #[error("polynomials {0} and {1} share a common factor")]
    NotCoprime(String, String),
    #[error("degree of {p} is {deg}, need at least {min}")]
    DegreeTooSmall { p: String, deg: usize, min: usize },
    #[error("code {which} lacks the required correcting ability")]
    AbilityCheckFailed { which: String },
    #[error("nesting violated: dual of the second code is not contained in the first")]
    NestingViolated,
    #[error("construction precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("representative scan exhausted after {found} of {target} requested")]
    GreedyExhausted { found: usize, target: usize },
    #[error("problem too large for the dense verifier: {0}")]
    DenseScale(String),
    #[error("stabilizer rows are not totally singular: rows {0} and {1}")]
    NotTotallySingular(usize, usize),
    #[error("no primitive polynomial of degree {m} verified the construction")]
    SearchExhausted { m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
