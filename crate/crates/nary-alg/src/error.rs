use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix shape {0}x{1} does not match {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("product tuple {tuple:?}: {reason}")]
    BadProduct { tuple: Vec<usize>, reason: String },
    #[error("grading violated on tuple {tuple:?}, output {coord}: degree sum {expected:?} but basis degree {found:?}")]
    GradingViolation {
        tuple: Vec<usize>,
        coord: usize,
        expected: Vec<i64>,
        found: Vec<i64>,
    },
    #[error("bicharacter axiom failed on generator pair ({0}, {1}): {2}")]
    BicharacterAxiom(usize, usize, String),
    #[error("inconsistent closure: tuple {tuple:?} receives conflicting values")]
    InconsistentClosure { tuple: Vec<usize> },
    #[error("degree tuple has {0} coordinates, group has {1} factors")]
    DegreeArity(usize, usize),
    #[error("algebra is neither commutative nor anticommutative")]
    NotSymmetricAlgebra,
    #[error("operation requires a trivially graded algebra")]
    NotTriviallyGraded,
    #[error("operation requires characteristic 0 (found {0})")]
    NeedsCharZero(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("operator class mismatch: expected {expected}, got {found}")]
    ClassMismatch { expected: String, found: String },
    #[error("space is not closed under the requested product")]
    NotClosed,
    #[error("scalar parse error: {0:?}")]
    ScalarParse(String),
    #[error("{0}")]
    Invalid(String),
}
