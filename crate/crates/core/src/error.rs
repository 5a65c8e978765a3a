use thiserror::Error;

/// Every failure mode the library can report. Variants map onto the CLI
/// exit codes: input/shape problems exit 2, violated mathematical
/// preconditions exit 3, resource caps exit 4.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: expected {expected}, found {found}")]
    Parse {
        offset: usize,
        expected: String,
        found: String,
    },
    #[error("unknown variable '{var}' at byte {offset}")]
    UnknownVariable { var: char, offset: usize },
    #[error("ideal entry {index} is not a single monomial")]
    NonMonomialTerm { index: usize },
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("cannot homogenize a polynomial of degree {required} to degree {degree}")]
    DegreeTooSmall { degree: u64, required: u64 },
    #[error("generators have different degrees ({left} vs {right})")]
    DegreeMismatch { left: u64, right: u64 },
    #[error("pencil degree must be at least 1")]
    DegreeZero,
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("ideal does not have finite colength (missing a pure power of x or of y)")]
    InfiniteColength,
    #[error("the unit ideal has no base point to blow up")]
    UnitIdeal,
    #[error("blow-up nesting exceeded the depth cap {cap}")]
    DepthExceeded { cap: u32 },
    #[error("non-rational base point: the eliminant {eliminant} has no rational root; change coordinates and retry")]
    NonRationalBasePoint { eliminant: String },
    #[error("the two generators share a fixed component")]
    FixedComponent,
    #[error("the two generators are proportional and do not span a pencil")]
    ProportionalGenerators,
    #[error("resolved multiplicities violate the self-intersection check: sum of squares {got}, expected {expected}")]
    InconsistentBezout { expected: u64, got: u64 },
    #[error("K3 genus must be at least 3, got {d}")]
    InvalidGenus { d: u64 },
    #[error("computed {what} exceeds the 64-bit output range")]
    Overflow { what: String },
}

impl Error {
    /// CLI exit code for this error. 2 = malformed input, 3 = mathematical
    /// precondition violated, 4 = cap exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::UnknownVariable { .. }
            | Error::NonMonomialTerm { .. }
            | Error::DimensionMismatch { .. }
            | Error::NotHomogeneous
            | Error::DegreeTooSmall { .. }
            | Error::DegreeMismatch { .. }
            | Error::DegreeZero
            | Error::EmptyGenerators
            | Error::ZeroPolynomial
            | Error::BothZero
            | Error::Overflow { .. } => 2,
            Error::InfiniteColength
            | Error::UnitIdeal
            | Error::NonRationalBasePoint { .. }
            | Error::FixedComponent
            | Error::ProportionalGenerators
            | Error::InconsistentBezout { .. }
            | Error::InvalidGenus { .. } => 3,
            Error::DepthExceeded { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
