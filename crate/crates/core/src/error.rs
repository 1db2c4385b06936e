use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// The chosen specialization point makes a denominator vanish; retry
    /// with another one.
    UnluckySpecialization,
    Parse { pos: usize, msg: String },
    /// Composition or tensoring of incompatible boundaries.
    BoundaryMismatch { layer: Option<usize>, expected: String, found: String },
    NotClosed,
    InvalidArgument(String),
    NotLocalDumbbell(String),
    /// The rewrite evaluator ran out of steps.
    Budget,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::UnluckySpecialization => {
                write!(f, "unlucky specialization: a denominator vanishes at this point, retry with another u0")
            }
            Error::Parse { pos, msg } => write!(f, "parse error at offset {}: {}", pos, msg),
            Error::BoundaryMismatch { layer: Some(l), expected, found } => {
                write!(f, "boundary mismatch at layer {}: expected {}, found {}", l, expected, found)
            }
            Error::BoundaryMismatch { layer: None, expected, found } => {
                write!(f, "boundary mismatch: expected {}, found {}", expected, found)
            }
            Error::NotClosed => write!(f, "web is not closed"),
            Error::InvalidArgument(m) => write!(f, "invalid argument: {}", m),
            Error::NotLocalDumbbell(m) => write!(f, "not a local dumbbell: {}", m),
            Error::Budget => write!(f, "no normal form within budget"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
