use alloc::string::String;

/// Everything that can go wrong in the core library.
///
/// Construction errors (`NonMonotone`, `Cycle`, `NotMonotone`, ...) are user
/// errors. `NegativeEntry` and `NotMonotone` coming out of the bijections
/// signal a broken contract upstream and should never fire on genuine input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("partition parts increase at position {index}")]
    NonMonotone { index: usize },
    #[error("partition part {value} at position {index} is negative")]
    Negative { index: usize, value: i64 },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid tableau: {0}")]
    InvalidTableau(&'static str),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("order relations contain a cycle")]
    Cycle,
    #[error("order is not a linear extension of the poset")]
    NotAnExtension,
    #[error("poset is not the Young poset of the requested shape")]
    ShapeMismatch,
    #[error("objects live on different posets")]
    PosetMismatch,
    #[error("value list has {got} entries, poset has {expected} elements")]
    MissingValue { expected: usize, got: usize },
    #[error("values decrease along the relation {lower} < {upper}")]
    NotMonotone { lower: usize, upper: usize },
    #[error("subtraction leaves a negative entry at element {0}")]
    NegativeEntry(usize),
    #[error("partition has {parts} parts, at most {max} allowed")]
    TooManyParts { parts: usize, max: usize },
    #[error("monomials of degree {0} and {1} cannot be multiplied")]
    DegreeMismatch(usize, usize),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
