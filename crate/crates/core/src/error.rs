use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// A state, strategy or iterate function was given width zero.
    ZeroWidth,
    /// A cell index fell outside `1..=width`.
    CellOutOfRange { cell: usize, width: usize },
    /// Two objects that must share a width do not.
    WidthMismatch { left: usize, right: usize },
    /// The strategy ran out of terms; `step` is the number of steps completed.
    ExhaustedStrategy { step: usize },
    /// A radius or epsilon that must be strictly positive (and finite) was not.
    InvalidRadius(f64),
    /// A witness construction needs more strategy terms than the point carries.
    InsufficientPrefix { needed: usize, available: usize },
    /// The requested precision cannot be resolved by the metric horizon.
    HorizonExceeded { needed: usize, horizon: usize },
    /// A sensitivity witness needs at least two cells to pick a different one.
    NoDistinctCell,
    /// A byte at or above 128 was found where 7-bit ASCII is required.
    NonAscii { position: usize, byte: u8 },
    /// A bit string length violated a pipeline stage's requirement.
    BadLength { stage: &'static str, len: usize },
    /// A count parameter that must be at least one was zero.
    ZeroCount(&'static str),
    /// A textual literal could not be parsed.
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroWidth => f.write_str("width must be at least 1"),
            Error::CellOutOfRange { cell, width } => {
                write!(f, "cell index {cell} outside 1..={width}")
            }
            Error::WidthMismatch { left, right } => {
                write!(f, "width mismatch: {left} vs {right}")
            }
            Error::ExhaustedStrategy { step } => {
                write!(f, "strategy exhausted after {step} steps")
            }
            Error::InvalidRadius(r) => write!(f, "radius must be positive and finite, got {r}"),
            Error::InsufficientPrefix { needed, available } => write!(
                f,
                "strategy has {available} terms but the construction needs {needed}"
            ),
            Error::HorizonExceeded { needed, horizon } => write!(
                f,
                "precision needs {needed} strategy terms but the metric horizon is {horizon}"
            ),
            Error::NoDistinctCell => {
                f.write_str("no distinct cell available: width must be at least 2")
            }
            Error::NonAscii { position, byte } => write!(
                f,
                "non-ASCII byte 0x{byte:02X} at position {position} (paper-text mode needs 7-bit input)"
            ),
            Error::BadLength { stage, len } => write!(f, "{stage}: invalid bit length {len}"),
            Error::ZeroCount(what) => write!(f, "{what} must be at least 1"),
            Error::Parse(what) => write!(f, "malformed {what}"),
        }
    }
}

impl core::error::Error for Error {}
