use alloc::string::String;
use core::fmt;

/// Errors raised by ingestion, transform construction, inversion, and the
/// brute-force guards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A line or FASTA record produced an empty sequence (`line` is 1-based,
    /// 0 when the sequence was built directly).
    EmptySequence { line: usize },
    /// Input data contains a byte reserved for the internal sentinels.
    ReservedByte { line: usize, byte: u8 },
    /// The input stream held no sequences at all.
    EmptyCollection,
    /// FASTA input with sequence data before the first header.
    MalformedFasta { line: usize },
    /// The operation requires a primitive string.
    NotPrimitive,
    /// Strict extended-transform construction rejects proper powers
    /// (`index` is the 1-based position of the offending string).
    NonPrimitiveInput { index: usize },
    /// The recovery index tuple is missing, out of range, or its indices do
    /// not hit distinct cycles.
    InvalidIndexTuple(String),
    /// A multidollar transform was handed over without its dollar ranks.
    MissingDollarRanks,
    /// The transform text fails the structural checks of its variant.
    MalformedTransform(String),
    /// The requested operation is only defined for separator-based variants.
    VariantNotSeparatorBased,
    /// An exhaustive enumeration was requested for more strings than the guard allows.
    GuardExceeded { m: usize, guard: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySequence { line } => write!(f, "empty sequence (line {line})"),
            Error::ReservedByte { line, byte } => {
                write!(f, "reserved sentinel byte 0x{byte:02x} in input (line {line})")
            }
            Error::EmptyCollection => write!(f, "collection holds no sequences"),
            Error::MalformedFasta { line } => {
                write!(f, "sequence data before first FASTA header (line {line})")
            }
            Error::NotPrimitive => write!(f, "string is not primitive"),
            Error::NonPrimitiveInput { index } => {
                write!(f, "string {index} is a proper power; strict mode requires primitive strings")
            }
            Error::InvalidIndexTuple(msg) => write!(f, "invalid index tuple: {msg}"),
            Error::MissingDollarRanks => write!(f, "transform carries no dollar ranks"),
            Error::MalformedTransform(msg) => write!(f, "malformed transform: {msg}"),
            Error::VariantNotSeparatorBased => {
                write!(f, "operation is only defined for separator-based variants")
            }
            Error::GuardExceeded { m, guard } => {
                write!(f, "collection has {m} strings, exhaustive guard is {guard}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
