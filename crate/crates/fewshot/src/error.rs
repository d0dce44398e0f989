//! Crate-wide error type.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by feature handling, classification, evaluation
/// protocols, ECOC operations, and file I/O.
#[derive(Debug)]
pub enum Error {
    /// An operation that needs at least one record was given an empty set.
    EmptyFeatureSet,
    /// A vector with Euclidean norm below the zero threshold cannot be normalized.
    ZeroVector,
    /// Two vectors (or a vector and a fitted state) disagree on dimension.
    DimensionMismatch { expected: usize, actual: usize },
    /// A feature component is NaN or infinite.
    NonFinite { record: usize },
    /// A parameter failed validation (counts, rates, spreads, ...).
    InvalidParameter(String),
    /// The same class identifier appears twice where identifiers must be distinct.
    DuplicateClass { class_id: u32 },
    /// A support class has no vectors.
    EmptySupportClass { class_id: u32 },
    /// Fewer distinct classes are available than the protocol requires.
    InsufficientClasses { required: usize, available: usize },
    /// A sampled class has fewer records than shots + queries.
    InsufficientRecords {
        class_id: u32,
        required: usize,
        available: usize,
    },
    /// Too few values for a statistic (e.g. a confidence interval needs two).
    InsufficientData { required: usize, actual: usize },
    /// A multiway split contains no test records.
    EmptyTestSet,
    /// A split file row names a role other than `support` or `test`.
    UnknownRole { line: usize, role: String },
    /// A split file row indexes past the end of the feature set.
    IndexOutOfRange { line: usize, index: u64, count: usize },
    /// A split file assigns the same record twice.
    DuplicateIndex { line: usize, index: u64 },
    /// A test record's class has no support vectors.
    ZeroSupportClass { class_id: u32 },
    /// The code length cannot scatter the requested number of classes.
    CodeTooShort {
        classes: usize,
        bits: usize,
        required: usize,
    },
    /// A predicted code's length differs from the codebook's code length.
    CodeLengthMismatch { expected: usize, actual: usize },
    /// Rejection re-sampling failed to produce a distinct code row.
    CodebookCollision { attempts: usize },
    /// Two codebook rows are identical.
    DuplicateCodeRow { row: usize },
    /// A soft-code component lies outside [0, 1] or is not finite.
    InvalidCodeValue { index: usize },
    /// A training label does not appear in the codebook.
    UnknownLabel { label: u32 },
    /// A soft code was requested from an empty shot list.
    EmptyShots,
    /// The training loss became NaN or infinite.
    NonFiniteLoss { epoch: usize },
    /// Only binary codebooks can be written to the text format.
    NonBinaryCodebook,
    /// An underlying I/O failure.
    Io(std::io::Error),
    /// A feature file does not start with the expected magic bytes.
    BadMagic { found: [u8; 4] },
    /// A feature file carries an unsupported format version.
    BadVersion { found: u16 },
    /// A file ends before the header-implied length.
    Truncated { offset: u64 },
    /// A file continues past the header-implied length.
    TrailingData { offset: u64 },
    /// A text file field failed to parse. Line and column are 1-based.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// A CSV row has the wrong number of fields. Line is 1-based.
    RaggedRow {
        line: usize,
        expected: usize,
        actual: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyFeatureSet => write!(f, "feature set is empty"),
            Error::ZeroVector => write!(f, "cannot normalize a zero vector"),
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            Error::NonFinite { record } => {
                write!(f, "non-finite feature value in record {record}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DuplicateClass { class_id } => {
                write!(f, "duplicate class identifier {class_id}")
            }
            Error::EmptySupportClass { class_id } => {
                write!(f, "support class {class_id} has no vectors")
            }
            Error::InsufficientClasses {
                required,
                available,
            } => write!(
                f,
                "need {required} distinct classes but only {available} available"
            ),
            Error::InsufficientRecords {
                class_id,
                required,
                available,
            } => write!(
                f,
                "class {class_id} has {available} records but {required} are required"
            ),
            Error::InsufficientData { required, actual } => {
                write!(f, "need at least {required} values, got {actual}")
            }
            Error::EmptyTestSet => write!(f, "multiway split has no test records"),
            Error::UnknownRole { line, role } => {
                write!(f, "line {line}: unknown role '{role}'")
            }
            Error::IndexOutOfRange { line, index, count } => write!(
                f,
                "line {line}: record index {index} out of range (set has {count} records)"
            ),
            Error::DuplicateIndex { line, index } => {
                write!(f, "line {line}: record index {index} assigned twice")
            }
            Error::ZeroSupportClass { class_id } => {
                write!(f, "test class {class_id} has no support records")
            }
            Error::CodeTooShort {
                classes,
                bits,
                required,
            } => write!(
                f,
                "code length {bits} too short for {classes} classes (need at least {required} = ceil(log2({classes})) bits)"
            ),
            Error::CodeLengthMismatch { expected, actual } => {
                write!(f, "code length mismatch: expected {expected}, got {actual}")
            }
            Error::CodebookCollision { attempts } => write!(
                f,
                "failed to sample a distinct code row after {attempts} attempts"
            ),
            Error::DuplicateCodeRow { row } => {
                write!(f, "codebook row {row} duplicates an earlier row")
            }
            Error::InvalidCodeValue { index } => {
                write!(f, "code component {index} outside [0, 1] or not finite")
            }
            Error::UnknownLabel { label } => {
                write!(f, "label {label} does not appear in the codebook")
            }
            Error::EmptyShots => write!(f, "soft code requires at least one shot"),
            Error::NonFiniteLoss { epoch } => {
                write!(f, "training loss became non-finite at epoch {epoch}")
            }
            Error::NonBinaryCodebook => {
                write!(f, "codebook contains soft rows; only binary rows can be written")
            }
            Error::Io(err) => write!(f, "i/o error: {err}"),
            Error::BadMagic { found } => {
                write!(f, "bad magic bytes {found:?} (expected \"FSFV\")")
            }
            Error::BadVersion { found } => {
                write!(f, "unsupported feature file version {found} (expected 1)")
            }
            Error::Truncated { offset } => {
                write!(f, "file truncated at byte offset {offset}")
            }
            Error::TrailingData { offset } => {
                write!(f, "unexpected trailing data at byte offset {offset}")
            }
            Error::Parse {
                line,
                column,
                message,
            } => write!(f, "line {line}, column {column}: {message}"),
            Error::RaggedRow {
                line,
                expected,
                actual,
            } => write!(
                f,
                "line {line}: expected {expected} fields, got {actual}"
            ),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err)
    }
}
