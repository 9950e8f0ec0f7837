use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` must be odd with `3 <= p <= 63`.
    InvalidModulus { p: u32 },
    /// Two ring elements built for different `p`.
    ParameterMismatch { left: u32, right: u32 },
    /// Parameters the codec cannot run with.
    Unsupported(String),
    /// An index or length outside its legal range.
    OutOfRange { what: &'static str, value: usize, bound: usize },
    /// A slice of the wrong length.
    LengthMismatch { what: &'static str, expected: usize, actual: usize },
    /// The element vanishes modulo the given factor, so it has no inverse.
    NotInvertible { component: usize },
    /// A basis that fails the per-component independence check.
    InvalidBasis(String),
    /// The received word has more errors than the code can correct.
    Uncorrectable,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus { p } => write!(f, "p = {} is not an odd integer in 3..=63", p),
            Error::ParameterMismatch { left, right } => {
                write!(f, "ring elements over different p ({} vs {})", left, right)
            }
            Error::Unsupported(why) => write!(f, "unsupported parameters: {}", why),
            Error::OutOfRange { what, value, bound } => {
                write!(f, "{} = {} out of range (must be < {})", what, value, bound)
            }
            Error::LengthMismatch { what, expected, actual } => {
                write!(f, "{}: expected {} entries, got {}", what, expected, actual)
            }
            Error::NotInvertible { component } => {
                write!(f, "element vanishes modulo factor {} and is not invertible", component)
            }
            Error::InvalidBasis(why) => write!(f, "invalid evaluation basis: {}", why),
            Error::Uncorrectable => f.write_str("uncorrectable error pattern detected"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
