use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested characteristic is not a prime.
    NonPrimeCharacteristic(u32),
    /// Extension degree must be at least one.
    ZeroDegree,
    /// `p^e` does not fit the 32-bit element representation.
    FieldTooLarge { p: u32, e: u32 },
    /// The modulus is malformed (wrong degree, not monic, digit out of range).
    InvalidModulus(String),
    /// The modulus has a nontrivial factor over the prime field.
    ReducibleModulus,
    /// The root of the modulus does not generate the multiplicative group.
    NonPrimitiveModulus,
    /// Operands come from different fields.
    FieldMismatch,
    /// An element index is not below the field order.
    ElementOutOfRange { value: u32, order: u32 },
    DivisionByZero,
    /// Element orders are only defined for nonzero elements.
    ZeroElement,
    /// A token does not follow the `0` / integer / `w^i` syntax.
    MalformedElement(String),
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    EmptyGenerator,
    /// Generator rows are linearly dependent.
    RankDeficient {
        rank: usize,
        rows: usize,
    },
    /// The dual of the full space is the zero code.
    FullSpaceDual,
    TooFewWords(usize),
    /// The certificate needs `n > 2k`.
    CertifierPrecondition { n: usize, k: usize },
    InvalidParameters(String),
    BudgetExceeded {
        what: &'static str,
        required: u128,
        budget: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrimeCharacteristic(p) => write!(f, "characteristic {p} is not prime"),
            Error::ZeroDegree => write!(f, "extension degree must be at least 1"),
            Error::FieldTooLarge { p, e } => {
                write!(f, "field of order {p}^{e} exceeds the 32-bit representation")
            }
            Error::InvalidModulus(why) => write!(f, "invalid modulus: {why}"),
            Error::ReducibleModulus => write!(f, "modulus is reducible"),
            Error::NonPrimitiveModulus => {
                write!(f, "root of the modulus is not a primitive element")
            }
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::ElementOutOfRange { value, order } => {
                write!(f, "element {value} out of range for field of order {order}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroElement => write!(f, "operation undefined for the zero element"),
            Error::MalformedElement(tok) => write!(f, "malformed element token {tok:?}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::EmptyGenerator => write!(f, "generator matrix is empty"),
            Error::RankDeficient { rank, rows } => {
                write!(f, "generator has rank {rank} but {rows} rows")
            }
            Error::FullSpaceDual => write!(f, "the dual of the full space is the zero code"),
            Error::TooFewWords(n) => write!(f, "need at least two words, got {n}"),
            Error::CertifierPrecondition { n, k } => {
                write!(f, "certificate requires n > 2k, got n = {n}, k = {k}")
            }
            Error::InvalidParameters(why) => write!(f, "invalid parameters: {why}"),
            Error::BudgetExceeded {
                what,
                required,
                budget,
            } => write!(f, "budget exceeded: {required} {what} needed, budget is {budget}"),
        }
    }
}

impl core::error::Error for Error {}
