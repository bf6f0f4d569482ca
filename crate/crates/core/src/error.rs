use std::fmt;

use num_rational::BigRational;

use crate::poly::SignPattern;

/// Crate-wide error type. Every fallible operation reports which
/// precondition failed rather than panicking.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// A sequence or pattern has the wrong length for the polynomial it acts on.
    LengthMismatch { expected: usize, got: usize },
    /// Truncation indices must satisfy `0 <= m < n <= degree`.
    BadRange { lo: usize, hi: usize, degree: usize },
    /// The operation is only defined for real-rooted polynomials.
    NotRealRooted,
    /// Discriminants need degree at least 2.
    DegreeTooLow { degree: usize },
    /// The requested size is outside the supported range.
    Unsupported { what: &'static str },
    /// Cone membership requires strictly positive coordinates.
    NonPositiveEntry { index: usize },
    /// Log-concavity checks require nonnegative entries.
    NegativeEntry { index: usize },
    /// A zero entry sits between positive ones where the check is undefined.
    InteriorZeroEntry { index: usize },
    /// A sign precondition on a sequence entry failed.
    SignPrecondition { index: usize },
    /// Tolerances must satisfy `0 < tol_inside <= tol_outside`.
    BadTolerances,
    /// Log coordinates require every coefficient to be nonzero.
    ZeroCoordinate { index: usize },
    /// Random sampling kept producing degenerate coefficient vectors.
    DegenerateSample,
    /// The scale parameter is too small; the recorded flip defeats membership.
    LambdaTooSmall { lambda: BigRational, pattern: SignPattern },
    /// A parameter must be strictly positive (or lie in its stated range).
    BadParameter(&'static str),
    /// An index parameter is out of range.
    BadIndex { index: usize },
    /// The polynomial is not sign-independently real-rooted with
    /// nonnegative coefficients, which this check requires.
    NotSiGeq,
    /// A deformation path left the class it must stay inside.
    PathBroken { tau: BigRational },
    /// Text input could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "zero polynomial is not allowed here"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::BadRange { lo, hi, degree } => {
                write!(f, "bad range {lo}..{hi} for degree {degree}")
            }
            Error::NotRealRooted => write!(f, "polynomial is not real-rooted"),
            Error::DegreeTooLow { degree } => {
                write!(f, "degree {degree} is too low for this operation")
            }
            Error::Unsupported { what } => write!(f, "unsupported: {what}"),
            Error::NonPositiveEntry { index } => {
                write!(f, "entry {index} must be strictly positive")
            }
            Error::NegativeEntry { index } => write!(f, "entry {index} is negative"),
            Error::InteriorZeroEntry { index } => {
                write!(f, "entry {index} is zero between positive entries")
            }
            Error::SignPrecondition { index } => {
                write!(f, "entry {index} violates the sign precondition")
            }
            Error::BadTolerances => write!(f, "tolerances must satisfy 0 < inside <= outside"),
            Error::ZeroCoordinate { index } => {
                write!(f, "coefficient {index} is zero; log coordinates undefined")
            }
            Error::DegenerateSample => write!(f, "sampling produced only degenerate vectors"),
            Error::LambdaTooSmall { lambda, pattern } => {
                write!(f, "lambda {lambda} too small; flip {pattern} defeats membership")
            }
            Error::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            Error::BadIndex { index } => write!(f, "index {index} out of range"),
            Error::NotSiGeq => {
                write!(f, "polynomial is not sign-independently real-rooted with nonnegative coefficients")
            }
            Error::PathBroken { tau } => write!(f, "path leaves the class at tau = {tau}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
