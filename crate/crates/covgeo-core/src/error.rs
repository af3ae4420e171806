//! Error type shared by all kernels.

use core::fmt;

/// Everything that can go wrong across the geometry, covolume, toric and
/// ideal kernels. Purely structural conditions (degenerate polytopes,
/// inequality violations) are reported through return values, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A region or ideal was constructed from no generators.
    EmptyGeneratorSet,
    /// Mixed ambient dimensions.
    DimensionMismatch { expected: usize, found: usize },
    /// Region generators must lie in the nonnegative orthant.
    NegativeCoordinate,
    /// The half-space intersection has a nontrivial recession cone.
    UnboundedPolytope,
    /// The half-space intersection is empty.
    EmptyPolytope,
    /// Scaling factor must be nonnegative.
    NegativeScalar,
    /// Truncation level must be positive.
    NonpositiveN,
    /// Support values are only defined on nonpositive directions.
    PositiveDirection,
    /// Kiselman numbers are only defined on strictly positive directions.
    NonpositiveDirection,
    /// The region has infinite covolume.
    NotCofinite,
    /// Wrong number of arguments for an n-ary operation.
    ArityMismatch { expected: usize, found: usize },
    /// k outside 1..=n.
    KOutOfRange { k: usize, n: usize },
    /// The interpolation system for the covolume polynomial could not be
    /// solved, or a held-out evaluation had nonzero residual. Never expected;
    /// it would mean the covolume of a scaled sum is not a homogeneous
    /// polynomial.
    SingularInterpolationSystem,
    /// The ideal does not contain a pure power of every variable.
    NotMPrimary,
    /// Exponents and transform parameters must be >= 1.
    NonpositiveM,
    /// Invalid expression tree (empty node, negative weight or slope, ...).
    MalformedExpression(&'static str),
    /// Evaluation point outside the closed nonpositive orthant.
    DomainViolation,
    /// Invalid fuzzer configuration.
    InvalidConfig(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGeneratorSet => write!(f, "empty generator set"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NegativeCoordinate => write!(f, "generator has a negative coordinate"),
            Error::UnboundedPolytope => write!(f, "polytope is unbounded"),
            Error::EmptyPolytope => write!(f, "polytope is empty"),
            Error::NegativeScalar => write!(f, "scaling factor must be nonnegative"),
            Error::NonpositiveN => write!(f, "truncation level must be positive"),
            Error::PositiveDirection => {
                write!(f, "support direction must be componentwise nonpositive")
            }
            Error::NonpositiveDirection => {
                write!(f, "direction must be componentwise strictly positive")
            }
            Error::NotCofinite => write!(f, "region has infinite covolume"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected} arguments, found {found}")
            }
            Error::KOutOfRange { k, n } => write!(f, "k = {k} outside 1..={n}"),
            Error::SingularInterpolationSystem => {
                write!(f, "covolume interpolation system is inconsistent")
            }
            Error::NotMPrimary => write!(f, "ideal is not m-primary"),
            Error::NonpositiveM => write!(f, "parameter m must be >= 1"),
            Error::MalformedExpression(what) => write!(f, "malformed expression: {what}"),
            Error::DomainViolation => {
                write!(f, "evaluation point must be componentwise nonpositive")
            }
            Error::InvalidConfig(what) => write!(f, "invalid configuration: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
