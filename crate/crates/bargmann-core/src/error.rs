//! Error type shared by all transform paths.

use std::fmt;

/// Errors produced by grid construction, transform preconditions and the
/// numerical pipelines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Centered grids need a sample exactly at 0, so the length must be odd.
    OddLengthRequired { count: usize },
    /// Grid spacing must be finite and strictly positive.
    NonpositiveSpacing { spacing: f64 },
    /// A sample buffer does not match its grid length.
    LengthMismatch { expected: usize, actual: usize },
    /// Two signals or fields that must share a shape do not.
    ShapeMismatch,
    /// Two operands that must live on the same grid do not.
    GridMismatch,
    /// The centered-DFT compatibility constraint `d_in * d_out = 2pi/N` is
    /// violated; `required` is the output spacing that would satisfy it.
    SpacingConstraint { required: f64, actual: f64 },
    /// A chirp matrix must be symmetric.
    AsymmetricChirp,
    /// The imaginary part of a multiplicative chirp's quadratic form must be
    /// positive semidefinite (a decaying Gaussian envelope, never a growing one).
    GrowingChirp,
    /// Chirp convolution needs an invertible matrix; use the B = 0 branch of
    /// the NsLCT instead.
    SingularConvolutionMatrix,
    /// The 4x4 parameter matrix is not symplectic.
    NotSymplectic,
    /// B = 0 branch with a `D^T` that does not map the sampling grid onto
    /// itself; resampling is out of scope.
    GridNotPreserved,
    /// A field arrived with the wrong normalization kind tag.
    WrongFieldKind { expected: &'static str, actual: &'static str },
    /// The Hermite-Gaussian recurrence left the representable range.
    HermiteOverflow { order: usize },
    /// The sampled Hermite-Gaussian matrix lost rank at this column; the grid
    /// is too coarse or too narrow for a basis of that size.
    RankDeficient { order: usize },
    /// Wigner-d indices must satisfy |M| <= J, |M'| <= J with integer J-M, J-M'.
    InvalidWignerIndices { two_j: i64, two_m: i64, two_mp: i64 },
    /// Coupling coefficients are defined for 0 <= k <= n.
    CouplingIndex { n: usize, k: usize },
    /// Unknown benchmark method name.
    UnknownMethod { name: String },
    /// A benchmark parameter left its documented range.
    ParameterOutOfRange { what: &'static str, value: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OddLengthRequired { count } => {
                write!(f, "odd length required, got {count}")
            }
            Error::NonpositiveSpacing { spacing } => {
                write!(f, "grid spacing must be finite and positive, got {spacing}")
            }
            Error::LengthMismatch { expected, actual } => {
                write!(f, "sample count {actual} does not match grid length {expected}")
            }
            Error::ShapeMismatch => write!(f, "operands have different shapes"),
            Error::GridMismatch => write!(f, "operands live on different grids"),
            Error::SpacingConstraint { required, actual } => write!(
                f,
                "centered-DFT spacing constraint violated: required output spacing {required:e}, got {actual:e}"
            ),
            Error::AsymmetricChirp => write!(f, "chirp matrix must be symmetric"),
            Error::GrowingChirp => write!(
                f,
                "chirp matrix has a growing Gaussian envelope (imaginary part not positive semidefinite)"
            ),
            Error::SingularConvolutionMatrix => {
                write!(f, "singular convolution matrix; use the B=0 branch of the NsLCT instead")
            }
            Error::NotSymplectic => write!(f, "parameter matrix is not symplectic"),
            Error::GridNotPreserved => write!(
                f,
                "B=0 branch requires D^T to map the grid onto itself (resampling is out of scope)"
            ),
            Error::WrongFieldKind { expected, actual } => {
                write!(f, "field kind must be {expected}, got {actual}")
            }
            Error::HermiteOverflow { order } => {
                write!(f, "Hermite-Gaussian evaluation left the finite range at order {order}")
            }
            Error::RankDeficient { order } => write!(
                f,
                "sampled Hermite-Gaussian matrix is rank deficient at column {order} (grid too coarse or narrow)"
            ),
            Error::InvalidWignerIndices { two_j, two_m, two_mp } => write!(
                f,
                "invalid Wigner-d indices 2J={two_j}, 2M={two_m}, 2M'={two_mp}"
            ),
            Error::CouplingIndex { n, k } => {
                write!(f, "coupling coefficient requires 0 <= k <= n, got n={n}, k={k}")
            }
            Error::UnknownMethod { name } => write!(f, "unknown method {name:?}"),
            Error::ParameterOutOfRange { what, value, max } => {
                write!(f, "{what} = {value} out of range (max {max})")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
