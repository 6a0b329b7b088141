use thiserror::Error;

/// Errors raised by the numeric kernels, family algebra and constructions.
///
/// Scalar payloads are carried as their display strings so the enum stays
/// independent of the arithmetic mode.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root finder did not converge within {0} iterations")]
    NonConvergence(usize),
    #[error("pole at {0}")]
    PoleAt(String),
    #[error("removable singularity at {0}")]
    RemovableSingularity(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("beta_{0} is zero")]
    BetaZero(usize),
    #[error("mixed basis is linearly dependent")]
    SingularBasis,
    #[error("vanishing qtilde denominator at node {0}, factor {1}")]
    SingularNode(usize, usize),
    #[error("vanishing or infinite pivot in triangular system at row {0}")]
    SingularPivot(usize),
    #[error("construction produced the zero polynomial")]
    ZeroPolynomial,
    #[error("orthogonality residual {0} exceeds the float tolerance")]
    LostAccuracy(String),
    #[error("repeated mu values")]
    DegenerateMu,
    #[error("biorthogonal polynomial does not exist (moment determinant vanishes)")]
    NoExistence,
    #[error("null space has dimension {0}, expected 1")]
    NullSpaceDimension(usize),
    #[error("sigma_0 is zero")]
    SigmaZero,
    #[error("kappa is zero")]
    KappaZero,
    #[error("a_1 b_0 = a_0 b_1: exponent would be constant in mu")]
    DegenerateAB,
    #[error("leading indicial coefficient p_{order} vanishes; reduced degree {reduced}")]
    LeadingZero { order: usize, reduced: usize },
    #[error("recurrence denominator vanishes at n = {0}")]
    Resonance(usize),
    #[error("theta is not a root of the indicial equation")]
    ThetaNotIndicial,
    #[error("lower parameter {0} is a nonpositive integer")]
    NonpositiveLowerParameter(String),
    #[error("invalid lower parameter {0}")]
    InvalidLowerParameter(String),
    #[error("series diverges (terms grow at n = {0})")]
    Divergence(usize),
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),
    #[error("index {index} outside family table of length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("value not representable in this arithmetic mode: {0}")]
    NotRepresentable(String),
    #[error("unsupported weight form: {0}")]
    UnsupportedWeight(String),
    #[error("invalid family configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
