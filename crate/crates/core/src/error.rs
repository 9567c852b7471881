use thiserror::Error;

/// Errors raised by the kernel.
///
/// Scalar payloads are widened to `f64` so the enum stays independent of
/// the scalar type the caller works in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector is too short to normalize")]
    ZeroVector,
    #[error("tangent ({m}, {n}) is not unit length")]
    NotUnit { m: f64, n: f64 },
    #[error("parameter t = {t} is outside [0, 1]")]
    OutOfDomain { t: f64 },
    #[error("curve is singular at t = {t} (speed {speed})")]
    SingularPoint { t: f64, speed: f64 },
    #[error("shape parameters must be positive (alpha = {alpha}, beta = {beta})")]
    InvalidParams { alpha: f64, beta: f64 },
    #[error("radius must be positive, got {radius}")]
    InvalidRadius { radius: f64 },
    #[error("segment end points coincide")]
    DegenerateChord,
    #[error("value is not finite")]
    NonFinite,
    #[error("the quartic elimination does not apply: {0}")]
    DegenerateBranch(&'static str),
    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,
    #[error("no positive (alpha, beta) pair satisfies both end curvatures ({rejected} candidate(s) rejected)")]
    NoFeasiblePair { rejected: usize },
    #[error("candidate list is empty")]
    EmptyCandidates,
    #[error("segment {index} is infeasible: {source}")]
    InfeasibleSegment {
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid spline spec: {0}")]
    InvalidSpec(String),
    #[error("curve is singular on segment {segment} at t = {t}")]
    SingularSample { segment: usize, t: f64 },
    #[error("profile point {index} has x = {x} < 0; the profile crosses the revolution axis")]
    ProfileCrossesAxis { index: usize, x: f64 },
    #[error("invalid export configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
