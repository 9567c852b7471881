use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar used by every geometric type in the crate.
///
/// The associated tolerances are tuned per precision; the `f64` values are
/// the reference ones and everything downstream of the kernel (export, CLI)
/// works in `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Maximum deviation of `m² + n²` from 1 accepted for a unit vector,
    /// and the norm below which a vector cannot be normalized.
    const UNIT_TOL: Self;
    /// Slack allowed outside the parameter domain `[0, 1]`.
    const DOMAIN_TOL: Self;
    /// Speed at or below which a curve point is considered singular.
    const SINGULAR_SPEED: Self;
    /// Relative threshold below which a solver coefficient counts as zero.
    const NEGLIGIBLE: Self;

    /// Converts an `f64` literal; every literal used by the crate is representable.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }
}

impl Real for f64 {
    const UNIT_TOL: Self = 1e-12;
    const DOMAIN_TOL: Self = 1e-12;
    const SINGULAR_SPEED: Self = 1e-9;
    const NEGLIGIBLE: Self = 1e-12;
}

impl Real for f32 {
    const UNIT_TOL: Self = 1e-6;
    const DOMAIN_TOL: Self = 1e-6;
    const SINGULAR_SPEED: Self = 1e-5;
    const NEGLIGIBLE: Self = 1e-6;
}
