//! Curvature-continuous (G²) piecewise Ball cubic splines.
//!
//! Each knot of a design supplies a point, a unit tangent and a signed
//! curvature. Every span between two knots becomes one Ball cubic whose
//! shape parameters `(α, β)` are solved so the segment meets both end
//! curvatures; adjacent segments then agree in position, tangent and
//! curvature at the shared knot.
//!
//! The kernel is generic over the floating-point type ([`Real`], `f32` or
//! `f64`). Export works in `f64`; the `D*` aliases below name the `f64`
//! instantiations.
//!
//! ```
//! use ballkurve::{build_spline, verify_g2_default, DG2SplineSpec, DKnotSpec, DPoint2, DUnitVec2};
//!
//! let knot = |x, y, m, n, k| DKnotSpec::new(DPoint2::new(x, y), DUnitVec2::new(m, n).unwrap(), k);
//! let spec = DG2SplineSpec::new(vec![knot(0.0, 0.0, 1.0, 0.0, 4.0), knot(1.0, 1.0, 0.0, 1.0, 4.0)]);
//! let spline = build_spline(&spec, &Default::default()).unwrap();
//! assert!(verify_g2_default(&spline).pass);
//! ```

// `!(x > 0)` is deliberate: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ball;
pub mod error;
pub mod export;
pub mod geom;
pub mod roots;
pub mod scalar;
pub mod solver;
pub mod spline;

pub use ball::{
    basis, control_points_from_g2, curvature_from_signed_radius, eval_bernstein, kappa_end,
    kappa_start, BallSegment, G2EndData, SegmentParams, Sign, SignedRadius,
};
pub use error::{Error, Result};
pub use export::{revolve_obj, sample, to_svg, PolylineSample, RevolveConfig, SvgOptions};
pub use geom::{apply_affine, cross2, normalize, Affine2, Point2, UnitVec2, Vec2};
pub use roots::{real_roots, Quartic};
pub use scalar::Real;
pub use solver::{
    build_quartic, coefficients, residuals, select_default, select_default_index, solve_pairs,
    CandidatePair, SegmentCoefficients, SolverConfig,
};
pub use spline::{
    build_spline, curvature_profile, verify_g2, verify_g2_default, G2Report, G2Spline,
    G2SplineSpec, JointReport, KnotSpec, SolvedSegment,
};

pub type DPoint2 = Point2<f64>;
pub type DVec2 = Vec2<f64>;
pub type DUnitVec2 = UnitVec2<f64>;
pub type DAffine2 = Affine2<f64>;
pub type DBallSegment = BallSegment<f64>;
pub type DG2EndData = G2EndData<f64>;
pub type DSegmentParams = SegmentParams<f64>;
pub type DCandidatePair = CandidatePair<f64>;
pub type DSolverConfig = SolverConfig<f64>;
pub type DKnotSpec = KnotSpec<f64>;
pub type DG2SplineSpec = G2SplineSpec<f64>;
pub type DG2Spline = G2Spline<f64>;
pub type DG2Report = G2Report<f64>;

pub type FPoint2 = Point2<f32>;
pub type FUnitVec2 = UnitVec2<f32>;
pub type FBallSegment = BallSegment<f32>;
pub type FG2EndData = G2EndData<f32>;
pub type FSolverConfig = SolverConfig<f32>;
pub type FG2Spline = G2Spline<f32>;
