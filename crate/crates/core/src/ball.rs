//! The Ball cubic segment.
//!
//! A segment over control points `p0, p1, p2, p3` is
//!
//! ```text
//! B(t) = (1−t)²·p0 + 2t(1−t)²·p1 + 2t²(1−t)·p2 + t²·p3,   t ∈ [0, 1]
//! ```
//!
//! The inner points are placed along the end tangents at distances `1/α`
//! and `1/β`, so the end speeds are `2/α` and `2/β`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{cross2, Affine2, Point2, UnitVec2, Vec2};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BallSegment<T> {
    pub p0: Point2<T>,
    pub p1: Point2<T>,
    pub p2: Point2<T>,
    pub p3: Point2<T>,
}

/// Position, unit tangent and signed curvature at both ends of a segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct G2EndData<T> {
    pub start: Point2<T>,
    pub end: Point2<T>,
    pub t_start: UnitVec2<T>,
    pub t_end: UnitVec2<T>,
    pub kappa_start: T,
    pub kappa_end: T,
}

/// The positive shape parameters `(α, β)` of one segment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SegmentParams<T> {
    alpha: T,
    beta: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

/// Curvature given as a side of travel and an osculating radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedRadius<T> {
    pub sign: Sign,
    pub radius: T,
}

impl<T: Real> BallSegment<T> {
    pub fn new(p0: Point2<T>, p1: Point2<T>, p2: Point2<T>, p3: Point2<T>) -> Self {
        Self { p0, p1, p2, p3 }
    }

    pub fn control_points(&self) -> [Point2<T>; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    /// The same curve traversed from `p3` to `p0`.
    pub fn reverse(&self) -> Self {
        Self::new(self.p3, self.p2, self.p1, self.p0)
    }

    /// Maps every control point through `a`.
    pub fn transform(&self, a: &Affine2<T>) -> Self {
        Self::new(a.apply(self.p0), a.apply(self.p1), a.apply(self.p2), a.apply(self.p3))
    }

    pub fn eval(&self, t: T) -> Result<Point2<T>> {
        Ok(self.eval_unchecked(check_domain(t)?))
    }

    pub fn deriv1(&self, t: T) -> Result<Vec2<T>> {
        Ok(self.deriv1_unchecked(check_domain(t)?))
    }

    pub fn deriv2(&self, t: T) -> Result<Vec2<T>> {
        Ok(self.deriv2_unchecked(check_domain(t)?))
    }

    /// Signed curvature `(B′ × B″) / ‖B′‖³`, positive when the curve turns left.
    pub fn curvature(&self, t: T) -> Result<T> {
        let t = check_domain(t)?;
        let d1 = self.deriv1_unchecked(t);
        let speed = d1.norm();
        if speed <= T::SINGULAR_SPEED {
            return Err(Error::SingularPoint {
                t: t.to_f64().unwrap_or(f64::NAN),
                speed: speed.to_f64().unwrap_or(f64::NAN),
            });
        }
        let d2 = self.deriv2_unchecked(t);
        Ok(cross2(d1, d2) / (speed * speed * speed))
    }

    /// Unit tangent at `t`; errors at singular points like [`Self::curvature`].
    pub fn unit_tangent(&self, t: T) -> Result<UnitVec2<T>> {
        let t = check_domain(t)?;
        let d1 = self.deriv1_unchecked(t);
        if d1.norm() <= T::SINGULAR_SPEED {
            return Err(Error::SingularPoint {
                t: t.to_f64().unwrap_or(f64::NAN),
                speed: d1.norm().to_f64().unwrap_or(f64::NAN),
            });
        }
        crate::geom::normalize(d1)
    }

    pub(crate) fn eval_unchecked(&self, t: T) -> Point2<T> {
        let w = basis(t);
        combine(&self.control_points(), &w)
    }

    pub(crate) fn deriv1_unchecked(&self, t: T) -> Vec2<T> {
        let one = T::one();
        let two = T::lit(2.0);
        let three = T::lit(3.0);
        let s = one - t;
        let w = [
            -two * s,
            two * s * (one - three * t),
            two * t * (two - three * t),
            two * t,
        ];
        combine(&self.control_points(), &w).to_vec()
    }

    pub(crate) fn deriv2_unchecked(&self, t: T) -> Vec2<T> {
        let two = T::lit(2.0);
        let six = T::lit(6.0);
        let w = [
            two,
            two * (six * t - T::lit(4.0)),
            two * (two - six * t),
            two,
        ];
        combine(&self.control_points(), &w).to_vec()
    }

    /// Control points of the identical curve in the cubic Bernstein basis.
    pub fn to_bernstein(&self) -> [Point2<T>; 4] {
        let two = T::lit(2.0);
        let three = T::lit(3.0);
        let b1 = Point2::new(
            (self.p0.x + two * self.p1.x) / three,
            (self.p0.y + two * self.p1.y) / three,
        );
        let b2 = Point2::new(
            (two * self.p2.x + self.p3.x) / three,
            (two * self.p2.y + self.p3.y) / three,
        );
        [self.p0, b1, b2, self.p3]
    }
}

/// The four Ball cubic basis functions at `t`.
pub fn basis<T: Real>(t: T) -> [T; 4] {
    let two = T::lit(2.0);
    let s = T::one() - t;
    [s * s, two * t * s * s, two * t * t * s, t * t]
}

/// Evaluates a cubic Bézier curve with the given control points.
pub fn eval_bernstein<T: Real>(ctrl: &[Point2<T>; 4], t: T) -> Point2<T> {
    let three = T::lit(3.0);
    let s = T::one() - t;
    let w = [s * s * s, three * t * s * s, three * t * t * s, t * t * t];
    combine(ctrl, &w)
}

fn combine<T: Real>(pts: &[Point2<T>; 4], w: &[T; 4]) -> Point2<T> {
    let mut x = T::zero();
    let mut y = T::zero();
    for (p, &wi) in pts.iter().zip(w) {
        x = x + wi * p.x;
        y = y + wi * p.y;
    }
    Point2::new(x, y)
}

fn check_domain<T: Real>(t: T) -> Result<T> {
    if !(t >= -T::DOMAIN_TOL && t <= T::one() + T::DOMAIN_TOL) {
        return Err(Error::OutOfDomain {
            t: t.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(t.max(T::zero()).min(T::one()))
}

impl<T: Real> G2EndData<T> {
    pub fn new(
        start: Point2<T>,
        end: Point2<T>,
        t_start: UnitVec2<T>,
        t_end: UnitVec2<T>,
        kappa_start: T,
        kappa_end: T,
    ) -> Result<Self> {
        if !(start.is_finite() && end.is_finite() && kappa_start.is_finite() && kappa_end.is_finite())
        {
            return Err(Error::NonFinite);
        }
        if start.distance(end) <= T::NEGLIGIBLE {
            return Err(Error::DegenerateChord);
        }
        Ok(Self {
            start,
            end,
            t_start,
            t_end,
            kappa_start,
            kappa_end,
        })
    }

    pub fn chord(&self) -> Vec2<T> {
        self.end - self.start
    }

    pub fn chord_length(&self) -> T {
        self.chord().norm()
    }

    /// The same data with every length multiplied by `s > 0`.
    pub fn scaled(&self, s: T) -> Self {
        let sp = |p: Point2<T>| Point2::new(p.x * s, p.y * s);
        Self {
            start: sp(self.start),
            end: sp(self.end),
            kappa_start: self.kappa_start / s,
            kappa_end: self.kappa_end / s,
            ..*self
        }
    }
}

impl<T: Real> SegmentParams<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        if !(alpha > T::zero() && beta > T::zero() && alpha.is_finite() && beta.is_finite()) {
            return Err(Error::InvalidParams {
                alpha: alpha.to_f64().unwrap_or(f64::NAN),
                beta: beta.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }
}

/// Places the inner control points `start + T₀/α` and `end − T₁/β`.
pub fn control_points_from_g2<T: Real>(
    data: &G2EndData<T>,
    params: &SegmentParams<T>,
) -> BallSegment<T> {
    let p1 = data.start + data.t_start * params.alpha.recip();
    let p2 = data.end - data.t_end * params.beta.recip();
    BallSegment::new(data.start, p1, p2, data.end)
}

/// Closed-form signed curvature at `t = 0` of the segment built from `data` and `params`.
pub fn kappa_start<T: Real>(data: &G2EndData<T>, params: &SegmentParams<T>) -> T {
    let (m0, n0) = (data.t_start.m(), data.t_start.n());
    let (m1, n1) = (data.t_end.m(), data.t_end.n());
    let (x0, y0) = (data.start.x, data.start.y);
    let (x1, y1) = (data.end.x, data.end.y);
    let (alpha, beta) = (params.alpha, params.beta);
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    alpha * alpha * (two * (m1 * n0 - m0 * n1) + three * beta * (n0 * (x0 - x1) + m0 * (y1 - y0)))
        / (two * beta)
}

/// Closed-form signed curvature at `t = 1`.
pub fn kappa_end<T: Real>(data: &G2EndData<T>, params: &SegmentParams<T>) -> T {
    let (m0, n0) = (data.t_start.m(), data.t_start.n());
    let (m1, n1) = (data.t_end.m(), data.t_end.n());
    let (x0, y0) = (data.start.x, data.start.y);
    let (x1, y1) = (data.end.x, data.end.y);
    let (alpha, beta) = (params.alpha, params.beta);
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    beta * beta
        * (n1 * (three * (x1 - x0) * alpha - two * m0) + m1 * (three * (y0 - y1) * alpha + two * n0))
        / (two * alpha)
}

impl<T: Real> SignedRadius<T> {
    pub fn new(sign: Sign, radius: T) -> Result<Self> {
        if !(radius > T::zero()) || !radius.is_finite() {
            return Err(Error::InvalidRadius {
                radius: radius.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { sign, radius })
    }

    /// Inverse of [`curvature_from_signed_radius`]; `None` for zero curvature.
    pub fn from_curvature(kappa: T) -> Option<Self> {
        if kappa == T::zero() || !kappa.is_finite() {
            return None;
        }
        let sign = if kappa > T::zero() {
            Sign::Positive
        } else {
            Sign::Negative
        };
        Some(Self {
            sign,
            radius: kappa.abs().recip(),
        })
    }
}

pub fn curvature_from_signed_radius<T: Real>(sr: &SignedRadius<T>) -> Result<T> {
    if !(sr.radius > T::zero()) {
        return Err(Error::InvalidRadius {
            radius: sr.radius.to_f64().unwrap_or(f64::NAN),
        });
    }
    let k = sr.radius.recip();
    Ok(match sr.sign {
        Sign::Positive => k,
        Sign::Negative => -k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn arc_segment() -> BallSegment<f64> {
        BallSegment::new(p(0.0, 0.0), p(0.5, 0.0), p(1.0, 0.5), p(1.0, 1.0))
    }

    fn quadrant(k0: f64, k1: f64) -> G2EndData<f64> {
        G2EndData::new(
            p(0.0, 0.0),
            p(1.0, 1.0),
            UnitVec2::new(1.0, 0.0).unwrap(),
            UnitVec2::new(0.0, 1.0).unwrap(),
            k0,
            k1,
        )
        .unwrap()
    }

    #[test]
    fn eval_examples() {
        let seg = BallSegment::new(p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0));
        assert_eq!(seg.eval(0.0).unwrap(), seg.p0);
        assert_eq!(seg.eval(1.0).unwrap(), seg.p3);
        assert_eq!(seg.eval(0.5).unwrap(), p(0.5, 0.5));
        assert_eq!(basis(0.5), [0.25; 4]);
    }

    #[test]
    fn domain_is_checked() {
        let seg = arc_segment();
        assert!(matches!(seg.eval(1.1), Err(Error::OutOfDomain { .. })));
        assert!(matches!(seg.deriv1(-0.01), Err(Error::OutOfDomain { .. })));
        assert!(matches!(seg.deriv2(f64::NAN), Err(Error::OutOfDomain { .. })));
        assert_eq!(seg.eval(1.0 + 1e-13).unwrap(), seg.p3);
    }

    #[test]
    fn derivative_endpoint_collapse() {
        let seg = BallSegment::new(p(0.3, -1.0), p(2.0, 0.5), p(-1.0, 4.0), p(5.0, 2.0));
        assert_eq!(seg.deriv1(0.0).unwrap(), (seg.p1 - seg.p0) * 2.0);
        assert_eq!(seg.deriv1(1.0).unwrap(), (seg.p3 - seg.p2) * 2.0);
        let pv = |q: Point2<f64>| q.to_vec();
        let d2_0 = pv(seg.p0) * 2.0 - pv(seg.p1) * 8.0 + pv(seg.p2) * 4.0 + pv(seg.p3) * 2.0;
        let d2_1 = pv(seg.p0) * 2.0 + pv(seg.p1) * 4.0 - pv(seg.p2) * 8.0 + pv(seg.p3) * 2.0;
        assert_eq!(seg.deriv2(0.0).unwrap(), d2_0);
        assert_eq!(seg.deriv2(1.0).unwrap(), d2_1);
    }

    #[test]
    fn curvature_examples() {
        let line = BallSegment::new(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(3.0, 0.0));
        for t in [0.0, 0.3, 0.77, 1.0] {
            assert_eq!(line.curvature(t).unwrap(), 0.0);
        }
        let seg = arc_segment();
        assert_eq!(seg.deriv1(0.0).unwrap(), Vec2::new(1.0, 0.0));
        assert_eq!(seg.deriv2(0.0).unwrap(), Vec2::new(2.0, 4.0));
        assert_eq!(seg.curvature(0.0).unwrap(), 4.0);
        assert_eq!(seg.deriv2(1.0).unwrap(), Vec2::new(-4.0, -2.0));
        assert_eq!(seg.curvature(1.0).unwrap(), 4.0);
    }

    #[test]
    fn cusp_is_singular() {
        let seg = BallSegment::new(p(0.0, 0.0), p(0.0, 0.0), p(1.0, 1.0), p(2.0, 0.0));
        assert!(matches!(seg.curvature(0.0), Err(Error::SingularPoint { .. })));
    }

    #[test]
    fn control_points_examples() {
        let data = quadrant(4.0, 4.0);
        let seg = control_points_from_g2(&data, &SegmentParams::new(2.0, 2.0).unwrap());
        assert_eq!(seg.p1, p(0.5, 0.0));
        assert_eq!(seg.p2, p(1.0, 0.5));
        let seg = control_points_from_g2(&data, &SegmentParams::new(1.0, 3.0).unwrap());
        assert_eq!(seg.p1, p(1.0, 0.0));
        assert!(matches!(SegmentParams::new(0.0, 1.0), Err(Error::InvalidParams { .. })));
        assert!(matches!(SegmentParams::new(1.0, -2.0), Err(Error::InvalidParams { .. })));
    }

    #[test]
    fn closed_form_endpoint_curvatures() {
        let data = quadrant(4.0, 4.0);
        let params = SegmentParams::new(2.0, 2.0).unwrap();
        assert_eq!(kappa_start(&data, &params), 4.0);
        assert_eq!(kappa_end(&data, &params), 4.0);

        let flat = G2EndData::new(
            p(0.0, 0.0),
            p(1.0, 0.0),
            UnitVec2::new(1.0, 0.0).unwrap(),
            UnitVec2::new(1.0, 0.0).unwrap(),
            0.0,
            0.0,
        )
        .unwrap();
        for (a, b) in [(0.3, 7.0), (2.0, 2.0), (11.0, 0.1)] {
            let params = SegmentParams::new(a, b).unwrap();
            assert_eq!(kappa_start(&flat, &params), 0.0);
            assert_eq!(kappa_end(&flat, &params), 0.0);
        }

        let up = UnitVec2::new(0.0, 1.0).unwrap();
        let vase_mid = G2EndData::new(p(3.5, 5.0), p(0.5, 9.0), up, up, 1.0, -1.5).unwrap();
        let params = SegmentParams::new(2f64.sqrt() / 3.0, 3f64.sqrt().recip()).unwrap();
        assert!((kappa_start(&vase_mid, &params) - 1.0).abs() < 1e-14);
        assert!((kappa_end(&vase_mid, &params) + 1.5).abs() < 1e-14);
    }

    #[test]
    fn signed_radius_examples() {
        let k = |s, r: f64| curvature_from_signed_radius(&SignedRadius { sign: s, radius: r });
        assert_eq!(k(Sign::Positive, 0.5).unwrap(), 2.0);
        assert_eq!(k(Sign::Negative, 2.0).unwrap(), -0.5);
        assert!((k(Sign::Positive, 1.0 / 3.0).unwrap() - 3.0).abs() < 1e-15);
        assert!(matches!(k(Sign::Positive, 0.0), Err(Error::InvalidRadius { .. })));
        assert!(matches!(SignedRadius::new(Sign::Negative, -1.0), Err(Error::InvalidRadius { .. })));
        let sr = SignedRadius::from_curvature(-1.5f64).unwrap();
        assert_eq!(sr.sign, Sign::Negative);
        assert!((curvature_from_signed_radius(&sr).unwrap() + 1.5).abs() < 1e-15);
    }

    #[test]
    fn bernstein_examples() {
        let seg = BallSegment::new(p(1.0, 2.0), p(1.0, 2.0), p(4.0, 0.0), p(4.0, 0.0));
        let b = seg.to_bernstein();
        assert_eq!(b[1], seg.p0);
        assert_eq!(b[2], seg.p3);

        let seg = arc_segment();
        let b = seg.to_bernstein();
        assert_eq!(b[1], p(1.0 / 3.0, 0.0));
        assert!((b[2].x - 1.0).abs() < 1e-15 && (b[2].y - 2.0 / 3.0).abs() < 1e-15);
        for i in 0..=100 {
            let t = i as f64 / 100.0;
            let d = seg.eval(t).unwrap().distance(eval_bernstein(&b, t));
            assert!(d <= 1e-12, "t={t} d={d}");
        }
    }

    #[test]
    fn degenerate_chord_rejected() {
        let u = UnitVec2::new(1.0, 0.0).unwrap();
        assert_eq!(
            G2EndData::new(p(1.0, 1.0), p(1.0, 1.0), u, u, 0.0, 0.0),
            Err(Error::DegenerateChord)
        );
    }

    #[test]
    fn works_in_f32() {
        let seg = BallSegment::<f32>::new(
            Point2::new(0.0, 0.0),
            Point2::new(0.5, 0.0),
            Point2::new(1.0, 0.5),
            Point2::new(1.0, 1.0),
        );
        assert!((seg.curvature(0.0).unwrap() - 4.0).abs() < 1e-5);
    }
}
