//! Planar points, vectors and affine maps.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point in the model plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

/// A displacement in the model plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Vec2<T> {
    pub dx: T,
    pub dy: T,
}

/// A direction with `m² + n² = 1`.
///
/// Construction never renormalizes silently: [`UnitVec2::new`] rejects
/// inputs that are not already unit length, [`normalize`] is the explicit
/// conversion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitVec2<T> {
    m: T,
    n: T,
}

/// Affine map `p ↦ L·p + t` with a row-major 2×2 linear part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Affine2<T> {
    pub linear: [[T; 2]; 2],
    pub translation: Vec2<T>,
}

impl<T: Real> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Position vector of the point.
    pub fn to_vec(self) -> Vec2<T> {
        Vec2::new(self.x, self.y)
    }

    pub fn distance(self, other: Self) -> T {
        (other - self).norm()
    }
}

impl<T: Real> Vec2<T> {
    pub fn new(dx: T, dy: T) -> Self {
        Self { dx, dy }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn dot(self, other: Self) -> T {
        self.dx * other.dx + self.dy * other.dy
    }

    pub fn norm(self) -> T {
        self.dx.hypot(self.dy)
    }

    /// Counter-clockwise perpendicular `(−dy, dx)`.
    pub fn perp(self) -> Self {
        Self::new(-self.dy, self.dx)
    }

    pub fn is_finite(&self) -> bool {
        self.dx.is_finite() && self.dy.is_finite()
    }
}

impl<T: Real> UnitVec2<T> {
    /// Accepts `(m, n)` only if it is unit length within [`Real::UNIT_TOL`].
    pub fn new(m: T, n: T) -> Result<Self> {
        if !(m.is_finite() && n.is_finite()) {
            return Err(Error::NonFinite);
        }
        if (m * m + n * n - T::one()).abs() > T::UNIT_TOL {
            return Err(Error::NotUnit {
                m: m.to_f64().unwrap_or(f64::NAN),
                n: n.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { m, n })
    }

    /// Direction at angle `theta` from the +x axis.
    pub fn from_angle(theta: T) -> Self {
        let (s, c) = theta.sin_cos();
        Self { m: c, n: s }
    }

    pub fn m(&self) -> T {
        self.m
    }

    pub fn n(&self) -> T {
        self.n
    }

    pub fn to_vec(self) -> Vec2<T> {
        Vec2::new(self.m, self.n)
    }
}

/// Planar cross product `u.dx·v.dy − u.dy·v.dx`.
pub fn cross2<T: Real>(u: Vec2<T>, v: Vec2<T>) -> T {
    u.dx * v.dy - u.dy * v.dx
}

/// Scales `v` to unit length.
pub fn normalize<T: Real>(v: Vec2<T>) -> Result<UnitVec2<T>> {
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    let len = v.norm();
    if len <= T::UNIT_TOL {
        return Err(Error::ZeroVector);
    }
    Ok(UnitVec2 {
        m: v.dx / len,
        n: v.dy / len,
    })
}

/// Applies the linear part of `a` to `p`, then adds the translation.
pub fn apply_affine<T: Real>(a: &Affine2<T>, p: Point2<T>) -> Point2<T> {
    a.apply(p)
}

impl<T: Real> Affine2<T> {
    pub fn new(linear: [[T; 2]; 2], translation: Vec2<T>) -> Self {
        Self {
            linear,
            translation,
        }
    }

    pub fn identity() -> Self {
        Self::new([[T::one(), T::zero()], [T::zero(), T::one()]], Vec2::zero())
    }

    pub fn translation(t: Vec2<T>) -> Self {
        Self::new(Self::identity().linear, t)
    }

    /// Counter-clockwise rotation about the origin.
    pub fn rotation(theta: T) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new([[c, -s], [s, c]], Vec2::zero())
    }

    pub fn scaling(s: T) -> Self {
        Self::new([[s, T::zero()], [T::zero(), s]], Vec2::zero())
    }

    pub fn determinant(&self) -> T {
        let [[a, b], [c, d]] = self.linear;
        a * d - b * c
    }

    pub fn apply_vec(&self, v: Vec2<T>) -> Vec2<T> {
        let [[a, b], [c, d]] = self.linear;
        Vec2::new(a * v.dx + b * v.dy, c * v.dx + d * v.dy)
    }

    pub fn apply(&self, p: Point2<T>) -> Point2<T> {
        let l = self.apply_vec(p.to_vec());
        Point2::new(l.dx + self.translation.dx, l.dy + self.translation.dy)
    }

    /// The map `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Self) -> Self {
        let [[a, b], [c, d]] = self.linear;
        let [[e, f], [g, h]] = inner.linear;
        let linear = [
            [a * e + b * g, a * f + b * h],
            [c * e + d * g, c * f + d * h],
        ];
        let t = self.apply_vec(inner.translation);
        Self::new(
            linear,
            Vec2::new(t.dx + self.translation.dx, t.dy + self.translation.dy),
        )
    }
}

impl<T: Real> Sub for Point2<T> {
    type Output = Vec2<T>;
    fn sub(self, rhs: Self) -> Vec2<T> {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> Add<Vec2<T>> for Point2<T> {
    type Output = Point2<T>;
    fn add(self, rhs: Vec2<T>) -> Self {
        Point2::new(self.x + rhs.dx, self.y + rhs.dy)
    }
}

impl<T: Real> Sub<Vec2<T>> for Point2<T> {
    type Output = Point2<T>;
    fn sub(self, rhs: Vec2<T>) -> Self {
        Point2::new(self.x - rhs.dx, self.y - rhs.dy)
    }
}

impl<T: Real> Add for Vec2<T> {
    type Output = Vec2<T>;
    fn add(self, rhs: Self) -> Self {
        Vec2::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl<T: Real> Sub for Vec2<T> {
    type Output = Vec2<T>;
    fn sub(self, rhs: Self) -> Self {
        Vec2::new(self.dx - rhs.dx, self.dy - rhs.dy)
    }
}

impl<T: Real> Neg for Vec2<T> {
    type Output = Vec2<T>;
    fn neg(self) -> Self {
        Vec2::new(-self.dx, -self.dy)
    }
}

impl<T: Real> Mul<T> for Vec2<T> {
    type Output = Vec2<T>;
    fn mul(self, s: T) -> Self {
        Vec2::new(self.dx * s, self.dy * s)
    }
}

impl<T: Real> Mul<T> for UnitVec2<T> {
    type Output = Vec2<T>;
    fn mul(self, s: T) -> Vec2<T> {
        self.to_vec() * s
    }
}
