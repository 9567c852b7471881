//! Real roots of polynomials of degree at most four.
//!
//! Roots are isolated between consecutive critical points (the real roots
//! of the derivative, found recursively) and refined by safeguarded Newton
//! iteration inside a bracketing interval. Critical points where the
//! polynomial touches zero are reported as (collapsed) multiple roots.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Quartic `c4·x⁴ + c3·x³ + c2·x² + c1·x + c0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quartic<T> {
    pub c4: T,
    pub c3: T,
    pub c2: T,
    pub c1: T,
    pub c0: T,
}

impl<T: Real> Quartic<T> {
    pub fn new(c4: T, c3: T, c2: T, c1: T, c0: T) -> Self {
        Self { c4, c3, c2, c1, c0 }
    }

    /// Coefficients, highest degree first.
    pub fn coeffs(&self) -> [T; 5] {
        [self.c4, self.c3, self.c2, self.c1, self.c0]
    }

    pub fn eval(&self, x: T) -> T {
        horner(&self.coeffs(), x)
    }
}

/// All distinct real roots of `q` in ascending order.
///
/// Each root `r` satisfies `|q(r)| ≤ tol·max|c_k|·max(1, |r|⁴)`.
pub fn real_roots<T: Real>(q: &Quartic<T>, tol: T) -> Result<Vec<T>> {
    poly_real_roots(&q.coeffs(), tol)
}

/// [`real_roots`] for an arbitrary coefficient slice (highest degree first, degree ≤ 4).
pub fn poly_real_roots<T: Real>(coeffs: &[T], tol: T) -> Result<Vec<T>> {
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite);
    }
    let lead = coeffs
        .iter()
        .position(|c| *c != T::zero())
        .ok_or(Error::ZeroPolynomial)?;
    let p = &coeffs[lead..];
    let cmax = p.iter().fold(T::zero(), |m, c| m.max(c.abs()));
    let bound = |r: T| {
        let r4 = r.abs().powi(4);
        tol * cmax * T::one().max(r4)
    };
    let roots = roots_rec(p, tol);
    let mut out: Vec<T> = roots
        .into_iter()
        .filter(|&r| horner(p, r).abs() <= bound(r))
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out.dedup_by(|a, b| (*a - *b).abs() <= T::lit(64.0) * T::epsilon() * T::one().max(b.abs()));
    Ok(out)
}

fn horner<T: Real>(p: &[T], x: T) -> T {
    p.iter().fold(T::zero(), |acc, &c| acc * x + c)
}

fn derivative<T: Real>(p: &[T]) -> Vec<T> {
    let n = p.len() - 1;
    p[..n]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * T::from_usize(n - i).unwrap())
        .collect()
}

/// `p` has a nonzero leading coefficient.
fn roots_rec<T: Real>(p: &[T], tol: T) -> Vec<T> {
    match p.len() {
        0 | 1 => Vec::new(),
        2 => vec![-p[1] / p[0]],
        3 => quadratic(p[0], p[1], p[2], tol),
        _ => {
            let crit = roots_rec(&derivative(p), tol);
            // Cauchy bound on root magnitudes
            let lead = p[0].abs();
            let cauchy = T::one()
                + p[1..]
                    .iter()
                    .fold(T::zero(), |m, c| m.max(c.abs() / lead));
            let mut knots = Vec::with_capacity(crit.len() + 2);
            knots.push(-cauchy);
            knots.extend(crit.iter().copied().filter(|c| c.abs() < cauchy));
            knots.push(cauchy);

            let cmax = p.iter().fold(T::zero(), |m, c| m.max(c.abs()));
            let mut roots = Vec::new();
            for w in knots.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                let (flo, fhi) = (horner(p, lo), horner(p, hi));
                if flo == T::zero() {
                    roots.push(lo);
                } else if flo.signum() != fhi.signum() && fhi != T::zero() {
                    roots.push(bracketed(p, lo, hi, flo));
                }
            }
            if horner(p, cauchy) == T::zero() {
                roots.push(cauchy);
            }
            // even-multiplicity roots show up as critical points touching zero
            for &c in &crit {
                let scale = tol * cmax * T::one().max(c.abs().powi(p.len() as i32 - 1));
                if horner(p, c).abs() <= scale {
                    roots.push(c);
                }
            }
            roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
            roots
        }
    }
}

fn quadratic<T: Real>(a: T, b: T, c: T, tol: T) -> Vec<T> {
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    let disc = b * b - four * a * c;
    let scale = tol * (b * b).max((four * a * c).abs());
    if disc < T::zero() {
        if -disc <= scale {
            return vec![-b / (two * a)];
        }
        return Vec::new();
    }
    if disc <= scale {
        return vec![-b / (two * a)];
    }
    let sq = disc.sqrt();
    let q = -(b + b.signum() * sq) / two;
    let mut r = if q == T::zero() {
        vec![sq / (two * a), -sq / (two * a)]
    } else {
        vec![q / a, c / q]
    };
    r.sort_by(|x, y| x.partial_cmp(y).unwrap());
    r
}

/// Root of `p` in `[lo, hi]` where `p(lo)` and `p(hi)` differ in sign.
fn bracketed<T: Real>(p: &[T], mut lo: T, mut hi: T, flo: T) -> T {
    let dp = derivative(p);
    let neg_lo = flo < T::zero();
    let half = T::lit(0.5);
    let mut x = half * (lo + hi);
    for _ in 0..200 {
        let fx = horner(p, x);
        if fx == T::zero() {
            return x;
        }
        if (fx < T::zero()) == neg_lo {
            lo = x;
        } else {
            hi = x;
        }
        let dfx = horner(&dp, x);
        let newton = x - fx / dfx;
        let next = if dfx != T::zero() && newton > lo && newton < hi {
            newton
        } else {
            half * (lo + hi)
        };
        if next == x || next <= lo || next >= hi {
            let mid = half * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            x = mid;
        } else {
            x = next;
        }
        if hi - lo <= T::epsilon() * T::lit(2.0) * x.abs().max(T::min_positive_value()) {
            break;
        }
    }
    // pick the endpoint or iterate with the smallest residual
    [x, lo, hi]
        .into_iter()
        .min_by(|a, b| {
            horner(p, *a)
                .abs()
                .partial_cmp(&horner(p, *b).abs())
                .unwrap()
        })
        .unwrap()
}
