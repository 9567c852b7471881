//! Solving the two end-curvature equations for the shape parameters.
//!
//! With `a = −2·(T₀ × T₁)`, `b = 3·(T₀ × Δ)` and `d = −3·(T₁ × Δ)`, where
//! `Δ` is the chord, the end curvatures of a segment are
//!
//! ```text
//! κ(0) = α²(a + bβ) / (2β)        κ(1) = β²(a + dα) / (2α)
//! ```
//!
//! Eliminating `β = aα² / (2κ₀ − bα²)` from the first equation turns the
//! pair into a quartic in `α`. The degenerate configurations (`a = 0`, a
//! zero target curvature, a straight segment) have closed forms. Every
//! candidate, whatever branch produced it, is checked against both
//! original equations before it is returned.

use serde::Serialize;

use crate::ball::{kappa_end, kappa_start, G2EndData, SegmentParams};
use crate::error::{Error, Result};
use crate::geom::cross2;
use crate::roots::{real_roots, Quartic};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SegmentCoefficients<T> {
    pub a: T,
    pub b: T,
    pub d: T,
}

/// One feasible `(α, β)` with the absolute residuals of both curvature equations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CandidatePair<T> {
    pub alpha: T,
    pub beta: T,
    pub residual0: T,
    pub residual1: T,
    /// Set when the equations leave at least one parameter free and the
    /// returned value is the canonical `2/L` choice.
    pub underdetermined: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig<T> {
    pub alpha_max: T,
    /// Residual bound relative to `1 + |κ|`.
    pub residual_tol: T,
    pub root_tol: T,
}

impl<T: Real> Default for SolverConfig<T> {
    fn default() -> Self {
        Self {
            alpha_max: T::lit(1e6),
            residual_tol: T::lit(1e-9),
            root_tol: T::lit(1e-12),
        }
    }
}

impl<T: Real> SolverConfig<T> {
    pub fn validate(&self) -> Result<()> {
        let ok = |v: T| v > T::zero() && v.is_finite();
        if ok(self.alpha_max) && ok(self.residual_tol) && ok(self.root_tol) {
            Ok(())
        } else {
            Err(Error::InvalidSpec(
                "solver tolerances and alpha_max must be positive".into(),
            ))
        }
    }
}

impl<T: Real> CandidatePair<T> {
    pub fn params(&self) -> SegmentParams<T> {
        SegmentParams::new(self.alpha, self.beta).expect("candidate parameters are positive")
    }
}

pub fn coefficients<T: Real>(data: &G2EndData<T>) -> SegmentCoefficients<T> {
    let chord = data.chord();
    let (m0, n0) = (data.t_start.m(), data.t_start.n());
    let (m1, n1) = (data.t_end.m(), data.t_end.n());
    SegmentCoefficients {
        a: T::lit(2.0) * (m1 * n0 - m0 * n1),
        b: T::lit(3.0) * cross2(data.t_start.to_vec(), chord),
        d: -T::lit(3.0) * cross2(data.t_end.to_vec(), chord),
    }
}

/// Quartic in `α` obtained by eliminating `β`; only valid for `a ≠ 0`, `κ₀ ≠ 0`.
pub fn build_quartic<T: Real>(co: &SegmentCoefficients<T>, k0: T, k1: T) -> Result<Quartic<T>> {
    if co.a == T::zero() {
        return Err(Error::DegenerateBranch("a = 0"));
    }
    if k0 == T::zero() {
        return Err(Error::DegenerateBranch("start curvature is zero"));
    }
    let SegmentCoefficients { a, b, d } = *co;
    let two = T::lit(2.0);
    let eight = T::lit(8.0);
    Ok(Quartic::new(
        two * k1 * b * b - a * a * d,
        -(a * a * a),
        -eight * k0 * k1 * b,
        T::zero(),
        eight * k0 * k0 * k1,
    ))
}

/// Absolute deviations of the closed-form end curvatures from the targets in `data`.
pub fn residuals<T: Real>(data: &G2EndData<T>, alpha: T, beta: T) -> Result<(T, T)> {
    let params = SegmentParams::new(alpha, beta)?;
    Ok((
        (kappa_start(data, &params) - data.kappa_start).abs(),
        (kappa_end(data, &params) - data.kappa_end).abs(),
    ))
}

/// All verified positive `(α, β)` pairs, ascending in `α`.
pub fn solve_pairs<T: Real>(
    data: &G2EndData<T>,
    config: &SolverConfig<T>,
) -> Result<Vec<CandidatePair<T>>> {
    config.validate()?;
    let co = coefficients(data);
    let raw = raw_candidates(data, &co, config)?;
    let total = raw.len();
    let mut out: Vec<CandidatePair<T>> = Vec::new();
    for (alpha, beta, underdetermined) in raw {
        let (alpha, beta) = if underdetermined {
            (alpha, beta)
        } else {
            polish(&co, data.kappa_start, data.kappa_end, alpha, beta)
        };
        if !(alpha > T::zero() && beta > T::zero() && alpha <= config.alpha_max && beta <= config.alpha_max)
        {
            continue;
        }
        let (r0, r1) = residuals(data, alpha, beta)?;
        let tol0 = config.residual_tol * (T::one() + data.kappa_start.abs());
        let tol1 = config.residual_tol * (T::one() + data.kappa_end.abs());
        if !(r0 <= tol0 && r1 <= tol1) {
            continue;
        }
        let dup = out.iter().any(|c| {
            rel_close(c.alpha, alpha, T::lit(1e-9)) && rel_close(c.beta, beta, T::lit(1e-9))
        });
        if !dup {
            out.push(CandidatePair {
                alpha,
                beta,
                residual0: r0,
                residual1: r1,
                underdetermined,
            });
        }
    }
    if out.is_empty() {
        return Err(Error::NoFeasiblePair { rejected: total });
    }
    out.sort_by(|x, y| x.alpha.partial_cmp(&y.alpha).unwrap());
    Ok(out)
}

fn rel_close<T: Real>(x: T, y: T, tol: T) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs())
}

/// Unverified `(α, β, underdetermined)` triples from the applicable branch.
fn raw_candidates<T: Real>(
    data: &G2EndData<T>,
    co: &SegmentCoefficients<T>,
    config: &SolverConfig<T>,
) -> Result<Vec<(T, T, bool)>> {
    let len = data.chord_length();
    let eps = T::NEGLIGIBLE;
    let two = T::lit(2.0);
    let (k0, k1) = (data.kappa_start, data.kappa_end);
    let SegmentCoefficients { a, b, d } = *co;

    let a_zero = a.abs() <= eps * two;
    let b_zero = b.abs() <= eps * T::lit(3.0) * len;
    let d_zero = d.abs() <= eps * T::lit(3.0) * len;
    let k0_zero = (k0 * len).abs() <= eps;
    let k1_zero = (k1 * len).abs() <= eps;
    let free = two / len;
    let sqrt_ratio = |num: T, den: T| {
        let r = num / den;
        if r > T::zero() {
            Some(r.sqrt())
        } else {
            None
        }
    };

    let mut out = Vec::new();
    if k0_zero && k1_zero && a_zero && b_zero && d_zero {
        out.push((free, free, true));
    } else if k0_zero {
        // a + bβ = 0
        if !b_zero {
            let beta = -a / b;
            let den = two * k1 - beta * beta * d;
            if beta > T::zero() && den != T::zero() {
                out.push((beta * beta * a / den, beta, false));
            }
        } else if a_zero {
            // start equation holds for every pair; β from the end equation
            if !d_zero {
                if let Some(beta) = sqrt_ratio(two * k1, d) {
                    out.push((free, beta, true));
                }
            }
        }
    } else if k1_zero {
        // a + dα = 0
        if !d_zero {
            let alpha = -a / d;
            let den = two * k0 - alpha * alpha * b;
            if alpha > T::zero() && den != T::zero() {
                out.push((alpha, alpha * alpha * a / den, false));
            }
        } else if a_zero && !b_zero {
            if let Some(alpha) = sqrt_ratio(two * k0, b) {
                out.push((alpha, free, true));
            }
        }
    } else if a_zero {
        if !b_zero && !d_zero {
            if let (Some(alpha), Some(beta)) = (sqrt_ratio(two * k0, b), sqrt_ratio(two * k1, d)) {
                out.push((alpha, beta, false));
            }
        }
    } else {
        let quartic = build_quartic(co, k0, k1)?;
        for alpha in real_roots(&quartic, config.root_tol)? {
            if !(alpha > T::zero()) {
                continue;
            }
            let den = two * k0 - b * alpha * alpha;
            if den.abs() <= T::lit(1e-12) * (two * k0).abs() {
                continue;
            }
            out.push((alpha, a * alpha * alpha / den, false));
        }
    }
    Ok(out)
}

/// A few Newton steps on the polynomial form of both equations, kept only while they help.
fn polish<T: Real>(co: &SegmentCoefficients<T>, k0: T, k1: T, alpha: T, beta: T) -> (T, T) {
    let SegmentCoefficients { a, b, d } = *co;
    let two = T::lit(2.0);
    let f = |al: T, be: T| {
        (
            al * al * (a + b * be) - two * k0 * be,
            be * be * (a + d * al) - two * k1 * al,
        )
    };
    let norm = |(x, y): (T, T)| x.abs().max(y.abs());
    let (mut al, mut be) = (alpha, beta);
    if !(al > T::zero() && be > T::zero() && al.is_finite() && be.is_finite()) {
        return (alpha, beta);
    }
    let mut fx = f(al, be);
    for _ in 0..6 {
        let j00 = two * al * (a + b * be);
        let j01 = al * al * b - two * k0;
        let j10 = be * be * d - two * k1;
        let j11 = two * be * (a + d * al);
        let det = j00 * j11 - j01 * j10;
        if det == T::zero() || !det.is_finite() {
            break;
        }
        let da = (fx.0 * j11 - fx.1 * j01) / det;
        let db = (j00 * fx.1 - j10 * fx.0) / det;
        let (na, nb) = (al - da, be - db);
        if !(na > T::zero() && nb > T::zero()) {
            break;
        }
        let nf = f(na, nb);
        if norm(nf) < norm(fx) {
            al = na;
            be = nb;
            fx = nf;
        } else {
            break;
        }
    }
    (al, be)
}

/// Index of the candidate whose end speeds `2/α`, `2/β` are closest to the chord length.
pub fn select_default_index<T: Real>(candidates: &[CandidatePair<T>], chord: T) -> Result<usize> {
    let half = chord / T::lit(2.0);
    let score = |c: &CandidatePair<T>| {
        let u = c.alpha * half - T::one();
        let v = c.beta * half - T::one();
        u * u + v * v
    };
    let mut best: Option<(usize, T)> = None;
    for (i, c) in candidates.iter().enumerate() {
        let s = score(c);
        best = match best {
            None => Some((i, s)),
            Some((j, bs)) => {
                if s < bs || (s == bs && c.alpha < candidates[j].alpha) {
                    Some((i, s))
                } else {
                    Some((j, bs))
                }
            }
        };
    }
    best.map(|(i, _)| i).ok_or(Error::EmptyCandidates)
}

pub fn select_default<T: Real>(candidates: &[CandidatePair<T>], chord: T) -> Result<CandidatePair<T>> {
    select_default_index(candidates, chord).map(|i| candidates[i])
}
