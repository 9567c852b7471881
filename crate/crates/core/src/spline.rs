//! Chaining Ball segments into a G² spline over a knot sequence.
//!
//! Every knot carries one signed curvature. It is the end target of the
//! segment arriving at the knot and the start target of the segment
//! leaving it, so curvature inheritance across joints holds by
//! construction. Each segment depends only on its two knots, which makes
//! edits local.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::ball::{control_points_from_g2, BallSegment, G2EndData, SegmentParams};
use crate::error::{Error, Result};
use crate::geom::{Point2, UnitVec2};
use crate::scalar::Real;
use crate::solver::{
    coefficients, select_default_index, solve_pairs, CandidatePair, SegmentCoefficients,
    SolverConfig,
};

/// An interpolation point with its unit tangent and signed curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnotSpec<T> {
    pub point: Point2<T>,
    pub tangent: UnitVec2<T>,
    pub kappa: T,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct G2SplineSpec<T> {
    pub knots: Vec<KnotSpec<T>>,
    /// Per-segment candidate index overriding the default selection.
    pub root_choice: BTreeMap<usize, usize>,
}

/// One solved segment together with the solver output it was chosen from.
#[derive(Debug, Clone, PartialEq)]
pub struct SolvedSegment<T> {
    pub ball: BallSegment<T>,
    pub params: SegmentParams<T>,
    pub chosen: CandidatePair<T>,
    pub chosen_index: usize,
    pub candidates: Vec<CandidatePair<T>>,
    pub coefficients: SegmentCoefficients<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct G2Spline<T> {
    pub segments: Vec<SolvedSegment<T>>,
    pub spec: G2SplineSpec<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JointReport<T> {
    /// Index of the knot shared by segments `joint − 1` and `joint`.
    pub joint: usize,
    pub position_gap: T,
    pub tangent_gap: T,
    pub curvature_gap: T,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct G2Report<T> {
    pub joints: Vec<JointReport<T>>,
    pub pass: bool,
}

impl<T: Real> KnotSpec<T> {
    pub fn new(point: Point2<T>, tangent: UnitVec2<T>, kappa: T) -> Self {
        Self {
            point,
            tangent,
            kappa,
        }
    }
}

impl<T: Real> G2SplineSpec<T> {
    pub fn new(knots: Vec<KnotSpec<T>>) -> Self {
        Self {
            knots,
            root_choice: BTreeMap::new(),
        }
    }

    pub fn segment_count(&self) -> usize {
        self.knots.len().saturating_sub(1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.knots.len() < 2 {
            return Err(Error::InvalidSpec(format!(
                "need at least 2 knots, got {}",
                self.knots.len()
            )));
        }
        for (i, k) in self.knots.iter().enumerate() {
            if !(k.point.is_finite() && k.kappa.is_finite()) {
                return Err(Error::InvalidSpec(format!("knot {i} is not finite")));
            }
        }
        for (i, w) in self.knots.windows(2).enumerate() {
            if w[0].point.distance(w[1].point) <= T::NEGLIGIBLE {
                return Err(Error::InvalidSpec(format!(
                    "knots {i} and {} coincide",
                    i + 1
                )));
            }
        }
        if let Some((&seg, _)) = self
            .root_choice
            .iter()
            .find(|(&seg, _)| seg >= self.segment_count())
        {
            return Err(Error::InvalidSpec(format!(
                "root_choice refers to segment {seg}, spline has {}",
                self.segment_count()
            )));
        }
        Ok(())
    }

    /// End data of segment `i`.
    pub fn end_data(&self, i: usize) -> Result<G2EndData<T>> {
        let (k0, k1) = (&self.knots[i], &self.knots[i + 1]);
        G2EndData::new(k0.point, k1.point, k0.tangent, k1.tangent, k0.kappa, k1.kappa)
    }
}

fn solve_segment<T: Real>(
    spec: &G2SplineSpec<T>,
    i: usize,
    config: &SolverConfig<T>,
) -> Result<SolvedSegment<T>> {
    let wrap = |e: Error| Error::InfeasibleSegment {
        index: i,
        source: Box::new(e),
    };
    let data = spec.end_data(i).map_err(wrap)?;
    let candidates = solve_pairs(&data, config).map_err(wrap)?;
    let chosen_index = match spec.root_choice.get(&i) {
        Some(&c) if c < candidates.len() => c,
        Some(&c) => {
            return Err(Error::InvalidSpec(format!(
                "root_choice {c} for segment {i} out of range ({} candidates)",
                candidates.len()
            )))
        }
        None => select_default_index(&candidates, data.chord_length())?,
    };
    let chosen = candidates[chosen_index];
    let params = chosen.params();
    Ok(SolvedSegment {
        ball: control_points_from_g2(&data, &params),
        params,
        chosen,
        chosen_index,
        candidates,
        coefficients: coefficients(&data),
    })
}

/// Solves every segment of `spec` in order.
pub fn build_spline<T: Real>(spec: &G2SplineSpec<T>, config: &SolverConfig<T>) -> Result<G2Spline<T>> {
    spec.validate()?;
    config.validate()?;
    let segments = (0..spec.segment_count())
        .map(|i| solve_segment(spec, i, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(G2Spline {
        segments,
        spec: spec.clone(),
    })
}

impl<T: Real> G2Spline<T> {
    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn balls(&self) -> impl Iterator<Item = &BallSegment<T>> {
        self.segments.iter().map(|s| &s.ball)
    }

    /// Replaces knot `j` and re-solves only the segments touching it.
    pub fn with_knot(&self, j: usize, knot: KnotSpec<T>, config: &SolverConfig<T>) -> Result<Self> {
        if j >= self.spec.knots.len() {
            return Err(Error::InvalidSpec(format!("knot index {j} out of range")));
        }
        let mut spec = self.spec.clone();
        spec.knots[j] = knot;
        // candidate lists of the touched segments change, so stale choices go
        spec.root_choice.remove(&j);
        if j > 0 {
            spec.root_choice.remove(&(j - 1));
        }
        spec.validate()?;
        let mut segments = self.segments.clone();
        for i in j.saturating_sub(1)..=j {
            if i < segments.len() {
                segments[i] = solve_segment(&spec, i, config)?;
            }
        }
        Ok(Self { segments, spec })
    }

    /// Same spec, with segment `segment` switched to candidate `candidate`.
    pub fn with_choice(&self, segment: usize, candidate: usize) -> Result<Self> {
        let seg = self
            .segments
            .get(segment)
            .ok_or_else(|| Error::InvalidSpec(format!("segment {segment} out of range")))?;
        let chosen = *seg.candidates.get(candidate).ok_or_else(|| {
            Error::InvalidSpec(format!("candidate {candidate} out of range for segment {segment}"))
        })?;
        let data = self.spec.end_data(segment)?;
        let params = chosen.params();
        let mut out = self.clone();
        out.spec.root_choice.insert(segment, candidate);
        out.segments[segment] = SolvedSegment {
            ball: control_points_from_g2(&data, &params),
            params,
            chosen,
            chosen_index: candidate,
            ..seg.clone()
        };
        Ok(out)
    }
}

/// Checks position, tangent and curvature agreement at every interior joint.
///
/// `tol_kappa` is relative to `1 + |κ|` at the joint.
pub fn verify_g2<T: Real>(spline: &G2Spline<T>, tol_tangent: T, tol_kappa: T) -> G2Report<T> {
    let mut joints = Vec::new();
    for (i, w) in spline.segments.windows(2).enumerate() {
        let (left, right) = (&w[0].ball, &w[1].ball);
        let position_gap = left.eval_unchecked(T::one()).distance(right.eval_unchecked(T::zero()));
        let tangent_gap = match (left.unit_tangent(T::one()), right.unit_tangent(T::zero())) {
            (Ok(a), Ok(b)) => (a.to_vec() - b.to_vec()).norm(),
            _ => T::infinity(),
        };
        let (curvature_gap, scale) = match (left.curvature(T::one()), right.curvature(T::zero())) {
            (Ok(a), Ok(b)) => ((a - b).abs(), T::one() + a.abs().max(b.abs())),
            _ => (T::infinity(), T::one()),
        };
        let pass = position_gap == T::zero()
            && tangent_gap <= tol_tangent
            && curvature_gap <= tol_kappa * scale;
        joints.push(JointReport {
            joint: i + 1,
            position_gap,
            tangent_gap,
            curvature_gap,
            pass,
        });
    }
    let pass = joints.iter().all(|j| j.pass);
    G2Report { joints, pass }
}

/// Default tolerances for [`verify_g2`]: tangent gap 1e-9, relative curvature gap 1e-6.
pub fn verify_g2_default<T: Real>(spline: &G2Spline<T>) -> G2Report<T> {
    verify_g2(spline, T::lit(1e-9), T::lit(1e-6))
}

/// Uniform `(global_t, κ)` samples, both one-sided limits included at joints.
pub fn curvature_profile<T: Real>(spline: &G2Spline<T>, samples_per_segment: usize) -> Result<Vec<(T, T)>> {
    if samples_per_segment < 2 {
        return Err(Error::InvalidConfig(
            "samples_per_segment must be at least 2".into(),
        ));
    }
    let count = T::from_usize(spline.segment_count()).unwrap();
    let last = T::from_usize(samples_per_segment - 1).unwrap();
    let mut out = Vec::with_capacity(samples_per_segment * spline.segment_count());
    for (i, seg) in spline.segments.iter().enumerate() {
        let offset = T::from_usize(i).unwrap();
        for k in 0..samples_per_segment {
            let t = T::from_usize(k).unwrap() / last;
            let kappa = seg.ball.curvature(t).map_err(|_| Error::SingularSample {
                segment: i,
                t: t.to_f64().unwrap_or(f64::NAN),
            })?;
            out.push(((offset + t) / count, kappa));
        }
    }
    Ok(out)
}
