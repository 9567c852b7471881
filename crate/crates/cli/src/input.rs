//! On-disk and over-the-wire JSON form of a spline spec.

use std::collections::BTreeMap;

use ballkurve::{
    curvature_from_signed_radius, normalize, DG2SplineSpec, DKnotSpec, DPoint2, DSolverConfig,
    DVec2, Sign, SignedRadius,
};
use serde::{Deserialize, Serialize};

use crate::api::ApiError;

/// Tangents farther than this from unit length are renormalized with a warning.
pub const RENORMALIZE_WARN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecFile {
    pub knots: Vec<KnotEntry>,
    /// Segment index (as a decimal string key) to candidate index.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub root_choice: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotEntry {
    pub point: [f64; 2],
    pub tangent: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signed_radius: Option<SignedRadiusEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedRadiusEntry {
    pub sign: f64,
    pub radius: f64,
}

/// Optional solver overrides accepted next to the spec fields of a request.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SolverOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_max: Option<f64>,
}

impl SolverOverrides {
    pub fn config(&self) -> Result<DSolverConfig, ApiError> {
        let mut cfg = DSolverConfig::default();
        if let Some(t) = self.tol_residual {
            cfg.residual_tol = t;
        }
        if let Some(a) = self.alpha_max {
            cfg.alpha_max = a;
        }
        cfg.validate()
            .map_err(|e| ApiError::invalid_config(e.to_string()))?;
        Ok(cfg)
    }
}

/// A spec converted to the kernel type, with any load-time warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedSpec {
    pub spec: DG2SplineSpec,
    pub warnings: Vec<String>,
}

impl SpecFile {
    pub fn from_json(text: &str) -> Result<Self, ApiError> {
        serde_json::from_str(text).map_err(ApiError::from_json)
    }

    pub fn load(&self) -> Result<LoadedSpec, ApiError> {
        if self.knots.len() < 2 {
            return Err(ApiError::invalid_spec(format!(
                "a spline needs at least 2 knots, got {}",
                self.knots.len()
            )));
        }
        let mut warnings = Vec::new();
        let mut knots = Vec::with_capacity(self.knots.len());
        for (i, k) in self.knots.iter().enumerate() {
            let bad = |what: String| ApiError::invalid_spec(format!("knot {i}: {what}"));
            let point = DPoint2::new(k.point[0], k.point[1]);
            if !point.is_finite() {
                return Err(bad("point is not finite".into()));
            }
            let raw = DVec2::new(k.tangent[0], k.tangent[1]);
            let tangent = normalize(raw).map_err(|e| bad(format!("tangent: {e}")))?;
            let norm = raw.norm();
            if (norm - 1.0).abs() > RENORMALIZE_WARN {
                warnings.push(format!("knot {i}: tangent had length {norm}, renormalized"));
            }
            let kappa = match (k.kappa, k.signed_radius) {
                (Some(kappa), None) if kappa.is_finite() => kappa,
                (Some(_), None) => return Err(bad("kappa is not finite".into())),
                (None, Some(sr)) => {
                    let sign = if sr.sign == 1.0 {
                        Sign::Positive
                    } else if sr.sign == -1.0 {
                        Sign::Negative
                    } else {
                        return Err(bad(format!("signed_radius.sign must be 1 or -1, got {}", sr.sign)));
                    };
                    SignedRadius::new(sign, sr.radius)
                        .and_then(|sr| curvature_from_signed_radius(&sr))
                        .map_err(|e| bad(e.to_string()))?
                }
                (Some(_), Some(_)) => return Err(bad("give either kappa or signed_radius, not both".into())),
                (None, None) => return Err(bad("missing kappa or signed_radius".into())),
            };
            knots.push(DKnotSpec::new(point, tangent, kappa));
        }
        let mut spec = DG2SplineSpec::new(knots);
        for (key, &cand) in &self.root_choice {
            let seg = key.parse::<usize>().map_err(|_| {
                ApiError::invalid_spec(format!("root_choice key {key:?} is not a segment index"))
            })?;
            spec.root_choice.insert(seg, cand);
        }
        spec.validate().map_err(|e| ApiError::invalid_spec(e.to_string()))?;
        Ok(LoadedSpec { spec, warnings })
    }
}
