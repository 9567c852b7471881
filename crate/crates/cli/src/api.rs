//! Operations shared by the command line and the HTTP service.

use std::collections::BTreeMap;

use ballkurve::{
    build_spline, revolve_obj, sample, to_svg, verify_g2_default, DCandidatePair, DG2Report,
    DG2Spline, DSolverConfig, Error, PolylineSample, RevolveConfig, SegmentCoefficients,
    SvgOptions,
};
use serde::{Deserialize, Serialize};

use crate::input::{LoadedSpec, SolverOverrides, SpecFile};

/// How a failure is reported: process exit code and HTTP status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureClass {
    /// Unparseable JSON.
    Syntax,
    /// Parseable but not a valid request.
    Malformed,
    /// Valid input the geometry cannot satisfy.
    Geometric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segment: Option<usize>,
    pub message: String,
}

/// `{"error": {...}}` envelope.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorPayload {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApiError {
    pub class: FailureClass,
    pub body: ErrorBody,
}

impl ApiError {
    fn new(class: FailureClass, code: &str, segment: Option<usize>, message: String) -> Self {
        Self {
            class,
            body: ErrorBody {
                code: code.into(),
                segment,
                message,
            },
        }
    }

    pub fn invalid_spec(message: String) -> Self {
        Self::new(FailureClass::Malformed, "invalid_spec", None, message)
    }

    pub fn invalid_config(message: String) -> Self {
        Self::new(FailureClass::Malformed, "invalid_config", None, message)
    }

    pub fn io(message: String) -> Self {
        Self::new(FailureClass::Malformed, "io", None, message)
    }

    pub fn from_json(e: serde_json::Error) -> Self {
        if e.is_data() {
            Self::invalid_spec(e.to_string())
        } else {
            Self::new(FailureClass::Syntax, "invalid_json", None, e.to_string())
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.class {
            FailureClass::Syntax | FailureClass::Malformed => 1,
            FailureClass::Geometric => 2,
        }
    }

    pub fn http_status(&self) -> u16 {
        match self.class {
            FailureClass::Syntax => 400,
            FailureClass::Malformed | FailureClass::Geometric => 422,
        }
    }

    pub fn payload(&self) -> ErrorPayload {
        ErrorPayload {
            error: self.body.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.payload()).expect("error payload serializes")
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::InfeasibleSegment { index, .. } => {
                Self::new(FailureClass::Geometric, "infeasible_segment", Some(index), message)
            }
            Error::ProfileCrossesAxis { .. } => {
                Self::new(FailureClass::Geometric, "profile_crosses_axis", None, message)
            }
            Error::SingularSample { segment, .. } => {
                Self::new(FailureClass::Geometric, "singular_sample", Some(segment), message)
            }
            Error::InvalidConfig(_) => Self::invalid_config(message),
            Error::InvalidSpec(_)
            | Error::NotUnit { .. }
            | Error::ZeroVector
            | Error::InvalidRadius { .. }
            | Error::DegenerateChord
            | Error::NonFinite => Self::invalid_spec(message),
            _ => Self::new(FailureClass::Geometric, "solver_error", None, message),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SegmentReport {
    pub candidates: Vec<DCandidatePair>,
    pub chosen: usize,
    pub coefficients: SegmentCoefficients<f64>,
    pub alpha: f64,
    pub beta: f64,
    pub control_points: [[f64; 2]; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveResponse {
    pub segments: Vec<SegmentReport>,
    /// Chosen candidate per segment, in the spec's `root_choice` form.
    pub root_choice: BTreeMap<usize, usize>,
    pub report: DG2Report,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl SolveResponse {
    pub fn new(spline: &DG2Spline, warnings: Vec<String>) -> Self {
        let segments = spline
            .segments
            .iter()
            .map(|s| SegmentReport {
                candidates: s.candidates.clone(),
                chosen: s.chosen_index,
                coefficients: s.coefficients,
                alpha: s.params.alpha(),
                beta: s.params.beta(),
                control_points: s.ball.control_points().map(|p| [p.x, p.y]),
            })
            .collect();
        Self {
            segments,
            root_choice: spline
                .segments
                .iter()
                .enumerate()
                .map(|(i, s)| (i, s.chosen_index))
                .collect(),
            report: verify_g2_default(spline),
            warnings,
        }
    }
}

pub fn solve(loaded: &LoadedSpec, cfg: &DSolverConfig) -> Result<DG2Spline, ApiError> {
    Ok(build_spline(&loaded.spec, cfg)?)
}

/// Parses, loads and solves a spec in one step.
pub fn solve_file(file: &SpecFile, overrides: &SolverOverrides) -> Result<(DG2Spline, Vec<String>), ApiError> {
    let cfg = overrides.config()?;
    let loaded = file.load()?;
    let spline = solve(&loaded, &cfg)?;
    Ok((spline, loaded.warnings))
}

pub fn sample_spline(spline: &DG2Spline, n: usize) -> Result<PolylineSample, ApiError> {
    Ok(sample(spline, n)?)
}

pub fn render_svg(spline: &DG2Spline, opts: &SvgOptions) -> Result<String, ApiError> {
    Ok(to_svg(spline, opts)?)
}

pub fn render_obj(spline: &DG2Spline, cfg: &RevolveConfig) -> Result<String, ApiError> {
    Ok(revolve_obj(spline, cfg)?)
}

pub fn svg_options(comb: bool, comb_scale: Option<f64>, samples: Option<usize>) -> Result<SvgOptions, ApiError> {
    let d = SvgOptions::default();
    let opts = SvgOptions {
        comb,
        comb_scale: comb_scale.unwrap_or(d.comb_scale),
        comb_density: samples.unwrap_or(d.comb_density),
    };
    if !opts.comb_scale.is_finite() || opts.comb_density < 2 {
        return Err(ApiError::invalid_config(
            "comb scale must be finite and samples at least 2".into(),
        ));
    }
    Ok(opts)
}

pub fn revolve_config(steps: Option<usize>, samples: Option<usize>) -> Result<RevolveConfig, ApiError> {
    let cfg = RevolveConfig {
        angular_steps: steps.unwrap_or(64),
        samples_per_segment: samples.unwrap_or(10),
    };
    cfg.validate()?;
    Ok(cfg)
}
