//! Text output: sampled polylines, SVG with an optional curvature comb, and
//! a quad mesh of the profile revolved about the y axis.
//!
//! All numbers go through [`fmt_num`], so output is byte-stable for a given
//! spline.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::spline::G2Spline;

/// Curve samples with curvature and global parameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolylineSample {
    pub points: Vec<[f64; 2]>,
    pub kappa: Vec<f64>,
    pub global_t: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RevolveConfig {
    pub angular_steps: usize,
    pub samples_per_segment: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    pub comb: bool,
    pub comb_scale: f64,
    pub comb_density: usize,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            comb: false,
            comb_scale: 0.5,
            comb_density: 32,
        }
    }
}

impl RevolveConfig {
    pub fn validate(&self) -> Result<()> {
        if self.angular_steps < 3 {
            return Err(Error::InvalidConfig(format!(
                "angular_steps must be at least 3, got {}",
                self.angular_steps
            )));
        }
        if self.samples_per_segment < 2 {
            return Err(Error::InvalidConfig(format!(
                "samples_per_segment must be at least 2, got {}",
                self.samples_per_segment
            )));
        }
        Ok(())
    }
}

/// Formats `v` with 9 significant digits in plain decimal notation,
/// trailing zeros removed.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Uniform samples per segment; each interior joint appears once.
pub fn sample(spline: &G2Spline<f64>, n_per_segment: usize) -> Result<PolylineSample> {
    if n_per_segment < 2 {
        return Err(Error::InvalidConfig(
            "n_per_segment must be at least 2".into(),
        ));
    }
    let count = spline.segment_count() as f64;
    let last = (n_per_segment - 1) as f64;
    let mut out = PolylineSample {
        points: Vec::new(),
        kappa: Vec::new(),
        global_t: Vec::new(),
    };
    for (i, seg) in spline.segments.iter().enumerate() {
        let first = if i == 0 { 0 } else { 1 };
        for k in first..n_per_segment {
            let t = k as f64 / last;
            let p = seg.ball.eval(t)?;
            let kappa = seg.ball.curvature(t).map_err(|_| Error::SingularSample { segment: i, t })?;
            out.points.push([p.x, p.y]);
            out.kappa.push(kappa);
            out.global_t.push((i as f64 + t) / count);
        }
    }
    Ok(out)
}

fn pt(p: Point2<f64>) -> String {
    format!("{} {}", fmt_num(p.x), fmt_num(p.y))
}

/// SVG document with one exact cubic path per segment.
///
/// Coordinates stay in model space; a top-level `scale(1,-1)` puts +y up.
/// With the comb enabled, each tooth runs from `p(t)` to
/// `p(t) + comb_scale·κ(t)·n(t)` where `n` is the left unit normal.
pub fn to_svg(spline: &G2Spline<f64>, opts: &SvgOptions) -> Result<String> {
    if opts.comb && opts.comb_density < 2 {
        return Err(Error::InvalidConfig("comb_density must be at least 2".into()));
    }
    let mut teeth: Vec<(Point2<f64>, Point2<f64>)> = Vec::new();
    if opts.comb {
        let last = (opts.comb_density - 1) as f64;
        for (i, seg) in spline.segments.iter().enumerate() {
            for k in 0..opts.comb_density {
                let t = k as f64 / last;
                let err = |_| Error::SingularSample { segment: i, t };
                let p = seg.ball.eval(t)?;
                let kappa = seg.ball.curvature(t).map_err(err)?;
                let normal = seg.ball.unit_tangent(t).map_err(err)?.to_vec().perp();
                teeth.push((p, p + normal * (opts.comb_scale * kappa)));
            }
        }
    }

    let mut min = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |p: Point2<f64>| {
        min = Point2::new(min.x.min(p.x), min.y.min(p.y));
        max = Point2::new(max.x.max(p.x), max.y.max(p.y));
    };
    for seg in spline.balls() {
        seg.to_bernstein().into_iter().for_each(&mut grow);
    }
    for &(a, b) in &teeth {
        grow(a);
        grow(b);
    }
    let diag = min.distance(max).max(1e-9);
    let margin = 0.05 * diag;
    let stroke = 0.004 * diag;
    let (x0, y0) = (min.x - margin, -(max.y + margin));
    let (w, h) = (max.x - min.x + 2.0 * margin, max.y - min.y + 2.0 * margin);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        fmt_num(x0),
        fmt_num(y0),
        fmt_num(w),
        fmt_num(h)
    );
    s.push_str("<g transform=\"scale(1,-1)\">\n");
    if !teeth.is_empty() {
        let _ = writeln!(
            s,
            "<g class=\"comb\" stroke=\"#d05030\" stroke-width=\"{}\">",
            fmt_num(0.5 * stroke)
        );
        for (a, b) in &teeth {
            let _ = writeln!(
                s,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                fmt_num(a.x),
                fmt_num(a.y),
                fmt_num(b.x),
                fmt_num(b.y)
            );
        }
        s.push_str("</g>\n");
    }
    let _ = writeln!(
        s,
        "<g class=\"curve\" fill=\"none\" stroke=\"#202020\" stroke-width=\"{}\">",
        fmt_num(stroke)
    );
    for seg in spline.balls() {
        let [b0, b1, b2, b3] = seg.to_bernstein();
        let _ = writeln!(s, "<path d=\"M {} C {} {} {}\"/>", pt(b0), pt(b1), pt(b2), pt(b3));
    }
    s.push_str("</g>\n</g>\n</svg>\n");
    Ok(s)
}

/// Wavefront OBJ quad mesh of the sampled profile revolved about the y axis.
pub fn revolve_obj(spline: &G2Spline<f64>, cfg: &RevolveConfig) -> Result<String> {
    cfg.validate()?;
    let profile = sample(spline, cfg.samples_per_segment)?;
    if let Some((index, p)) = profile
        .points
        .iter()
        .enumerate()
        .find(|(_, p)| p[0] < -1e-9)
    {
        return Err(Error::ProfileCrossesAxis { index, x: p[0] });
    }
    let steps = cfg.angular_steps;
    let mut s = String::new();
    let angles: Vec<(f64, f64)> = (0..steps)
        .map(|j| (std::f64::consts::TAU * j as f64 / steps as f64).sin_cos())
        .collect();
    for p in &profile.points {
        let r = p[0].max(0.0);
        for &(sin, cos) in &angles {
            let _ = writeln!(
                s,
                "v {} {} {}",
                fmt_num(r * cos),
                fmt_num(p[1]),
                fmt_num(r * sin)
            );
        }
    }
    let idx = |i: usize, j: usize| i * steps + (j % steps) + 1;
    for i in 0..profile.points.len() - 1 {
        for j in 0..steps {
            let _ = writeln!(
                s,
                "f {} {} {} {}",
                idx(i, j),
                idx(i + 1, j),
                idx(i + 1, j + 1),
                idx(i, j + 1)
            );
        }
    }
    Ok(s)
}
