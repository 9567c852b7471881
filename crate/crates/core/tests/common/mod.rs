//! Fixtures and the brute-force (α, β) oracle shared by the integration tests.
//!
//! The oracle never calls the solver: it recomputes the end-curvature
//! equations from raw tangent and chord components, scans a log grid for
//! cells where both equations change sign, and polishes each hit with a
//! damped Newton iteration.

#![allow(dead_code)]

use ballkurve::{DG2EndData, DG2SplineSpec, DKnotSpec, DPoint2, DUnitVec2};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const ORACLE_MIN: f64 = 1e-3;
pub const ORACLE_MAX: f64 = 1e3;
const GRID: usize = 480;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn knot(x: f64, y: f64, m: f64, n: f64, kappa: f64) -> DKnotSpec {
    DKnotSpec::new(DPoint2::new(x, y), DUnitVec2::new(m, n).unwrap(), kappa)
}

pub fn vase_spec() -> DG2SplineSpec {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    DG2SplineSpec::new(vec![
        knot(1.0, 0.0, 1.0, 0.0, 3.0),
        knot(3.5, 5.0, 0.0, 1.0, 1.0),
        knot(0.5, 9.0, 0.0, 1.0, -1.5),
        knot(2.0, 12.0, s, s, -1.0),
    ])
}

pub fn quadrant(k0: f64, k1: f64) -> DG2EndData {
    DG2EndData::new(
        DPoint2::new(0.0, 0.0),
        DPoint2::new(1.0, 1.0),
        DUnitVec2::new(1.0, 0.0).unwrap(),
        DUnitVec2::new(0.0, 1.0).unwrap(),
        k0,
        k1,
    )
    .unwrap()
}

pub fn random_unit(r: &mut impl Rng) -> DUnitVec2 {
    DUnitVec2::from_angle(r.gen_range(0.0..std::f64::consts::TAU))
}

/// Points in [−5, 5]², random unit tangents, κ in [−5, 5].
pub fn random_data(r: &mut impl Rng) -> DG2EndData {
    loop {
        let p0 = DPoint2::new(r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0));
        let p1 = DPoint2::new(r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0));
        if p0.distance(p1) < 1e-3 {
            continue;
        }
        return DG2EndData::new(
            p0,
            p1,
            random_unit(r),
            random_unit(r),
            r.gen_range(-5.0..5.0),
            r.gen_range(-5.0..5.0),
        )
        .unwrap();
    }
}

/// Data built from a known (α, β): the targets are the curvatures that pair produces.
pub fn random_feasible_data(r: &mut impl Rng) -> (DG2EndData, f64, f64) {
    loop {
        let mut data = random_data(r);
        let alpha = 10f64.powf(r.gen_range(-1.0..1.0)) / data.chord_length();
        let beta = 10f64.powf(r.gen_range(-1.0..1.0)) / data.chord_length();
        let (k0, k1) = oracle_kappas(&data, alpha, beta);
        if k0.abs() > 50.0 || k1.abs() > 50.0 {
            continue;
        }
        data.kappa_start = k0;
        data.kappa_end = k1;
        return (data, alpha, beta);
    }
}

struct Eqs {
    a: f64,
    b: f64,
    d: f64,
    k0: f64,
    k1: f64,
}

impl Eqs {
    fn new(data: &DG2EndData) -> Self {
        let (m0, n0) = (data.t_start.m(), data.t_start.n());
        let (m1, n1) = (data.t_end.m(), data.t_end.n());
        let dx = data.end.x - data.start.x;
        let dy = data.end.y - data.start.y;
        Self {
            a: -2.0 * (m0 * n1 - n0 * m1),
            b: 3.0 * (m0 * dy - n0 * dx),
            d: -3.0 * (m1 * dy - n1 * dx),
            k0: data.kappa_start,
            k1: data.kappa_end,
        }
    }

    /// Both equations cleared of denominators.
    fn f(&self, al: f64, be: f64) -> (f64, f64) {
        (
            al * al * (self.a + self.b * be) - 2.0 * self.k0 * be,
            be * be * (self.a + self.d * al) - 2.0 * self.k1 * al,
        )
    }

    fn kappas(&self, al: f64, be: f64) -> (f64, f64) {
        (
            al * al * (self.a + self.b * be) / (2.0 * be),
            be * be * (self.a + self.d * al) / (2.0 * al),
        )
    }

    fn jac(&self, al: f64, be: f64) -> [[f64; 2]; 2] {
        [
            [2.0 * al * (self.a + self.b * be), al * al * self.b - 2.0 * self.k0],
            [be * be * self.d - 2.0 * self.k1, 2.0 * be * (self.a + self.d * al)],
        ]
    }
}

pub fn oracle_kappas(data: &DG2EndData, alpha: f64, beta: f64) -> (f64, f64) {
    Eqs::new(data).kappas(alpha, beta)
}

pub fn oracle_residuals_ok(data: &DG2EndData, alpha: f64, beta: f64, tol: f64) -> bool {
    let (k0, k1) = oracle_kappas(data, alpha, beta);
    (k0 - data.kappa_start).abs() <= tol * (1.0 + data.kappa_start.abs())
        && (k1 - data.kappa_end).abs() <= tol * (1.0 + data.kappa_end.abs())
}

fn newton(eq: &Eqs, mut al: f64, mut be: f64) -> Option<(f64, f64)> {
    let norm = |(x, y): (f64, f64)| x.abs().max(y.abs());
    let mut fx = eq.f(al, be);
    for _ in 0..100 {
        let j = eq.jac(al, be);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let da = (fx.0 * j[1][1] - fx.1 * j[0][1]) / det;
        let db = (j[0][0] * fx.1 - j[1][0] * fx.0) / det;
        let mut lambda = 1.0;
        let mut improved = false;
        while lambda > 1e-6 {
            let (na, nb) = (al - lambda * da, be - lambda * db);
            if na > 0.0 && nb > 0.0 {
                let nf = eq.f(na, nb);
                if norm(nf) < norm(fx) {
                    al = na;
                    be = nb;
                    fx = nf;
                    improved = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !improved || (da.abs() <= 1e-15 * al && db.abs() <= 1e-15 * be) {
            break;
        }
    }
    Some((al, be))
}

/// All positive solutions in [ORACLE_MIN, ORACLE_MAX]² passing the residual check.
pub fn oracle_solutions(data: &DG2EndData, residual_tol: f64) -> Vec<(f64, f64)> {
    let eq = Eqs::new(data);
    let (lo, hi) = (ORACLE_MIN.ln(), ORACLE_MAX.ln());
    let axis: Vec<f64> = (0..=GRID)
        .map(|i| (lo + (hi - lo) * i as f64 / GRID as f64).exp())
        .collect();
    let vals: Vec<Vec<(f64, f64)>> = axis
        .iter()
        .map(|&al| axis.iter().map(|&be| eq.f(al, be)).collect())
        .collect();
    let changes = |xs: [f64; 4]| {
        let pos = xs.iter().any(|&x| x >= 0.0);
        let neg = xs.iter().any(|&x| x <= 0.0);
        pos && neg
    };
    let mut out: Vec<(f64, f64)> = Vec::new();
    for i in 0..GRID {
        for j in 0..GRID {
            let c = [vals[i][j], vals[i + 1][j], vals[i][j + 1], vals[i + 1][j + 1]];
            if !changes(c.map(|v| v.0)) || !changes(c.map(|v| v.1)) {
                continue;
            }
            let al = (axis[i] * axis[i + 1]).sqrt();
            let be = (axis[j] * axis[j + 1]).sqrt();
            let Some((al, be)) = newton(&eq, al, be) else { continue };
            let range = ORACLE_MIN..=ORACLE_MAX;
            if !(range.contains(&al) && range.contains(&be)) {
                continue;
            }
            if !oracle_residuals_ok(data, al, be, residual_tol) {
                continue;
            }
            if !out.iter().any(|&(a, b)| rel_close(a, al, 1e-7) && rel_close(b, be, 1e-7)) {
                out.push((al, be));
            }
        }
    }
    out
}

pub fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs())
}

/// Andrew's monotone chain; returns hull vertices counter-clockwise.
pub fn convex_hull(mut pts: Vec<DPoint2>) -> Vec<DPoint2> {
    pts.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap()));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: DPoint2, a: DPoint2, b: DPoint2| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let mut lower: Vec<DPoint2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<DPoint2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn segment_distance(p: DPoint2, a: DPoint2, b: DPoint2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Whether `p` lies in the hull of `pts` up to distance `tol`.
pub fn in_hull(p: DPoint2, pts: &[DPoint2], tol: f64) -> bool {
    let hull = convex_hull(pts.to_vec());
    match hull.len() {
        0 => false,
        1 => p.distance(hull[0]) <= tol,
        2 => segment_distance(p, hull[0], hull[1]) <= tol,
        n => {
            let inside = (0..n).all(|i| {
                let (a, b) = (hull[i], hull[(i + 1) % n]);
                let e = b - a;
                ballkurve::cross2(e, p - a) / e.norm() >= -tol
            });
            inside
                || (0..n).any(|i| segment_distance(p, hull[i], hull[(i + 1) % n]) <= tol)
        }
    }
}

/// Sign changes of a sequence, zeros skipped.
pub fn sign_changes(vals: impl IntoIterator<Item = f64>) -> usize {
    let mut last = 0.0f64;
    let mut n = 0;
    for v in vals {
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            n += 1;
        }
        last = v;
    }
    n
}

/// Parses `<path d="M x y C x1 y1 x2 y2 x3 y3"/>` elements out of an SVG document.
pub fn svg_cubics(svg: &str) -> Vec<[DPoint2; 4]> {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    doc.descendants()
        .filter(|n| n.has_tag_name("path"))
        .map(|n| {
            let d = n.attribute("d").unwrap();
            let nums: Vec<f64> = d
                .split_whitespace()
                .filter(|t| *t != "M" && *t != "C")
                .map(|t| t.parse().unwrap())
                .collect();
            assert_eq!(nums.len(), 8, "unexpected path data {d}");
            [
                DPoint2::new(nums[0], nums[1]),
                DPoint2::new(nums[2], nums[3]),
                DPoint2::new(nums[4], nums[5]),
                DPoint2::new(nums[6], nums[7]),
            ]
        })
        .collect()
}
