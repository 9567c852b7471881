//! Stateless HTTP front end. Every handler is a pure function of its body.

use axum::body::Bytes;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::api::{
    render_obj, render_svg, revolve_config, sample_spline, solve_file, svg_options, ApiError,
    SolveResponse,
};
use crate::input::{SolverOverrides, SpecFile};

#[derive(Deserialize)]
struct SolveRequest {
    #[serde(flatten)]
    spec: SpecFile,
    #[serde(flatten)]
    solver: SolverOverrides,
}

#[derive(Deserialize)]
struct SampleRequest {
    #[serde(flatten)]
    spec: SpecFile,
    #[serde(flatten)]
    solver: SolverOverrides,
    n: usize,
}

#[derive(Deserialize)]
struct SvgRequest {
    #[serde(flatten)]
    spec: SpecFile,
    #[serde(flatten)]
    solver: SolverOverrides,
    #[serde(default)]
    comb: bool,
    comb_scale: Option<f64>,
    samples: Option<usize>,
}

#[derive(Deserialize)]
struct ObjRequest {
    #[serde(flatten)]
    spec: SpecFile,
    #[serde(flatten)]
    solver: SolverOverrides,
    steps: Option<usize>,
    samples: Option<usize>,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.http_status()).unwrap_or(StatusCode::UNPROCESSABLE_ENTITY);
        (status, [(header::CONTENT_TYPE, "application/json")], self.to_json()).into_response()
    }
}

fn parse<T: DeserializeOwned>(body: &[u8]) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(ApiError::from_json)
}

fn json<T: serde::Serialize>(value: &T) -> Response {
    let text = serde_json::to_string(value).expect("response serializes");
    ([(header::CONTENT_TYPE, "application/json")], text).into_response()
}

async fn solve(body: Bytes) -> Result<Response, ApiError> {
    let req: SolveRequest = parse(&body)?;
    let (spline, warnings) = solve_file(&req.spec, &req.solver)?;
    Ok(json(&SolveResponse::new(&spline, warnings)))
}

async fn sample(body: Bytes) -> Result<Response, ApiError> {
    let req: SampleRequest = parse(&body)?;
    let (spline, _) = solve_file(&req.spec, &req.solver)?;
    Ok(json(&sample_spline(&spline, req.n)?))
}

async fn svg(body: Bytes) -> Result<Response, ApiError> {
    let req: SvgRequest = parse(&body)?;
    let opts = svg_options(req.comb, req.comb_scale, req.samples)?;
    let (spline, _) = solve_file(&req.spec, &req.solver)?;
    let text = render_svg(&spline, &opts)?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], text).into_response())
}

async fn obj(body: Bytes) -> Result<Response, ApiError> {
    let req: ObjRequest = parse(&body)?;
    let cfg = revolve_config(req.steps, req.samples)?;
    let (spline, _) = solve_file(&req.spec, &req.solver)?;
    let text = render_obj(&spline, &cfg)?;
    Ok(([(header::CONTENT_TYPE, "text/plain; charset=utf-8")], text).into_response())
}

async fn health() -> &'static str {
    "ok"
}

pub fn router() -> Router {
    Router::new()
        .route("/solve", post(solve))
        .route("/sample", post(sample))
        .route("/render/svg", post(svg))
        .route("/render/obj", post(obj))
        .route("/health", get(health))
}

/// Serves [`router`] on `listener` until the process is stopped.
pub async fn serve(listener: tokio::net::TcpListener) -> std::io::Result<()> {
    axum::serve(listener, router()).await
}
