//! Command line and HTTP front end for the `ballkurve` spline kernel.
//!
//! Both front ends read the same JSON spec form ([`input::SpecFile`]) and
//! report failures with the same `{"error": {code, segment, message}}`
//! payload.

pub mod api;
pub mod commands;
pub mod input;
pub mod service;

pub use api::{ApiError, ErrorPayload, SolveResponse};
pub use input::{LoadedSpec, SpecFile};
