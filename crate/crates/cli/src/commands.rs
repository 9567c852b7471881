//! Subcommands of the `ballkurve` binary.
//!
//! Exit codes: 0 success, 1 malformed input or I/O failure, 2 geometric
//! failure (infeasible segment, profile crossing the axis), 3 a `check`
//! whose report does not pass.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::api::{
    render_obj, render_svg, revolve_config, solve_file, svg_options, ApiError, SolveResponse,
};
use crate::input::{SolverOverrides, SpecFile};

pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ballkurve", version, about = "G2 piecewise Ball cubic splines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SolverFlags {
    /// Relative residual tolerance for accepting a candidate pair
    #[arg(long)]
    pub tol_residual: Option<f64>,
    /// Upper bound on alpha and beta
    #[arg(long)]
    pub alpha_max: Option<f64>,
}

impl SolverFlags {
    fn overrides(&self) -> SolverOverrides {
        SolverOverrides {
            tol_residual: self.tol_residual,
            alpha_max: self.alpha_max,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve every segment and print candidates, choices and the G2 report
    Solve {
        spec: PathBuf,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// Write the spline as SVG
    Render {
        spec: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Draw the curvature comb
        #[arg(long)]
        comb: bool,
        #[arg(long)]
        comb_scale: Option<f64>,
        /// Comb teeth per segment
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// Revolve the profile about the y axis and write an OBJ mesh
    Revolve {
        spec: PathBuf,
        #[arg(long)]
        obj: PathBuf,
        #[arg(long, default_value_t = 64)]
        steps: usize,
        /// Profile samples per segment
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// Solve and verify G2 continuity at every joint
    Check {
        spec: PathBuf,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// Run the HTTP service
    Serve {
        #[arg(long, env = "BALLKURVE_PORT", default_value_t = 8080)]
        port: u16,
    },
}

fn read_spec(path: &Path) -> Result<SpecFile, ApiError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ApiError::io(format!("cannot read {}: {e}", path.display())))?;
    SpecFile::from_json(&text)
}

fn write_file(path: &Path, text: &str) -> Result<(), ApiError> {
    std::fs::write(path, text).map_err(|e| ApiError::io(format!("cannot write {}: {e}", path.display())))
}

fn print_json(out: &mut dyn Write, value: &serde_json::Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json serializes"));
}

fn warn(err: &mut dyn Write, warnings: &[String]) {
    for w in warnings {
        let _ = writeln!(err, "warning: {w}");
    }
}

fn fail(out: &mut dyn Write, err: &mut dyn Write, e: &ApiError) -> i32 {
    let _ = writeln!(err, "error: {}", e.body.message);
    print_json(out, &serde_json::to_value(e.payload()).expect("json serializes"));
    e.exit_code()
}

/// Runs a spec-file subcommand. `Serve` is handled by [`serve`].
pub fn run(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match command {
        Command::Solve { spec, solver } => read_spec(spec)
            .and_then(|f| solve_file(&f, &solver.overrides()))
            .map(|(spline, warnings)| {
                warn(err, &warnings);
                print_json(out, &serde_json::to_value(SolveResponse::new(&spline, warnings)).unwrap());
                0
            }),
        Command::Render { spec, svg, comb, comb_scale, samples, solver } => {
            svg_options(*comb, *comb_scale, *samples).and_then(|opts| {
                let (spline, warnings) = solve_file(&read_spec(spec)?, &solver.overrides())?;
                warn(err, &warnings);
                let text = render_svg(&spline, &opts)?;
                write_file(svg, &text)?;
                print_json(out, &json!({"output": svg, "segments": spline.segment_count(), "bytes": text.len()}));
                Ok(0)
            })
        }
        Command::Revolve { spec, obj, steps, samples, solver } => {
            revolve_config(Some(*steps), Some(*samples)).and_then(|cfg| {
                let (spline, warnings) = solve_file(&read_spec(spec)?, &solver.overrides())?;
                warn(err, &warnings);
                let text = render_obj(&spline, &cfg)?;
                write_file(obj, &text)?;
                let count = |p: &str| text.lines().filter(|l| l.starts_with(p)).count();
                print_json(out, &json!({"output": obj, "vertices": count("v "), "faces": count("f ")}));
                Ok(0)
            })
        }
        Command::Check { spec, solver } => read_spec(spec)
            .and_then(|f| solve_file(&f, &solver.overrides()))
            .map(|(spline, warnings)| {
                warn(err, &warnings);
                let report = SolveResponse::new(&spline, warnings).report;
                print_json(out, &serde_json::to_value(&report).unwrap());
                if report.pass {
                    0
                } else {
                    EXIT_CHECK_FAILED
                }
            }),
        Command::Serve { .. } => unreachable!("serve is not a spec-file command"),
    };
    result.unwrap_or_else(|e| fail(out, err, &e))
}

/// Binds `port` on localhost and serves until stopped. Returns the exit code.
pub fn serve(port: u16, err: &mut dyn Write) -> i32 {
    let rt = match tokio::runtime::Builder::new_multi_thread().enable_all().build() {
        Ok(rt) => rt,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start runtime: {e}");
            return 1;
        }
    };
    rt.block_on(async {
        let listener = match tokio::net::TcpListener::bind(("127.0.0.1", port)).await {
            Ok(l) => l,
            Err(e) => {
                let _ = writeln!(err, "error: cannot bind port {port}: {e}");
                return 1;
            }
        };
        let _ = writeln!(err, "listening on http://127.0.0.1:{port}");
        match crate::service::serve(listener).await {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        }
    })
}
