//! Command-line front end: solve problem specs to CSV grids, verify
//! solutions against their defining equations, tabulate kernels, and run
//! the bundled demos.
//!
//! Exit codes: 0 on success (all tolerances met for `verify`), 1 when a
//! verification tolerance is violated, 2 on input errors.

mod demos;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use bcbvp::grid::{evaluate_grid, write_grid_csv, GridSpec};
use bcbvp::problem::{parse_spec, solve_built, BuiltProblem, PathChoice, ProblemSpecFile};
use bcbvp::quadrature::{conj_poisson, poisson, schwarz_kernel};
use bcbvp::solvers::{EvalPath, QuadratureParams, SolutionField};
use bcbvp::verify::{residual_report, ReportConfig, ResidualReport};

#[derive(Parser)]
#[command(
    name = "bcbvp",
    version,
    about = "Bicomplex Schwarz and Dirichlet boundary value problems on the unit disk"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem spec and write the solution grid as CSV
    Solve(SolveArgs),
    /// Solve a problem spec and certify the solution; exit 1 on violation
    Verify(VerifyArgs),
    /// Tabulate Poisson, conjugate Poisson, and Schwarz kernel values
    KernelTable(KernelTableArgs),
    /// Run every bundled demo spec through verification
    Demo(DemoArgs),
}

#[derive(Args)]
struct GridArgs {
    /// Radial grid resolution
    #[arg(long, default_value_t = 15)]
    grid_nr: usize,
    /// Angular grid resolution
    #[arg(long, default_value_t = 16)]
    grid_ntheta: usize,
    /// Largest grid radius (strictly inside the disk)
    #[arg(long, default_value_t = 0.9)]
    grid_rmax: f64,
}

#[derive(Args)]
struct QuadArgs {
    /// Circle rule node count
    #[arg(long, default_value_t = 256)]
    circle_n: usize,
    /// Disk rule radial node count
    #[arg(long, default_value_t = 64)]
    disk_nr: usize,
    /// Disk rule angular node count
    #[arg(long, default_value_t = 256)]
    disk_nt: usize,
    /// Minimum allowed distance between quadrature nodes and evaluation points
    #[arg(long, default_value_t = 1e-8)]
    collision_eps: f64,
    /// Override the spec's evaluation path
    #[arg(long, value_enum)]
    path: Option<PathArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Spectral,
    Quadrature,
}

#[derive(Args)]
struct SolveArgs {
    /// Problem spec JSON; `demo:<name>` loads a bundled demo
    #[arg(long)]
    input: String,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    quad: QuadArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Problem spec JSON; `demo:<name>` loads a bundled demo
    #[arg(long)]
    input: String,
    /// Residual report JSON path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Multiplies every pass/fail threshold
    #[arg(long, default_value_t = 1.0)]
    tolerance_scale: f64,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    quad: QuadArgs,
}

#[derive(Args)]
struct KernelTableArgs {
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Number of radii (spaced 0 ..= grid_rmax)
    #[arg(long, default_value_t = 10)]
    grid_nr: usize,
    /// Number of angles (uniform on the circle)
    #[arg(long, default_value_t = 8)]
    grid_ntheta: usize,
    /// Largest tabulated radius
    #[arg(long, default_value_t = 0.9)]
    grid_rmax: f64,
}

#[derive(Args)]
struct DemoArgs {
    /// Write the bundled specs as JSON files into this directory
    #[arg(long)]
    emit: Option<PathBuf>,
    /// Print a single demo spec instead of running all of them
    #[arg(long)]
    show: Option<String>,
}

/// Input-side failure: exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve(args) => run_solve(&args),
        Command::Verify(args) => run_verify(&args),
        Command::KernelTable(args) => run_kernel_table(&args),
        Command::Demo(args) => run_demo(&args),
    }
    .unwrap_or_else(|InputError(msg)| {
        eprintln!("error: {msg}");
        2
    });
    std::process::exit(code);
}

fn load_spec(input: &str) -> Result<ProblemSpecFile, InputError> {
    let json = match input.strip_prefix("demo:") {
        Some(name) => demos::demo_json(name)
            .ok_or_else(|| {
                InputError(format!(
                    "unknown demo `{name}`; available: {}",
                    demo_names().join(", ")
                ))
            })?
            .to_string(),
        None => {
            fs::read_to_string(input).map_err(|e| InputError(format!("cannot read {input}: {e}")))?
        }
    };
    Ok(parse_spec(&json)?)
}

fn demo_names() -> Vec<&'static str> {
    demos::DEMOS.iter().map(|(n, _)| *n).collect()
}

fn eval_path(built: &BuiltProblem, quad: &QuadArgs) -> EvalPath {
    let choice = match quad.path {
        Some(PathArg::Spectral) => PathChoice::Spectral,
        Some(PathArg::Quadrature) => PathChoice::Quadrature,
        None => built.path,
    };
    let params = QuadratureParams {
        circle_n: quad.circle_n,
        disk_nr: quad.disk_nr,
        disk_nt: quad.disk_nt,
        collision_eps: quad.collision_eps,
        ..QuadratureParams::default()
    };
    bcbvp::problem::eval_path(choice, params)
}

fn solve_from_args(
    input: &str,
    quad: &QuadArgs,
) -> Result<(BuiltProblem, SolutionField), InputError> {
    let spec = load_spec(input)?;
    let built = spec.build()?;
    let path = eval_path(&built, quad);
    let field = solve_built(&built, &path)?;
    Ok((built, field))
}

fn write_or_stdout(path: Option<&Path>, bytes: &[u8]) -> Result<bool, InputError> {
    match path {
        Some(p) => {
            fs::write(p, bytes)
                .map_err(|e| InputError(format!("cannot write {}: {e}", p.display())))?;
            Ok(true)
        }
        None => {
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| InputError(e.to_string()))?;
            Ok(false)
        }
    }
}

fn run_solve(args: &SolveArgs) -> Result<i32, InputError> {
    let (_, field) = solve_from_args(&args.input, &args.quad)?;
    let grid = GridSpec::new(args.grid.grid_nr, args.grid.grid_ntheta, args.grid.grid_rmax)?;
    let rows = evaluate_grid(&field, &grid)?;
    let mut csv = Vec::new();
    write_grid_csv(&rows, &mut csv).map_err(|e| InputError(e.to_string()))?;
    let to_file = write_or_stdout(args.output.as_deref(), &csv)?;
    let summary = format!(
        "solved {} via {}; grid {}x{} rmax {}",
        field.provenance().problem,
        field.provenance().path,
        grid.n_r,
        grid.n_theta,
        grid.r_max
    );
    if to_file {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> Result<i32, InputError> {
    let (built, field) = solve_from_args(&args.input, &args.quad)?;
    let cfg = ReportConfig {
        grid_nr: args.grid.grid_nr,
        grid_ntheta: args.grid.grid_ntheta,
        grid_rmax: args.grid.grid_rmax,
        tolerance_scale: args.tolerance_scale,
        ..ReportConfig::default()
    };
    let report = residual_report(&built.problem, &field, &cfg)?;
    let mut json = serde_json::to_vec_pretty(&report).map_err(|e| InputError(e.to_string()))?;
    json.push(b'\n');
    let to_file = write_or_stdout(args.output.as_deref(), &json)?;
    if to_file {
        summarize_report(&report, &mut std::io::stdout());
    } else {
        summarize_report(&report, &mut std::io::stderr());
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn summarize_report(report: &ResidualReport, out: &mut dyn Write) {
    let verdict = |ok: bool| if ok { "ok" } else { "VIOLATION" };
    let _ = writeln!(out, "verify {} via {}", report.problem, report.path);
    let _ = writeln!(
        out,
        "  pde residual      {:>12.3e}  (tol {:.1e})  {}",
        report.pde_residual_max,
        report.thresholds.pde,
        verdict(report.pde_residual_max <= report.thresholds.pde)
    );
    match report.boundary_mismatch_max {
        Some(b) => {
            let _ = writeln!(
                out,
                "  boundary mismatch {:>12.3e}  (tol {:.1e})  {}",
                b,
                report.thresholds.boundary,
                verdict(b <= report.thresholds.boundary)
            );
        }
        None => {
            let _ = writeln!(out, "  boundary mismatch        n/a  (distribution data)");
        }
    }
    let worst_origin = report.origin_error_plus.max(report.origin_error_minus);
    let _ = writeln!(
        out,
        "  origin error      {:>12.3e}  (tol {:.1e})  {}",
        worst_origin,
        report.thresholds.origin,
        verdict(worst_origin <= report.thresholds.origin)
    );
    let _ = writeln!(out, "  result: {}", if report.pass { "PASS" } else { "FAIL" });
}

fn run_kernel_table(args: &KernelTableArgs) -> Result<i32, InputError> {
    if args.grid_nr < 2 || args.grid_ntheta < 2 {
        return Err(InputError("kernel table needs at least a 2x2 grid".into()));
    }
    if !(0.0..1.0).contains(&args.grid_rmax) {
        return Err(InputError(format!(
            "kernel radii must satisfy r < 1, got r_max = {}",
            args.grid_rmax
        )));
    }
    let mut csv = Vec::new();
    let _ = writeln!(csv, "r,theta,poisson,conj_poisson,re_schwarz,im_schwarz");
    let zeta = num_complex::Complex64::new(1.0, 0.0);
    for i in 0..args.grid_nr {
        let r = args.grid_rmax * i as f64 / (args.grid_nr - 1) as f64;
        for j in 0..args.grid_ntheta {
            let theta = std::f64::consts::TAU * j as f64 / args.grid_ntheta as f64;
            let p = poisson(r, theta)?;
            let q = conj_poisson(r, theta)?;
            let s = schwarz_kernel(zeta, num_complex::Complex64::from_polar(r, theta))?;
            let _ = writeln!(csv, "{r},{theta},{p},{q},{},{}", s.re, s.im);
        }
    }
    write_or_stdout(args.output.as_deref(), &csv)?;
    Ok(0)
}

fn run_demo(args: &DemoArgs) -> Result<i32, InputError> {
    if let Some(name) = &args.show {
        let json = demos::demo_json(name).ok_or_else(|| {
            InputError(format!(
                "unknown demo `{name}`; available: {}",
                demo_names().join(", ")
            ))
        })?;
        print!("{json}");
        return Ok(0);
    }
    if let Some(dir) = &args.emit {
        fs::create_dir_all(dir).map_err(|e| InputError(e.to_string()))?;
        for (name, json) in demos::DEMOS {
            let path = dir.join(format!("{name}.json"));
            fs::write(&path, json).map_err(|e| InputError(e.to_string()))?;
            println!("wrote {}", path.display());
        }
        return Ok(0);
    }
    let mut all_as_expected = true;
    for (name, json) in demos::DEMOS {
        let spec = parse_spec(json)?;
        let built = spec.build()?;
        let path = bcbvp::problem::eval_path(built.path, QuadratureParams::default());
        let field = solve_built(&built, &path)?;
        let report = residual_report(&built.problem, &field, &ReportConfig::default())?;
        let got = if report.pass { 0 } else { 1 };
        let expected = demos::expected_exit(name);
        let ok = got == expected;
        all_as_expected &= ok;
        println!(
            "{name:<24} exit {got} (expected {expected})  {}",
            if ok { "ok" } else { "UNEXPECTED" }
        );
    }
    Ok(if all_as_expected { 0 } else { 1 })
}
