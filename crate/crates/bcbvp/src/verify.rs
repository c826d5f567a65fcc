//! Finite-difference differential operators and residual reports that
//! certify solver output against the defining equations and side conditions.
//!
//! The operators here are deliberately independent of the symbolic path:
//! derivatives come from central stencils, so a report cross-checks the
//! polynomial assembly rather than restating it.

use num_complex::Complex64;
use serde::Serialize;

use crate::bicomplex::Bicomplex;
use crate::boundary::{BoundaryFourierData, DataKind};
use crate::error::{Error, Result};
use crate::poly::{schwarz_poly_solve, ComplexPoly};
use crate::solvers::{PathKind, Problem, SolutionField};

/// A disk field for finite differencing.
pub type FieldFn<'a> = &'a dyn Fn(Complex64) -> Result<Bicomplex>;

fn check_stencil(z: Complex64, h: f64) -> Result<()> {
    let r = z.norm();
    if r + h * std::f64::consts::SQRT_2 >= 1.0 {
        return Err(Error::StencilOutsideDisk { r, h });
    }
    Ok(())
}

fn diff_x(field: FieldFn, z: Complex64, h: f64) -> Result<Bicomplex> {
    let step = Complex64::new(h, 0.0);
    Ok((field(z + step)? - field(z - step)?).scale(0.5 / h))
}

fn diff_y(field: FieldFn, z: Complex64, h: f64) -> Result<Bicomplex> {
    let step = Complex64::new(0.0, h);
    Ok((field(z + step)? - field(z - step)?).scale(0.5 / h))
}

/// Central-difference Wirtinger derivative `∂/∂z = (∂x - i ∂y)/2`,
/// applied componentwise; `O(h²)` accurate for smooth fields.
pub fn wirtinger_dz(field: FieldFn, z: Complex64, h: f64) -> Result<Bicomplex> {
    check_stencil(z, h)?;
    let fx = diff_x(field, z, h)?;
    let fy = diff_y(field, z, h)?;
    Ok((fx - fy.scale_complex(Complex64::new(0.0, 1.0))).scale(0.5))
}

/// Central-difference Wirtinger derivative `∂/∂z̄ = (∂x + i ∂y)/2`.
pub fn wirtinger_dzbar(field: FieldFn, z: Complex64, h: f64) -> Result<Bicomplex> {
    check_stencil(z, h)?;
    let fx = diff_x(field, z, h)?;
    let fy = diff_y(field, z, h)?;
    Ok((fx + fy.scale_complex(Complex64::new(0.0, 1.0))).scale(0.5))
}

/// The bicomplex operator `∂̄ = p+ ∂/∂z + p- ∂/∂z̄`, assembled in idempotent
/// coordinates: `(∂̄w)+ = ∂z(w+)`, `(∂̄w)- = ∂z̄(w-)`.
pub fn bc_dbar(field: FieldFn, z: Complex64, h: f64) -> Result<Bicomplex> {
    let dz = wirtinger_dz(field, z, h)?;
    let dzbar = wirtinger_dzbar(field, z, h)?;
    Ok(Bicomplex::from_idempotent(dz.plus(), dzbar.minus()))
}

/// The mirror operator `∂ = p+ ∂/∂z̄ + p- ∂/∂z`.
pub fn bc_d(field: FieldFn, z: Complex64, h: f64) -> Result<Bicomplex> {
    let dz = wirtinger_dz(field, z, h)?;
    let dzbar = wirtinger_dzbar(field, z, h)?;
    Ok(Bicomplex::from_idempotent(dzbar.plus(), dz.minus()))
}

/// `∂̄^n` by nested central differences.
pub fn bc_dbar_iterated(field: FieldFn, z: Complex64, h: f64, n: u32) -> Result<Bicomplex> {
    match n {
        0 => field(z),
        1 => bc_dbar(field, z, h),
        _ => bc_dbar(&|w| bc_dbar_iterated(field, w, h, n - 1), z, h),
    }
}

/// Five-point stencil Laplacian, componentwise.
pub fn five_point_laplacian(field: FieldFn, z: Complex64, h: f64) -> Result<Bicomplex> {
    check_stencil(z, h)?;
    let (ex, ey) = (Complex64::new(h, 0.0), Complex64::new(0.0, h));
    let sum = field(z + ex)? + field(z - ex)? + field(z + ey)? + field(z - ey)?
        - field(z)?.scale(4.0);
    Ok(sum.scale(1.0 / (h * h)))
}

/// `‖4 ∂∂̄ w - Δw‖_B` at `z` — the factorization identity residual.
pub fn laplacian_identity_check(field: FieldFn, z: Complex64, h: f64) -> Result<f64> {
    let composed = bc_d(&|w| bc_dbar(field, w, h), z, h)?.scale(4.0);
    let lap = five_point_laplacian(field, z, h)?;
    Ok((composed - lap).bnorm())
}

/// Exact closed-form solution of the complex Schwarz problem for a
/// polynomial source and real trigonometric boundary data — the oracle the
/// quadrature path is certified against.
pub fn solve_schwarz_poly_exact(
    source: &ComplexPoly,
    boundary: &BoundaryFourierData,
    c: f64,
) -> Result<ComplexPoly> {
    if !boundary.is_real_valued() {
        return Err(Error::ComplexBoundaryData);
    }
    Ok(schwarz_poly_solve(source, boundary, c))
}

/// Residual thresholds; an entry of `None` in the report means the check
/// did not apply (e.g. boundary mismatch for distribution data).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Thresholds {
    pub pde: f64,
    pub boundary: f64,
    pub origin: f64,
}

impl Thresholds {
    /// Path- and order-dependent defaults. Nested stencils lose accuracy
    /// per extra order; quadrature carries the documented scheme error.
    pub fn defaults(kind: PathKind, problem: &Problem) -> Self {
        match problem {
            Problem::Dirichlet(_) => Thresholds {
                pde: 1e-4,
                boundary: 1e-2,
                origin: 1e-12,
            },
            Problem::Schwarz(spec) => {
                let pde = match kind {
                    PathKind::Spectral => match spec.order {
                        1 => 1e-5,
                        2 => 1e-4,
                        _ => 1e-3,
                    },
                    PathKind::Quadrature => 1e-3,
                };
                let origin = match kind {
                    PathKind::Spectral => 1e-12,
                    PathKind::Quadrature => 1e-6,
                };
                Thresholds {
                    pde,
                    boundary: 1e-2,
                    origin,
                }
            }
        }
    }

    pub fn scaled(self, s: f64) -> Self {
        Thresholds {
            pde: self.pde * s,
            boundary: self.boundary * s,
            origin: self.origin * s,
        }
    }
}

/// Grid and stencil configuration for [`residual_report`].
#[derive(Debug, Clone)]
pub struct ReportConfig {
    pub grid_nr: usize,
    pub grid_ntheta: usize,
    pub grid_rmax: f64,
    pub boundary_radius: f64,
    pub boundary_angles: usize,
    /// Step for single central stencils.
    pub fd_step: f64,
    /// Step for nested stencils (order ≥ 2 and Laplacians), where rounding
    /// error grows like `eps/h^{2n}`.
    pub fd_step_nested: f64,
    pub tolerance_scale: f64,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self {
            grid_nr: 15,
            grid_ntheta: 16,
            grid_rmax: 0.9,
            boundary_radius: 1.0 - 1e-3,
            boundary_angles: 64,
            fd_step: 1e-4,
            fd_step_nested: 1e-3,
            tolerance_scale: 1.0,
        }
    }
}

/// Certification summary for one solved problem. Field order is the wire
/// order; reports serialize deterministically.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub problem: String,
    pub path: String,
    pub pde_residual_max: f64,
    pub boundary_mismatch_max: Option<f64>,
    pub origin_error_plus: f64,
    pub origin_error_minus: f64,
    pub grid_nr: usize,
    pub grid_ntheta: usize,
    pub fd_step: f64,
    pub thresholds: Thresholds,
    pub pass: bool,
}

impl ResidualReport {
    pub fn is_finite(&self) -> bool {
        self.pde_residual_max.is_finite()
            && self.boundary_mismatch_max.map_or(true, f64::is_finite)
            && self.origin_error_plus.is_finite()
            && self.origin_error_minus.is_finite()
    }
}

/// Evaluates PDE, boundary, and origin residuals of `field` against the
/// problem it claims to solve. Reports — never fails — on large residuals;
/// only evaluation errors (e.g. quadrature collisions) propagate.
pub fn residual_report(
    problem: &Problem,
    field: &SolutionField,
    cfg: &ReportConfig,
) -> Result<ResidualReport> {
    let kind = field.provenance().kind;
    let thresholds = Thresholds::defaults(kind, problem).scaled(cfg.tolerance_scale);
    let eval = |z: Complex64| field.eval(z);

    let mut pde_max = 0.0f64;
    let fd_step;
    match problem {
        Problem::Schwarz(spec) => {
            fd_step = if spec.order == 1 {
                cfg.fd_step
            } else {
                cfg.fd_step_nested
            };
            for z in polar_grid(cfg.grid_nr, cfg.grid_ntheta, cfg.grid_rmax) {
                let lhs = bc_dbar_iterated(&eval, z, fd_step, spec.order)?;
                let res = (lhs - spec.source.eval(z)).bnorm();
                pde_max = pde_max.max(res);
            }
        }
        Problem::Dirichlet(_) => {
            fd_step = cfg.fd_step_nested;
            for z in polar_grid(cfg.grid_nr, cfg.grid_ntheta, cfg.grid_rmax) {
                let res = five_point_laplacian(&eval, z, fd_step)?.bnorm();
                pde_max = pde_max.max(res);
            }
        }
    }

    let boundary_mismatch_max = boundary_mismatch(problem, field, cfg)?;

    let (origin_error_plus, origin_error_minus) = match problem {
        Problem::Schwarz(spec) => {
            let origin = Complex64::new(0.0, 0.0);
            (
                (field.eval_plus(origin)?.im - spec.c_plus[0]).abs(),
                (field.eval_minus(origin)?.im - spec.c_minus[0]).abs(),
            )
        }
        Problem::Dirichlet(_) => (0.0, 0.0),
    };

    let pass = pde_max <= thresholds.pde
        && boundary_mismatch_max.map_or(true, |b| b <= thresholds.boundary)
        && origin_error_plus <= thresholds.origin
        && origin_error_minus <= thresholds.origin;

    Ok(ResidualReport {
        problem: field.provenance().problem.clone(),
        path: field.provenance().path.clone(),
        pde_residual_max: pde_max,
        boundary_mismatch_max,
        origin_error_plus,
        origin_error_minus,
        grid_nr: cfg.grid_nr,
        grid_ntheta: cfg.grid_ntheta,
        fd_step,
        thresholds,
        pass,
    })
}

fn boundary_mismatch(
    problem: &Problem,
    field: &SolutionField,
    cfg: &ReportConfig,
) -> Result<Option<f64>> {
    let angles =
        (0..cfg.boundary_angles).map(|j| std::f64::consts::TAU * j as f64 / cfg.boundary_angles as f64);
    match problem {
        Problem::Schwarz(spec) => {
            let (bp, bm) = (&spec.boundary_plus[0], &spec.boundary_minus[0]);
            if bp.kind() != DataKind::Function || bm.kind() != DataKind::Function {
                return Ok(None);
            }
            let mut worst = 0.0f64;
            for theta in angles {
                let z = Complex64::from_polar(cfg.boundary_radius, theta);
                let wp = field.eval_plus(z)?;
                let wm = field.eval_minus(z)?;
                worst = worst
                    .max((wp.re - bp.sample(theta)?.re).abs())
                    .max((wm.re - bm.sample(theta)?.re).abs());
            }
            Ok(Some(worst))
        }
        Problem::Dirichlet(spec) => {
            if spec.boundary.kind() != DataKind::Function {
                return Ok(None);
            }
            let mut worst = 0.0f64;
            for theta in angles {
                let z = Complex64::from_polar(cfg.boundary_radius, theta);
                worst = worst
                    .max((field.eval_plus(z)? - spec.boundary.plus.sample(theta)?).norm())
                    .max((field.eval_minus(z)? - spec.boundary.minus.sample(theta)?).norm());
            }
            Ok(Some(worst))
        }
    }
}

pub(crate) fn polar_grid(n_r: usize, n_theta: usize, r_max: f64) -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(n_r * n_theta);
    for i in 0..n_r {
        let r = r_max * (i as f64 + 1.0) / n_r as f64;
        for j in 0..n_theta {
            let theta = std::f64::consts::TAU * j as f64 / n_theta as f64;
            pts.push(Complex64::from_polar(r, theta));
        }
    }
    pts
}
