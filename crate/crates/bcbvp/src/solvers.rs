//! Solvers for the bicomplex Schwarz problems (homogeneous, nonhomogeneous,
//! distributional, higher-order) and the bicomplex Dirichlet problems.
//!
//! Every problem decomposes along the idempotent components: `w+` solves a
//! conjugated complex Schwarz problem and `w-` a plain one, so assembly is
//! componentwise. On the spectral path the conjugated-kernel integral of the
//! `w+` formula is realized as `conj(pairing(b+)) + i c+`, which is exact for
//! the real-valued data the problem requires. For the data classes handled
//! here every `b_k` with `k ≥ 1` is a trigonometric polynomial, hence the
//! real trace of a polynomial in every Hardy class `H^p`; the theorem's
//! `p_k > 1/2` constraint is therefore always met and is not checked.

use std::sync::Arc;

use num_complex::Complex64;

use crate::bicomplex::Bicomplex;
use crate::boundary::{BicomplexBoundaryData, BoundaryFourierData, DataKind};
use crate::error::{Error, Result};
use crate::poly::{poisson_extension, schwarz_extension, ComplexPoly};
use crate::quadrature::{poisson, schwarz_integral, CircleRule, DiskRule};
use crate::t_operator::{
    area_term, moment_expansion, t_poly, t_quadrature, t_star_poly, t_star_quadrature, Source,
};

/// Solution evaluation route.
#[derive(Debug, Clone)]
pub enum EvalPath {
    /// Exact Fourier/polynomial assembly; evaluable anywhere in the disk.
    Spectral,
    /// Numerical circle and disk quadrature; evaluable for `|z| ≤ r_max`.
    Quadrature(QuadratureParams),
}

impl EvalPath {
    pub fn quadrature_default() -> Self {
        EvalPath::Quadrature(QuadratureParams::default())
    }

    pub fn kind(&self) -> PathKind {
        match self {
            EvalPath::Spectral => PathKind::Spectral,
            EvalPath::Quadrature(_) => PathKind::Quadrature,
        }
    }

    pub fn label(&self) -> String {
        match self {
            EvalPath::Spectral => "spectral".into(),
            EvalPath::Quadrature(q) => format!(
                "quadrature(circle={}, disk={}x{})",
                q.circle_n, q.disk_nr, q.disk_nt
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct QuadratureParams {
    pub circle_n: usize,
    pub disk_nr: usize,
    pub disk_nt: usize,
    pub collision_eps: f64,
    pub r_max: f64,
}

impl Default for QuadratureParams {
    fn default() -> Self {
        Self {
            circle_n: 256,
            disk_nr: 64,
            disk_nt: 256,
            collision_eps: crate::quadrature::DEFAULT_COLLISION_EPS,
            r_max: crate::quadrature::R_MAX_QUADRATURE,
        }
    }
}

impl QuadratureParams {
    pub fn circle_rule(&self) -> CircleRule {
        CircleRule::new(self.circle_n)
    }

    pub fn disk_rule(&self) -> DiskRule {
        DiskRule::new(self.disk_nr, self.disk_nt).with_collision_eps(self.collision_eps)
    }
}

/// A Schwarz problem of order `n`:
/// `∂̄^n w = f`, `Re{(∂̄^k w)±} = b±_k` on the circle, `Im{(∂̄^k w)±(0)} = c±_k`.
#[derive(Debug, Clone)]
pub struct SchwarzSpec {
    pub order: u32,
    pub boundary_plus: Vec<BoundaryFourierData>,
    pub boundary_minus: Vec<BoundaryFourierData>,
    pub c_plus: Vec<f64>,
    pub c_minus: Vec<f64>,
    pub source: Source,
}

impl SchwarzSpec {
    pub fn first_order(
        boundary_plus: BoundaryFourierData,
        boundary_minus: BoundaryFourierData,
        c_plus: f64,
        c_minus: f64,
        source: Source,
    ) -> Self {
        Self {
            order: 1,
            boundary_plus: vec![boundary_plus],
            boundary_minus: vec![boundary_minus],
            c_plus: vec![c_plus],
            c_minus: vec![c_minus],
            source,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.order) {
            return Err(Error::OrderOutOfRange(self.order));
        }
        let n = self.order;
        for (what, len) in [
            ("boundary_plus", self.boundary_plus.len()),
            ("boundary_minus", self.boundary_minus.len()),
            ("c_plus", self.c_plus.len()),
            ("c_minus", self.c_minus.len()),
        ] {
            if len != n as usize {
                return Err(Error::LengthMismatch { what, got: len, n });
            }
        }
        for d in self.boundary_plus.iter().chain(&self.boundary_minus) {
            if !d.is_real_valued() {
                return Err(Error::ComplexBoundaryData);
            }
        }
        Ok(())
    }

    /// True when any boundary entry is distribution-kind.
    pub fn has_distribution_data(&self) -> bool {
        self.boundary_plus
            .iter()
            .chain(&self.boundary_minus)
            .any(|d| d.kind() == DataKind::Distribution)
    }
}

/// A Dirichlet problem: `Δ u = 0`, `u = g` on the circle.
#[derive(Debug, Clone)]
pub struct DirichletSpec {
    pub boundary: BicomplexBoundaryData,
}

/// A problem instance, for verification reports.
#[derive(Debug, Clone)]
pub enum Problem {
    Schwarz(SchwarzSpec),
    Dirichlet(DirichletSpec),
}

type ComponentFn = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;

/// One idempotent component of a solution field.
#[derive(Clone)]
pub enum FieldExpr {
    Poly(ComplexPoly),
    Func(ComponentFn),
}

impl FieldExpr {
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            FieldExpr::Poly(p) => Ok(p.eval(z)),
            FieldExpr::Func(f) => f(z),
        }
    }

    fn add_poly(self, extra: ComplexPoly) -> Self {
        if extra.is_zero() {
            return self;
        }
        match self {
            FieldExpr::Poly(p) => FieldExpr::Poly(p.add(&extra)),
            FieldExpr::Func(f) => FieldExpr::Func(Arc::new(move |z| {
                Ok(f(z)? + extra.eval(z))
            })),
        }
    }
}

impl std::fmt::Debug for FieldExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        match self {
            FieldExpr::Poly(p) => write!(f, "Poly({} terms)", p.terms().count()),
            FieldExpr::Func(_) => f.write_str("Func(..)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Spectral,
    Quadrature,
}

/// Which theorem and path produced a field, plus resolution metadata.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub problem: String,
    pub path: String,
    pub kind: PathKind,
}

/// An evaluatable solution `w = p+ w+ + p- w-`.
#[derive(Debug, Clone)]
pub struct SolutionField {
    plus: FieldExpr,
    minus: FieldExpr,
    provenance: Provenance,
}

impl SolutionField {
    pub fn new(plus: FieldExpr, minus: FieldExpr, provenance: Provenance) -> Self {
        Self {
            plus,
            minus,
            provenance,
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Bicomplex> {
        Ok(Bicomplex::from_idempotent(
            self.plus.eval(z)?,
            self.minus.eval(z)?,
        ))
    }

    pub fn eval_plus(&self, z: Complex64) -> Result<Complex64> {
        self.plus.eval(z)
    }

    pub fn eval_minus(&self, z: Complex64) -> Result<Complex64> {
        self.minus.eval(z)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Component polynomials, when the field was assembled spectrally.
    pub fn component_polys(&self) -> Option<(&ComplexPoly, &ComplexPoly)> {
        match (&self.plus, &self.minus) {
            (FieldExpr::Poly(p), FieldExpr::Poly(m)) => Some((p, m)),
            _ => None,
        }
    }

    /// Adds polynomial perturbations to the components; used by the
    /// negative-control demo to corrupt an otherwise valid solution.
    pub fn with_injection(self, plus: Option<ComplexPoly>, minus: Option<ComplexPoly>) -> Self {
        let provenance = Provenance {
            problem: format!("{} + injection", self.provenance.problem),
            path: self.provenance.path.clone(),
            kind: self.provenance.kind,
        };
        Self {
            plus: match plus {
                Some(p) => self.plus.add_poly(p),
                None => self.plus,
            },
            minus: match minus {
                Some(m) => self.minus.add_poly(m),
                None => self.minus,
            },
            provenance,
        }
    }
}

// ---------------------------------------------------------------------------
// First-order Schwarz problems.
// ---------------------------------------------------------------------------

/// Homogeneous bicomplex Schwarz problem: `∂̄w = 0`, `Re w± = b±`,
/// `Im w±(0) = c±`. The solution is `p+ (conj(pairing(b+)) + i c+) +
/// p- (pairing(b-) + i c-)`.
pub fn solve_schwarz_homogeneous(
    boundary_plus: &BoundaryFourierData,
    boundary_minus: &BoundaryFourierData,
    c_plus: f64,
    c_minus: f64,
    path: &EvalPath,
) -> Result<SolutionField> {
    let spec = SchwarzSpec::first_order(
        boundary_plus.clone(),
        boundary_minus.clone(),
        c_plus,
        c_minus,
        Source::Zero,
    );
    solve_first_order(&spec, path, "schwarz homogeneous")
}

/// Nonhomogeneous first-order problem: adds `T_B(f)` to the homogeneous
/// solution. Distribution-kind data routes through the same pairing.
pub fn solve_schwarz_nonhomogeneous(spec: &SchwarzSpec, path: &EvalPath) -> Result<SolutionField> {
    if spec.order != 1 {
        return Err(Error::NotFirstOrder(spec.order));
    }
    solve_first_order(spec, path, "schwarz nonhomogeneous")
}

/// First-order problem with distributional boundary values, solved by
/// pairing against `P + iQ` (conjugated for the `w+` component).
pub fn solve_schwarz_distributional(spec: &SchwarzSpec, path: &EvalPath) -> Result<SolutionField> {
    if spec.order != 1 {
        return Err(Error::NotFirstOrder(spec.order));
    }
    solve_first_order(spec, path, "schwarz distributional")
}

fn solve_first_order(spec: &SchwarzSpec, path: &EvalPath, label: &str) -> Result<SolutionField> {
    spec.validate()?;
    if spec.order != 1 {
        return Err(Error::NotFirstOrder(spec.order));
    }
    let provenance = Provenance {
        problem: format!("{label} (n=1)"),
        path: path.label(),
        kind: path.kind(),
    };
    let (bp, bm) = (&spec.boundary_plus[0], &spec.boundary_minus[0]);
    let (cp, cm) = (spec.c_plus[0], spec.c_minus[0]);
    match path {
        EvalPath::Spectral => {
            let src = spec.source.as_poly().ok_or(Error::SpectralNeedsPolynomial)?;
            let ic = |c: f64| ComplexPoly::constant(Complex64::new(0.0, c));
            let plus = schwarz_extension(bp)
                .conj()
                .add(&ic(cp))
                .add(&t_star_poly(&src.plus_poly()));
            let minus = schwarz_extension(bm)
                .add(&ic(cm))
                .add(&t_poly(&src.minus_poly()));
            Ok(SolutionField::new(
                FieldExpr::Poly(plus),
                FieldExpr::Poly(minus),
                provenance,
            ))
        }
        EvalPath::Quadrature(params) => {
            if bp.kind() != DataKind::Function || bm.kind() != DataKind::Function {
                return Err(Error::QuadratureNeedsFunction);
            }
            let circle = params.circle_rule();
            let disk = params.disk_rule();
            let r_max = params.r_max;
            let plus: ComponentFn = {
                let b = bp.clone();
                let circle = circle.clone();
                let disk = disk.clone();
                let source = spec.source.clone();
                Arc::new(move |z| {
                    guard_radius(z, r_max)?;
                    let mut v = schwarz_integral(&b, z, &circle)?.conj()
                        + Complex64::new(0.0, cp);
                    if !source.is_zero() {
                        v += t_star_quadrature(|zeta| source.eval(zeta).plus(), z, &disk)?;
                    }
                    Ok(v)
                })
            };
            let minus: ComponentFn = {
                let b = bm.clone();
                let source = spec.source.clone();
                Arc::new(move |z| {
                    guard_radius(z, r_max)?;
                    let mut v = schwarz_integral(&b, z, &circle)? + Complex64::new(0.0, cm);
                    if !source.is_zero() {
                        v += t_quadrature(|zeta| source.eval(zeta).minus(), z, &disk)?;
                    }
                    Ok(v)
                })
            };
            Ok(SolutionField::new(
                FieldExpr::Func(plus),
                FieldExpr::Func(minus),
                provenance,
            ))
        }
    }
}

fn guard_radius(z: Complex64, r_max: f64) -> Result<()> {
    if z.norm() > r_max {
        Err(Error::OutsideQuadratureDomain(z.norm(), r_max))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Higher-order Schwarz problem.
// ---------------------------------------------------------------------------

/// Kernel-moment pairing
/// `(1/2π) ⟨b, (P + iQ)(θ - ·) (e^{i·} - z + conj(e^{i·} - z))^k⟩`
/// assembled as a polynomial in `(z, z̄)`.
pub(crate) fn moment_pairing(b: &BoundaryFourierData, k: u32) -> ComplexPoly {
    let mut out = ComplexPoly::zero();
    for (&(alpha, beta), u) in &moment_expansion(k) {
        let mu = alpha as i64 - beta as i64;
        // (1/2π)⟨b, S(t) e^{iµt}⟩ = b̂(-µ) + 2 Σ_{m≥1} b̂(m-µ) z^m.
        let mut pairing = ComplexPoly::constant(b.coeff(-mu as i32));
        for (kk, c) in b.iter() {
            let m = kk as i64 + mu;
            if m >= 1 {
                pairing.add_term(m as u32, 0, 2.0 * c);
            }
        }
        out = out.add(&u.mul(&pairing));
    }
    out
}

/// One idempotent component of the order-`n` solution, per the solution
/// formula: origin-constant sum, kernel-moment pairings, and the area term.
/// `c_sign` is `+1` for the `w-` component and `-1` for the conjugated `w+`
/// assembly.
pub(crate) fn higher_order_component(
    boundary: &[BoundaryFourierData],
    constants: &[f64],
    src: &ComplexPoly,
    n: u32,
    c_sign: f64,
) -> ComplexPoly {
    let z_plus_zbar = ComplexPoly::from_terms([
        ((1, 0), Complex64::new(1.0, 0.0)),
        ((0, 1), Complex64::new(1.0, 0.0)),
    ]);
    let mut out = area_term(src, n);
    let mut factorial = 1.0;
    for k in 0..n {
        if k > 0 {
            factorial *= k as f64;
        }
        let ku = k as usize;
        if constants[ku] != 0.0 {
            let coeff = Complex64::new(0.0, c_sign * constants[ku] / factorial);
            out = out.add(&z_plus_zbar.pow(k).scale(coeff));
        }
        if !boundary[ku].is_zero() {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            out = out.add(
                &moment_pairing(&boundary[ku], k).scale(Complex64::new(sign / factorial, 0.0)),
            );
        }
    }
    out
}

/// Order-`n` bicomplex Schwarz problem (`1 ≤ n ≤ 3`), assembled from the
/// closed solution formula: `w-` directly, `w+` as the conjugate of the
/// mirrored assembly with source `conj ∘ f+`. Spectral path only; the source
/// must be polynomial (or zero).
pub fn solve_schwarz_higher_order(spec: &SchwarzSpec, path: &EvalPath) -> Result<SolutionField> {
    spec.validate()?;
    if matches!(path, EvalPath::Quadrature(_)) {
        return Err(Error::HigherOrderSpectralOnly);
    }
    let src = spec
        .source
        .as_poly()
        .ok_or(Error::HigherOrderNeedsPolynomial)?;
    let n = spec.order;
    let minus = higher_order_component(
        &spec.boundary_minus,
        &spec.c_minus,
        &src.minus_poly(),
        n,
        1.0,
    );
    let plus = higher_order_component(
        &spec.boundary_plus,
        &spec.c_plus,
        &src.plus_poly().conj(),
        n,
        -1.0,
    )
    .conj();
    Ok(SolutionField::new(
        FieldExpr::Poly(plus),
        FieldExpr::Poly(minus),
        Provenance {
            problem: format!("schwarz higher-order (n={n})"),
            path: path.label(),
            kind: PathKind::Spectral,
        },
    ))
}

// ---------------------------------------------------------------------------
// Dirichlet problems.
// ---------------------------------------------------------------------------

/// Bicomplex Dirichlet problem for `L¹`-type (here: trigonometric) boundary
/// functions: componentwise Poisson extension. Distribution-kind data routes
/// to the distributional variant.
pub fn solve_dirichlet(spec: &DirichletSpec, path: &EvalPath) -> Result<SolutionField> {
    if spec.boundary.kind() == DataKind::Distribution {
        return solve_dirichlet_distributional(spec, path);
    }
    let provenance = Provenance {
        problem: "dirichlet".into(),
        path: path.label(),
        kind: path.kind(),
    };
    match path {
        EvalPath::Spectral => Ok(SolutionField::new(
            FieldExpr::Poly(poisson_extension(&spec.boundary.plus)),
            FieldExpr::Poly(poisson_extension(&spec.boundary.minus)),
            provenance,
        )),
        EvalPath::Quadrature(params) => {
            let circle = params.circle_rule();
            let r_max = params.r_max;
            let component = |data: BoundaryFourierData| -> ComponentFn {
                let circle = circle.clone();
                Arc::new(move |z: Complex64| {
                    guard_radius(z, r_max)?;
                    let (r, theta) = (z.norm(), z.arg());
                    let mut acc = Complex64::new(0.0, 0.0);
                    for t in circle.nodes() {
                        acc += data.sample(t)? * poisson(r, theta - t)?;
                    }
                    Ok(acc / circle.len() as f64)
                })
            };
            Ok(SolutionField::new(
                FieldExpr::Func(component(spec.boundary.plus.clone())),
                FieldExpr::Func(component(spec.boundary.minus.clone())),
                provenance,
            ))
        }
    }
}

/// Distributional bicomplex Dirichlet problem: componentwise pairing against
/// the Poisson kernel. Spectral path only.
pub fn solve_dirichlet_distributional(
    spec: &DirichletSpec,
    path: &EvalPath,
) -> Result<SolutionField> {
    if matches!(path, EvalPath::Quadrature(_)) && spec.boundary.kind() == DataKind::Distribution {
        return Err(Error::QuadratureNeedsFunction);
    }
    Ok(SolutionField::new(
        FieldExpr::Poly(poisson_extension(&spec.boundary.plus)),
        FieldExpr::Poly(poisson_extension(&spec.boundary.minus)),
        Provenance {
            problem: "dirichlet distributional".into(),
            path: EvalPath::Spectral.label(),
            kind: PathKind::Spectral,
        },
    ))
}
