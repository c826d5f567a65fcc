//! The complex area-integral operators `T` and `T*`, their bicomplex
//! assembly `T_B = p+ T*(f+) + p- T(f-)`, and iterates.
//!
//! `T` is the right-inverse of `∂/∂z̄` whose output has vanishing boundary
//! real part and vanishing imaginary part at the origin; `T*` is its
//! conjugate-equation counterpart (`T*(σ) = conj(T(conj ∘ σ))`, with the
//! star read as pointwise complex conjugation — verified numerically in the
//! tests rather than assumed).
//!
//! Two evaluation paths: polynomial sources go through the exact oracle
//! (particular antiderivative plus holomorphic Schwarz correction), which
//! stays closed-form under iteration; grid sources go through singular disk
//! quadrature. Iteration of the quadrature path is rejected — nested
//! singular quadrature has unbounded cost and no accuracy certificate.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bicomplex::Bicomplex;
use crate::boundary::{BoundaryFourierData, DataKind};
use crate::error::{Error, Result};
use crate::poly::{schwarz_poly_solve, ComplexPoly};
use crate::quadrature::{disk_integral, DiskRule, R_MAX_QUADRATURE};

/// Bidegree polynomial `f(ζ) = Σ c_{ab} ζ^a ζ̄^b` with bicomplex
/// coefficients — the right-hand side of `∂̄w = f` on the oracle path.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "WireFormat", into = "WireFormat")]
pub struct PolynomialSource {
    terms: BTreeMap<(u32, u32), Bicomplex>,
}

/// JSON form: `{"terms": [[a, b, re_z1, im_z1, re_z2, im_z2], ...]}`.
#[derive(Serialize, Deserialize)]
struct WireFormat {
    terms: Vec<(u32, u32, f64, f64, f64, f64)>,
}

impl From<WireFormat> for PolynomialSource {
    fn from(w: WireFormat) -> Self {
        Self::new(w.terms.into_iter().map(|(a, b, r1, i1, r2, i2)| {
            (
                (a, b),
                Bicomplex::new(Complex64::new(r1, i1), Complex64::new(r2, i2)),
            )
        }))
    }
}

impl From<PolynomialSource> for WireFormat {
    fn from(p: PolynomialSource) -> Self {
        WireFormat {
            terms: p
                .terms
                .iter()
                .map(|(&(a, b), c)| (a, b, c.z1.re, c.z1.im, c.z2.re, c.z2.im))
                .collect(),
        }
    }
}

impl PolynomialSource {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), Bicomplex)>) -> Self {
        let mut map = BTreeMap::new();
        for ((a, b), c) in terms {
            if c != Bicomplex::ZERO {
                let e = map.entry((a, b)).or_insert(Bicomplex::ZERO);
                *e += c;
            }
        }
        map.retain(|_, c| *c != Bicomplex::ZERO);
        Self { terms: map }
    }

    pub fn constant(c: Bicomplex) -> Self {
        Self::new([((0, 0), c)])
    }

    /// Assembles from idempotent component polynomials `f±`.
    pub fn from_components(plus: &ComplexPoly, minus: &ComplexPoly) -> Self {
        let mut terms: BTreeMap<(u32, u32), (Complex64, Complex64)> = BTreeMap::new();
        for ((a, b), c) in plus.terms() {
            terms.entry((a, b)).or_default().0 = c;
        }
        for ((a, b), c) in minus.terms() {
            terms.entry((a, b)).or_default().1 = c;
        }
        Self::new(
            terms
                .into_iter()
                .map(|(k, (p, m))| (k, Bicomplex::from_idempotent(p, m))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Bicomplex)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// The `f+` component as a complex polynomial.
    pub fn plus_poly(&self) -> ComplexPoly {
        ComplexPoly::from_terms(self.terms().map(|(k, c)| (k, c.plus())))
    }

    /// The `f-` component as a complex polynomial.
    pub fn minus_poly(&self) -> ComplexPoly {
        ComplexPoly::from_terms(self.terms().map(|(k, c)| (k, c.minus())))
    }

    pub fn eval(&self, z: Complex64) -> Bicomplex {
        Bicomplex::from_idempotent(self.plus_poly().eval(z), self.minus_poly().eval(z))
    }
}

/// Source given only through point evaluation; forces the quadrature path.
#[derive(Clone)]
pub struct GridSource {
    eval: Arc<dyn Fn(Complex64) -> Bicomplex + Send + Sync>,
}

impl GridSource {
    pub fn new(f: impl Fn(Complex64) -> Bicomplex + Send + Sync + 'static) -> Self {
        Self { eval: Arc::new(f) }
    }

    pub fn eval(&self, z: Complex64) -> Bicomplex {
        (self.eval)(z)
    }
}

impl std::fmt::Debug for GridSource {
    fn fmt(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("GridSource(..)")
    }
}

/// Right-hand side of a Schwarz problem.
#[derive(Debug, Clone, Default)]
pub enum Source {
    #[default]
    Zero,
    Poly(PolynomialSource),
    Grid(GridSource),
}

impl Source {
    pub fn is_zero(&self) -> bool {
        match self {
            Source::Zero => true,
            Source::Poly(p) => p.is_zero(),
            Source::Grid(_) => false,
        }
    }

    pub fn eval(&self, z: Complex64) -> Bicomplex {
        match self {
            Source::Zero => Bicomplex::ZERO,
            Source::Poly(p) => p.eval(z),
            Source::Grid(g) => g.eval(z),
        }
    }

    /// Polynomial content, if this source has one.
    pub fn as_poly(&self) -> Option<PolynomialSource> {
        match self {
            Source::Zero => Some(PolynomialSource::default()),
            Source::Poly(p) => Some(p.clone()),
            Source::Grid(_) => None,
        }
    }
}

/// A complex-valued source component for the scalar operators.
#[derive(Clone)]
pub enum ComplexSource {
    Poly(ComplexPoly),
    Grid(Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>),
}

// ---------------------------------------------------------------------------
// Oracle path: closed-form transforms on polynomials.
// ---------------------------------------------------------------------------

/// Exact `T(f)` for a polynomial source: the unique solution of
/// `∂w/∂z̄ = f`, `Re w = 0` on the circle, `Im w(0) = 0`.
pub fn t_poly(f: &ComplexPoly) -> ComplexPoly {
    schwarz_poly_solve(f, &BoundaryFourierData::zero(DataKind::Function), 0.0)
}

/// Exact `T*(f) = conj(T(conj ∘ f))`, the right-inverse of `∂/∂z`.
pub fn t_star_poly(f: &ComplexPoly) -> ComplexPoly {
    t_poly(&f.conj()).conj()
}

pub fn t_poly_iterated(f: &ComplexPoly, n: u32) -> Result<ComplexPoly> {
    if n == 0 {
        return Err(Error::ZeroIteration);
    }
    let mut out = f.clone();
    for _ in 0..n {
        out = t_poly(&out);
    }
    Ok(out)
}

pub fn t_star_poly_iterated(f: &ComplexPoly, n: u32) -> Result<ComplexPoly> {
    if n == 0 {
        return Err(Error::ZeroIteration);
    }
    let mut out = f.clone();
    for _ in 0..n {
        out = t_star_poly(&out);
    }
    Ok(out)
}

// The two halves of the T integrand, computed in closed form per monomial.
// With d = a - 1 - b, the angular integrals select a single radial moment
// (always ∫ρ^{2b+1}dρ), leaving polynomials in (z, z̄):
//
//   A(ζ^a ζ̄^b) = z^a z̄^{b+1}/(b+1) - { 0 (a ≤ b); 1/(2b+2) (a = b+1);
//                                        z^{a-b-1}/(b+1) (a ≥ b+2) }
//   B(ζ^a ζ̄^b) = -{ z^{b-a+1}/(b+1) (a ≤ b); 1/(2b+2) (a = b+1); 0 (else) }
//
// so that A + B reproduces `t_poly` on every monomial (checked in tests).

pub(crate) fn a_monomial(a: u32, b: u32) -> ComplexPoly {
    let inv = 1.0 / (b as f64 + 1.0);
    let mut p = ComplexPoly::monomial(a, b + 1, Complex64::new(inv, 0.0));
    if a == b + 1 {
        p.add_term(0, 0, Complex64::new(-0.5 * inv, 0.0));
    } else if a >= b + 2 {
        p.add_term(a - b - 1, 0, Complex64::new(-inv, 0.0));
    }
    p
}

pub(crate) fn b_monomial(a: u32, b: u32) -> ComplexPoly {
    let inv = 1.0 / (b as f64 + 1.0);
    if a == b + 1 {
        ComplexPoly::constant(Complex64::new(-0.5 * inv, 0.0))
    } else if a <= b {
        ComplexPoly::monomial(b - a + 1, 0, Complex64::new(-inv, 0.0))
    } else {
        ComplexPoly::zero()
    }
}

/// The two-slot area integral
/// `-(1/2π) ∬ [g(ζ)/ζ · (ζ+z)/(ζ-z) + conj(h(ζ))/ζ̄ · (1+zζ̄)/(1-zζ̄)] dξdη`
/// for polynomial slots; `I(f, f) = T(f)`.
pub(crate) fn kernel_slot_integral(g: &ComplexPoly, h: &ComplexPoly) -> ComplexPoly {
    let mut out = ComplexPoly::zero();
    for ((a, b), c) in g.terms() {
        out = out.add(&a_monomial(a, b).scale(c));
    }
    for ((a, b), c) in h.terms() {
        out = out.add(&b_monomial(a, b).scale(c.conj()));
    }
    out
}

/// Laurent expansion of `(ζ + ζ̄ - (z + z̄))^k` in powers `ζ^α ζ̄^β`, with
/// coefficients that are polynomials in `(z, z̄)`.
pub(crate) fn moment_expansion(k: u32) -> BTreeMap<(u32, u32), ComplexPoly> {
    let neg_two_x = ComplexPoly::from_terms([
        ((1, 0), Complex64::new(-1.0, 0.0)),
        ((0, 1), Complex64::new(-1.0, 0.0)),
    ]);
    let mut expansion: BTreeMap<(u32, u32), ComplexPoly> =
        BTreeMap::from([((0, 0), ComplexPoly::one())]);
    for _ in 0..k {
        let mut next: BTreeMap<(u32, u32), ComplexPoly> = BTreeMap::new();
        for (&(alpha, beta), u) in &expansion {
            for (key, add) in [
                ((alpha + 1, beta), u.clone()),
                ((alpha, beta + 1), u.clone()),
                ((alpha, beta), u.mul(&neg_two_x)),
            ] {
                let e = next.entry(key).or_insert_with(ComplexPoly::zero);
                *e = e.add(&add);
            }
        }
        next.retain(|_, u| !u.is_zero());
        expansion = next;
    }
    expansion
}

/// Area term of the order-`n` problem: the `T`-type integral against the
/// moment factor `(ζ - z + conj(ζ - z))^{n-1}`, normalized by
/// `(-1)^{n-1}/(n-1)!`.
///
/// The normalization makes the term the exact `n`-fold right-inverse: with
/// `M = ζ + ζ̄ - z - z̄`, differentiating under the integral gives
/// `∂z̄ A_n = -(n-1) A_{n-1}` (the Cauchy-kernel delta contribution dies
/// because `M` vanishes at `ζ = z`), so `(-1)^{n-1}/(n-1)! · A_n` is the
/// unique chain with `∂z̄`-image equal to the previous member and `A_1 = T`.
/// Equivalently `T^n(src)` — the identity the tests pin down against direct
/// iteration.
pub(crate) fn area_term(src: &ComplexPoly, n: u32) -> ComplexPoly {
    let mut out = ComplexPoly::zero();
    if src.is_zero() {
        return out;
    }
    for (&(alpha, beta), u) in &moment_expansion(n - 1) {
        let slot = kernel_slot_integral(&src.shift(alpha, beta), &src.shift(beta, alpha));
        out = out.add(&u.mul(&slot));
    }
    let mut factorial = 1.0;
    for k in 1..n {
        factorial *= k as f64;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    out.scale(Complex64::new(sign / factorial, 0.0))
}

// ---------------------------------------------------------------------------
// Quadrature path.
// ---------------------------------------------------------------------------

/// `T(f)(z)` by singular disk quadrature.
///
/// The rule supplies the node budget; evaluation uses its `z`-adapted
/// variant (radial panels split at `|z|`, angular grid rotated off `arg z`),
/// which keeps the pole between nodes and restores fast convergence.
pub fn t_quadrature(
    f: impl Fn(Complex64) -> Complex64 + Sync,
    z: Complex64,
    rule: &DiskRule,
) -> Result<Complex64> {
    if z.norm() > R_MAX_QUADRATURE {
        return Err(Error::OutsideQuadratureDomain(z.norm(), R_MAX_QUADRATURE));
    }
    let adapted = rule.adapted_to(z);
    adapted.check_collision(z)?;
    let integral = disk_integral(&adapted, |zeta| {
        let fz = f(zeta);
        fz / zeta * ((zeta + z) / (zeta - z))
            + fz.conj() / zeta.conj() * ((1.0 + z * zeta.conj()) / (1.0 - z * zeta.conj()))
    })?;
    Ok(-integral / TAU)
}

/// `T*(f)(z)` by singular disk quadrature.
pub fn t_star_quadrature(
    f: impl Fn(Complex64) -> Complex64 + Sync,
    z: Complex64,
    rule: &DiskRule,
) -> Result<Complex64> {
    if z.norm() > R_MAX_QUADRATURE {
        return Err(Error::OutsideQuadratureDomain(z.norm(), R_MAX_QUADRATURE));
    }
    let adapted = rule.adapted_to(z);
    adapted.check_collision(z)?;
    let integral = disk_integral(&adapted, |zeta| {
        let fz = f(zeta);
        fz / zeta.conj() * ((zeta + z).conj() / (zeta - z).conj())
            + fz.conj() / zeta * ((1.0 + z.conj() * zeta) / (1.0 - z.conj() * zeta))
    })?;
    Ok(-integral / TAU)
}

// ---------------------------------------------------------------------------
// Public value-level operations.
// ---------------------------------------------------------------------------

/// `T(f-)(z)`: oracle route for polynomial sources, quadrature otherwise.
pub fn t_complex(f: &ComplexSource, z: Complex64, rule: &DiskRule) -> Result<Complex64> {
    match f {
        ComplexSource::Poly(p) => Ok(t_poly(p).eval(z)),
        ComplexSource::Grid(g) => t_quadrature(|zeta| g(zeta), z, rule),
    }
}

/// `T*(f+)(z)`: oracle route for polynomial sources, quadrature otherwise.
pub fn t_star_complex(f: &ComplexSource, z: Complex64, rule: &DiskRule) -> Result<Complex64> {
    match f {
        ComplexSource::Poly(p) => Ok(t_star_poly(p).eval(z)),
        ComplexSource::Grid(g) => t_star_quadrature(|zeta| g(zeta), z, rule),
    }
}

/// `T_B(f)(z) = p+ T*(f+)(z) + p- T(f-)(z)`.
pub fn t_bicomplex(f: &Source, z: Complex64, rule: &DiskRule) -> Result<Bicomplex> {
    match f {
        Source::Zero => Ok(Bicomplex::ZERO),
        Source::Poly(p) => Ok(Bicomplex::from_idempotent(
            t_star_poly(&p.plus_poly()).eval(z),
            t_poly(&p.minus_poly()).eval(z),
        )),
        Source::Grid(g) => {
            let plus = {
                let g = g.clone();
                t_star_quadrature(move |zeta| g.eval(zeta).plus(), z, rule)?
            };
            let minus = t_quadrature(|zeta| g.eval(zeta).minus(), z, rule)?;
            Ok(Bicomplex::from_idempotent(plus, minus))
        }
    }
}

/// `T_B^n(f)(z) = p+ T*^n(f+)(z) + p- T^n(f-)(z)`, oracle path only.
pub fn t_bicomplex_iterated(f: &Source, n: u32, z: Complex64, rule: &DiskRule) -> Result<Bicomplex> {
    if n == 0 {
        return Err(Error::ZeroIteration);
    }
    if n == 1 {
        return t_bicomplex(f, z, rule);
    }
    match f.as_poly() {
        None => Err(Error::IteratedGridSource),
        Some(p) => Ok(Bicomplex::from_idempotent(
            t_star_poly_iterated(&p.plus_poly(), n)?.eval(z),
            t_poly_iterated(&p.minus_poly(), n)?.eval(z),
        )),
    }
}
