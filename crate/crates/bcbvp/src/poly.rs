//! Complex polynomials in `(z, z̄)` with finitely many bidegree terms.
//!
//! These closed-form fields carry the whole spectral path: boundary
//! extensions of trigonometric data are polynomials in `z` (or `z̄`), and the
//! area-integral operators map polynomials to polynomials, so solutions
//! assemble symbolically and evaluate to machine precision.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::boundary::BoundaryFourierData;

/// `Σ c_{ab} z^a z̄^b` stored sparsely by bidegree `(a, b)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexPoly {
    terms: BTreeMap<(u32, u32), Complex64>,
}

impl ComplexPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, c);
        p
    }

    pub fn monomial(a: u32, b: u32, c: Complex64) -> Self {
        let mut p = Self::default();
        p.add_term(a, b, c);
        p
    }

    /// The identity field `z`.
    pub fn variable() -> Self {
        Self::monomial(1, 0, Complex64::new(1.0, 0.0))
    }

    /// The anti-holomorphic field `z̄`.
    pub fn variable_conj() -> Self {
        Self::monomial(0, 1, Complex64::new(1.0, 0.0))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Complex64)>) -> Self {
        let mut p = Self::default();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Complex64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> Complex64 {
        self.terms
            .get(&(a, b))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if *entry == Complex64::new(0.0, 0.0) {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        if s == Complex64::new(0.0, 0.0) {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, &c)| (k, c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies by the monomial `z^da z̄^db`.
    pub fn shift(&self, da: u32, db: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), &c)| ((a + da, b + db), c))
                .collect(),
        }
    }

    /// Pointwise complex conjugate of the field: `z^a z̄^b ↦ conj(c) z^b z̄^a`.
    pub fn conj(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), &c)| ((b, a), c.conj()))
                .collect(),
        }
    }

    /// Symbolic Wirtinger derivative `∂/∂z`.
    pub fn dz(&self) -> Self {
        let mut out = Self::default();
        for ((a, b), c) in self.terms() {
            if a > 0 {
                out.add_term(a - 1, b, c * a as f64);
            }
        }
        out
    }

    /// Symbolic Wirtinger derivative `∂/∂z̄`.
    pub fn dzbar(&self) -> Self {
        let mut out = Self::default();
        for ((a, b), c) in self.terms() {
            if b > 0 {
                out.add_term(a, b - 1, c * b as f64);
            }
        }
        out
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let (max_a, max_b) = self.terms.keys().fold((0u32, 0u32), |(ma, mb), &(a, b)| {
            (ma.max(a), mb.max(b))
        });
        let mut zp = Vec::with_capacity(max_a as usize + 1);
        let mut zbp = Vec::with_capacity(max_b as usize + 1);
        let one = Complex64::new(1.0, 0.0);
        zp.push(one);
        zbp.push(one);
        for k in 1..=max_a as usize {
            let prev = zp[k - 1];
            zp.push(prev * z);
        }
        let zc = z.conj();
        for k in 1..=max_b as usize {
            let prev = zbp[k - 1];
            zbp.push(prev * zc);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for ((a, b), c) in self.terms() {
            acc += c * zp[a as usize] * zbp[b as usize];
        }
        acc
    }

    /// Total degree of the highest term.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    /// Full complex circle trace `p(e^{it}) = Σ_µ m_µ e^{iµt}` as a mode map.
    pub fn circle_trace(&self) -> BTreeMap<i32, Complex64> {
        let mut modes: BTreeMap<i32, Complex64> = BTreeMap::new();
        for ((a, b), c) in self.terms() {
            let mu = a as i32 - b as i32;
            *modes.entry(mu).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        modes.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        modes
    }

    /// Real part of the circle trace, as real-valued trigonometric data:
    /// `γ̂(k) = (m_k + conj(m_{-k}))/2`.
    pub fn circle_trace_real(&self) -> BoundaryFourierData {
        let modes = self.circle_trace();
        let get = |k: i32| {
            modes
                .get(&k)
                .copied()
                .unwrap_or(Complex64::new(0.0, 0.0))
        };
        let coeffs: Vec<(i32, Complex64)> = modes
            .keys()
            .flat_map(|&k| [k, -k])
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|k| (k, 0.5 * (get(k) + get(-k).conj())))
            .collect();
        BoundaryFourierData::function(coeffs, true)
            .expect("trace symmetrization is conjugate-symmetric by construction")
    }
}

/// Holomorphic extension paired against the Schwarz kernel:
/// `ĝ(0) + 2 Σ_{k≥1} ĝ(k) z^k`. For real-valued data this is the unique
/// holomorphic field with boundary real part `g` and vanishing imaginary
/// part at the origin.
pub fn schwarz_extension(d: &BoundaryFourierData) -> ComplexPoly {
    let mut p = ComplexPoly::zero();
    p.add_term(0, 0, d.coeff(0));
    for (k, c) in d.iter() {
        if k >= 1 {
            p.add_term(k as u32, 0, 2.0 * c);
        }
    }
    p
}

/// Harmonic (Poisson) extension: `Σ_k ĝ(k) r^{|k|} e^{ikθ}`, i.e. positive
/// modes extend holomorphically as `z^k` and negative modes as `z̄^{|k|}`.
pub fn poisson_extension(d: &BoundaryFourierData) -> ComplexPoly {
    let mut p = ComplexPoly::zero();
    for (k, c) in d.iter() {
        if k >= 0 {
            p.add_term(k as u32, 0, c);
        } else {
            p.add_term(0, (-k) as u32, c);
        }
    }
    p
}

/// Particular solution of `∂w/∂z̄ = f` for polynomial `f`:
/// each monomial `c z^a z̄^b` lifts to `c z^a z̄^{b+1}/(b+1)`.
pub fn particular_antiderivative(f: &ComplexPoly) -> ComplexPoly {
    let mut p = ComplexPoly::zero();
    for ((a, b), c) in f.terms() {
        p.add_term(a, b + 1, c / (b as f64 + 1.0));
    }
    p
}

/// Closed-form solution of the complex Schwarz problem
/// `∂w/∂z̄ = f`, `Re w = g` on the circle, `Im w(0) = c`,
/// for a polynomial source and trigonometric boundary data.
///
/// Construction: particular antiderivative, minus the holomorphic extension
/// of its boundary real trace (computed exactly via `z̄ = 1/z` on `|z| = 1`),
/// plus the extension of `g` and the origin constant. Uniqueness of the
/// continuous Schwarz problem makes this THE solution, which is what lets it
/// serve as a machine-precision oracle for the singular area quadrature.
pub fn schwarz_poly_solve(
    source: &ComplexPoly,
    boundary: &BoundaryFourierData,
    c: f64,
) -> ComplexPoly {
    let part = particular_antiderivative(source);
    let trace = part.circle_trace_real();
    part.sub(&schwarz_extension(&trace))
        .add(&schwarz_extension(boundary))
        .add(&ComplexPoly::constant(Complex64::new(0.0, c)))
}
