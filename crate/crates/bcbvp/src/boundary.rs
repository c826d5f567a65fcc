//! Boundary functions and distributions on the unit circle, represented by
//! their finite two-sided Fourier coefficient sequences, and their exact
//! pairings against the Poisson and Schwarz kernels.
//!
//! Convention: `ĝ(k) = (1/2π) ∫ g(t) e^{-ikt} dt`, so a trigonometric
//! polynomial is `g(t) = Σ_k ĝ(k) e^{ikt}` and `⟨g, e^{ik·}⟩ = 2π ĝ(-k)`.
//! Distributions are restricted to finite Fourier data; a Dirac delta at
//! `t0` enters as the truncation `ĝ(k) = e^{-ik t0}/2π` for `|k| ≤ K`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether boundary data denotes a genuine function (pointwise values exist)
/// or a distribution (only pairings are defined).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DataKind {
    Function,
    Distribution,
}

/// Finite Fourier data `{ĝ(k) : |k| ≤ K}` for a function or distribution on
/// the circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WireFormat", into = "WireFormat")]
pub struct BoundaryFourierData {
    coeffs: BTreeMap<i32, Complex64>,
    kind: DataKind,
    real: bool,
}

/// JSON form: `{"kind": "function", "real": true, "coeffs": [[k, re, im], ...]}`.
#[derive(Serialize, Deserialize)]
struct WireFormat {
    kind: DataKind,
    real: bool,
    coeffs: Vec<(i32, f64, f64)>,
}

impl TryFrom<WireFormat> for BoundaryFourierData {
    type Error = Error;
    fn try_from(w: WireFormat) -> Result<Self> {
        let coeffs = w
            .coeffs
            .into_iter()
            .map(|(k, re, im)| (k, Complex64::new(re, im)));
        BoundaryFourierData::new(coeffs, w.kind, w.real)
    }
}

impl From<BoundaryFourierData> for WireFormat {
    fn from(d: BoundaryFourierData) -> Self {
        WireFormat {
            kind: d.kind,
            real: d.real,
            coeffs: d.coeffs.iter().map(|(&k, c)| (k, c.re, c.im)).collect(),
        }
    }
}

impl BoundaryFourierData {
    /// Builds data from `(k, ĝ(k))` pairs. When `real` is set, conjugate
    /// symmetry `ĝ(-k) = conj(ĝ(k))` is required to hold within `1e-12`.
    pub fn new(
        coeffs: impl IntoIterator<Item = (i32, Complex64)>,
        kind: DataKind,
        real: bool,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, c) in coeffs {
            if c != Complex64::new(0.0, 0.0) {
                *map.entry(k).or_insert(Complex64::new(0.0, 0.0)) += c;
            }
        }
        map.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        let d = Self {
            coeffs: map,
            kind,
            real,
        };
        if real {
            for (&k, &c) in &d.coeffs {
                let mirror = d.coeff(-k);
                if (mirror - c.conj()).norm() > 1e-12 {
                    return Err(Error::NotRealValued(k));
                }
            }
        }
        Ok(d)
    }

    pub fn function(
        coeffs: impl IntoIterator<Item = (i32, Complex64)>,
        real: bool,
    ) -> Result<Self> {
        Self::new(coeffs, DataKind::Function, real)
    }

    pub fn distribution(
        coeffs: impl IntoIterator<Item = (i32, Complex64)>,
        real: bool,
    ) -> Result<Self> {
        Self::new(coeffs, DataKind::Distribution, real)
    }

    pub fn zero(kind: DataKind) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            kind,
            real: true,
        }
    }

    /// The constant function `x`.
    pub fn constant(x: f64) -> Self {
        let mut coeffs = BTreeMap::new();
        if x != 0.0 {
            coeffs.insert(0, Complex64::new(x, 0.0));
        }
        Self {
            coeffs,
            kind: DataKind::Function,
            real: true,
        }
    }

    /// `cos t`, i.e. `ĝ(±1) = 1/2`.
    pub fn cosine() -> Self {
        let half = Complex64::new(0.5, 0.0);
        Self {
            coeffs: BTreeMap::from([(1, half), (-1, half)]),
            kind: DataKind::Function,
            real: true,
        }
    }

    /// Dirac delta at angle `t0`, truncated at bandwidth `k_max`:
    /// `ĝ(k) = e^{-ik t0}/2π` for `|k| ≤ k_max`.
    pub fn delta(t0: f64, k_max: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        for k in -(k_max as i32)..=(k_max as i32) {
            coeffs.insert(k, Complex64::from_polar(1.0 / TAU, -(k as f64) * t0));
        }
        Self {
            coeffs,
            kind: DataKind::Distribution,
            real: true,
        }
    }

    /// Discrete Fourier coefficients of `N` uniform samples `g(2πm/N)`,
    /// keeping modes `|k| ≤ bandwidth`. Exact for trigonometric polynomials
    /// of degree `≤ bandwidth` when `N ≥ 2·bandwidth + 1`.
    pub fn from_samples(samples: &[Complex64], bandwidth: u32) -> Result<Self> {
        let n = samples.len();
        if n < 2 * bandwidth as usize + 1 {
            return Err(Error::Aliasing {
                samples: n,
                bandwidth: bandwidth as usize,
            });
        }
        let scale = samples.iter().map(|s| s.norm()).fold(1.0f64, f64::max);
        let real = samples.iter().all(|s| s.im.abs() <= 1e-13 * scale);
        let mut coeffs = BTreeMap::new();
        for k in -(bandwidth as i32)..=(bandwidth as i32) {
            let mut acc = Complex64::new(0.0, 0.0);
            for (m, &s) in samples.iter().enumerate() {
                let t = TAU * m as f64 / n as f64;
                acc += s * Complex64::from_polar(1.0, -(k as f64) * t);
            }
            acc /= n as f64;
            if acc.norm() > 1e-13 * scale {
                coeffs.insert(k, acc);
            }
        }
        Ok(Self {
            coeffs,
            kind: DataKind::Function,
            real,
        })
    }

    pub fn kind(&self) -> DataKind {
        self.kind
    }

    pub fn is_real_valued(&self) -> bool {
        self.real
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `ĝ(k)`, zero outside the stored band.
    pub fn coeff(&self, k: i32) -> Complex64 {
        self.coeffs
            .get(&k)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Largest `|k|` with a stored coefficient.
    pub fn bandwidth(&self) -> u32 {
        self.coeffs
            .keys()
            .map(|k| k.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, Complex64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    /// Pointwise value `Σ_k ĝ(k) e^{ikt}`. Rejected for distributions.
    pub fn sample(&self, t: f64) -> Result<Complex64> {
        if self.kind == DataKind::Distribution {
            return Err(Error::DistributionSample);
        }
        Ok(self.eval_trig(t))
    }

    /// Trigonometric-polynomial evaluation without the kind guard; used
    /// internally where a distribution's finite Fourier data is interpreted
    /// as the trigonometric polynomial it truncates to.
    pub(crate) fn eval_trig(&self, t: f64) -> Complex64 {
        self.coeffs
            .iter()
            .map(|(&k, &c)| c * Complex64::from_polar(1.0, k as f64 * t))
            .sum()
    }

    /// Exact pairing against the Schwarz kernel `P + iQ`:
    /// `(1/2π)⟨g, P_r(θ-·) + iQ_r(θ-·)⟩ = ĝ(0) + 2 Σ_{k≥1} ĝ(k) z^k` with
    /// `z = r e^{iθ}`.
    pub fn pair_schwarz_kernel(&self, r: f64, theta: f64) -> Result<Complex64> {
        if r >= 1.0 {
            return Err(Error::RadiusOutOfRange(r));
        }
        let z = Complex64::from_polar(r, theta);
        let mut acc = self.coeff(0);
        let mut zk = Complex64::new(1.0, 0.0);
        let top = self.bandwidth() as i32;
        for k in 1..=top {
            zk *= z;
            let c = self.coeff(k);
            if c != Complex64::new(0.0, 0.0) {
                acc += 2.0 * c * zk;
            }
        }
        Ok(acc)
    }

    /// Exact pairing against the Poisson kernel — the harmonic extension
    /// `Σ_k ĝ(k) r^{|k|} e^{ikθ}`.
    pub fn pair_poisson_kernel(&self, r: f64, theta: f64) -> Result<Complex64> {
        if r >= 1.0 {
            return Err(Error::RadiusOutOfRange(r));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (&k, &c) in &self.coeffs {
            acc += c * r.powi(k.abs()) * Complex64::from_polar(1.0, k as f64 * theta);
        }
        Ok(acc)
    }

    /// Pointwise conjugate of the data: `ĝ(k) ↦ conj(ĝ(-k))`.
    pub fn conj(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (-k, c.conj())).collect(),
            kind: self.kind,
            real: self.real,
        }
    }

    /// Sum of two data sets of the same kind.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.kind != other.kind {
            return Err(Error::MixedBoundaryKinds);
        }
        Self::new(
            self.iter().chain(other.iter()),
            self.kind,
            self.real && other.real,
        )
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, c * s)).collect(),
            kind: self.kind,
            real: self.real,
        }
    }
}

/// Bicomplex boundary data `g = p+ g+ + p- g-` given by its idempotent
/// components.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BicomplexBoundaryData {
    pub plus: BoundaryFourierData,
    pub minus: BoundaryFourierData,
}

impl BicomplexBoundaryData {
    /// Both components must share a kind (functions or distributions).
    pub fn new(plus: BoundaryFourierData, minus: BoundaryFourierData) -> Result<Self> {
        if plus.kind() != minus.kind() {
            return Err(Error::MixedBoundaryKinds);
        }
        Ok(Self { plus, minus })
    }

    pub fn kind(&self) -> DataKind {
        self.plus.kind()
    }
}

/// Truncated Schwarz kernel `1 + 2 Σ_{k=1}^{K} z^k` at `z = r e^{iθ}` —
/// the exact pairing partner of a bandwidth-`K` truncated delta at 0,
/// scaled by `2π`.
pub fn truncated_schwarz_kernel(r: f64, theta: f64, k_max: u32) -> Complex64 {
    let z = Complex64::from_polar(r, theta);
    let mut acc = Complex64::new(1.0, 0.0);
    let mut zk = Complex64::new(1.0, 0.0);
    for _ in 1..=k_max {
        zk *= z;
        acc += 2.0 * zk;
    }
    acc
}

/// Truncated Poisson kernel `Σ_{|k| ≤ K} r^{|k|} e^{ikθ}`.
pub fn truncated_poisson_kernel(r: f64, theta: f64, k_max: u32) -> f64 {
    let mut acc = 1.0;
    for k in 1..=k_max {
        acc += 2.0 * r.powi(k as i32) * (k as f64 * theta).cos();
    }
    acc
}

/// Uniform sample angles `t_m = 2πm/N`.
pub fn uniform_angles(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |m| TAU * m as f64 / n as f64)
}
