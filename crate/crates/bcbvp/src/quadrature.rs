//! Closed-form kernels (Poisson, conjugate Poisson, Schwarz) and the
//! quadrature engine for circle and disk integrals.
//!
//! Circle integrals use the uniform trapezoid rule, which is spectrally
//! accurate for smooth periodic integrands and exact for trigonometric
//! polynomials of degree below the node count. Disk integrals use a tensor
//! rule: Gauss–Legendre in radius mapped to `(0, 1)` (so no node sits at the
//! origin) against uniformly spaced angles with a default half-step offset,
//! which keeps nodes off the positive real axis where evaluation points are
//! commonly placed. The singular `1/(ζ - z)` factor of the T-operator class
//! is absolutely integrable and handled without subtraction; accuracy is
//! certified against the exact polynomial oracle rather than by rule theory,
//! and convergence is documented to slow near `|z| → 1`.

use std::f64::consts::{PI, TAU};

use gauss_quad::GaussLegendre;
use num_complex::Complex64;

use crate::boundary::{BoundaryFourierData, DataKind};
use crate::error::{Error, Result};
use crate::par::{self, Strategy};

/// Quadrature evaluation is refused beyond this radius; use the spectral
/// path near the boundary.
pub const R_MAX_QUADRATURE: f64 = 0.999;

/// Default collision guard between disk nodes and evaluation points.
pub const DEFAULT_COLLISION_EPS: f64 = 1e-8;

/// Poisson kernel `P_r(θ) = (1 - r²)/(1 - 2r cos θ + r²)` for `r ∈ [0, 1)`.
pub fn poisson(r: f64, theta: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::RadiusOutOfRange(r));
    }
    Ok((1.0 - r * r) / (1.0 - 2.0 * r * theta.cos() + r * r))
}

/// Conjugate Poisson kernel `Q_r(θ) = 2r sin θ/(1 - 2r cos θ + r²)`.
pub fn conj_poisson(r: f64, theta: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::RadiusOutOfRange(r));
    }
    Ok(2.0 * r * theta.sin() / (1.0 - 2.0 * r * theta.cos() + r * r))
}

/// Schwarz kernel `(ζ + z)/(ζ - z)` for `ζ` on the circle and `z` inside;
/// its real and imaginary parts are `P_r(θ - t)` and `Q_r(θ - t)`.
pub fn schwarz_kernel(zeta: Complex64, z: Complex64) -> Result<Complex64> {
    if (zeta.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::NotOnCircle(zeta.norm()));
    }
    if z.norm() >= 1.0 {
        return Err(Error::RadiusOutOfRange(z.norm()));
    }
    Ok((zeta + z) / (zeta - z))
}

/// Uniform trapezoid rule on the circle: nodes `t_m = 2πm/N`, weights `2π/N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleRule {
    n: usize,
}

impl CircleRule {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "circle rule needs at least 2 nodes");
        Self { n }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |m| TAU * m as f64 / self.n as f64)
    }

    pub fn weight(&self) -> f64 {
        TAU / self.n as f64
    }
}

impl Default for CircleRule {
    fn default() -> Self {
        Self::new(256)
    }
}

/// Normalized circle integral `(1/2π) ∫ f(t) dt ≈ (1/N) Σ f(t_m)`.
pub fn circle_integral(rule: &CircleRule, f: impl Fn(f64) -> Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for t in rule.nodes() {
        acc += f(t);
    }
    acc / rule.len() as f64
}

/// Tensor rule for `∬_D · dξ dη`: Gauss–Legendre radii on `(0, 1)` against
/// the weight `ρ dρ` (applied explicitly), uniform angles with offset `φ0`.
#[derive(Debug, Clone)]
pub struct DiskRule {
    n_r: usize,
    n_t: usize,
    offset: f64,
    collision_eps: f64,
    /// Flattened `(node, weight)` pairs, radial-major then angular,
    /// ascending; summation follows this order for reproducibility.
    nodes: Vec<(Complex64, f64)>,
}

/// Gauss–Legendre nodes and weights mapped from `[-1, 1]` to `(lo, hi)`,
/// ascending.
fn legendre_panel(n: usize, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let gl = GaussLegendre::new(n).expect("panel needs n >= 2");
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    let mut panel: Vec<(f64, f64)> = gl
        .into_node_weight_pairs()
        .into_iter()
        .map(|(x, w)| (mid + half * x, half * w))
        .collect();
    panel.sort_by(|a, b| a.0.total_cmp(&b.0));
    panel
}

impl DiskRule {
    /// Default angular offset `π/N_t`.
    pub fn new(n_r: usize, n_t: usize) -> Self {
        Self::with_offset(n_r, n_t, PI / n_t as f64)
    }

    pub fn with_offset(n_r: usize, n_t: usize, offset: f64) -> Self {
        assert!(n_r >= 2 && n_t >= 2, "disk rule needs at least 2x2 nodes");
        Self::from_radial(n_r, n_t, offset, legendre_panel(n_r, 0.0, 1.0))
    }

    /// Same node budget with the radial rule split into panels at `|z|` and
    /// the angular grid rotated to straddle `arg z`.
    ///
    /// T-type integrands have an angular mean with a jump across `ρ = |z|`
    /// (the pole crosses the ring), which caps a single global radial rule
    /// at first-order accuracy; panel quadrature restores fast convergence
    /// without touching the integrand.
    pub fn adapted_to(&self, z: Complex64) -> Self {
        let r = z.norm();
        if r < 1e-12 || r >= 1.0 {
            return self.clone();
        }
        let inner = self.n_r / 2;
        let outer = self.n_r - inner;
        let mut radial = legendre_panel(inner.max(2), 0.0, r);
        radial.extend(legendre_panel(outer.max(2), r, 1.0));
        let offset = z.arg() + PI / self.n_t as f64;
        Self::from_radial(self.n_r, self.n_t, offset, radial)
            .with_collision_eps(self.collision_eps)
    }

    fn from_radial(n_r: usize, n_t: usize, offset: f64, radial: Vec<(f64, f64)>) -> Self {
        let angular_weight = TAU / n_t as f64;
        let mut nodes = Vec::with_capacity(radial.len() * n_t);
        for &(rho, w) in &radial {
            for b in 0..n_t {
                let t = offset + TAU * b as f64 / n_t as f64;
                nodes.push((Complex64::from_polar(rho, t), w * rho * angular_weight));
            }
        }
        Self {
            n_r,
            n_t,
            offset,
            collision_eps: DEFAULT_COLLISION_EPS,
            nodes,
        }
    }

    pub fn with_collision_eps(mut self, eps: f64) -> Self {
        self.collision_eps = eps;
        self
    }

    pub fn n_r(&self) -> usize {
        self.n_r
    }

    pub fn n_t(&self) -> usize {
        self.n_t
    }

    pub fn angular_offset(&self) -> f64 {
        self.offset
    }

    pub fn collision_eps(&self) -> f64 {
        self.collision_eps
    }

    pub fn nodes(&self) -> &[(Complex64, f64)] {
        &self.nodes
    }

    pub fn total_weight(&self) -> f64 {
        self.nodes.iter().map(|&(_, w)| w).sum()
    }

    /// Doubles both resolutions (offset follows the new angle count).
    pub fn refined(&self) -> Self {
        Self::new(2 * self.n_r, 2 * self.n_t).with_collision_eps(self.collision_eps)
    }

    /// Errors if any node lies within `collision_eps` of `z`.
    pub fn check_collision(&self, z: Complex64) -> Result<()> {
        for (index, &(node, _)) in self.nodes.iter().enumerate() {
            if (node - z).norm() < self.collision_eps {
                return Err(Error::NodeCollision {
                    index,
                    node,
                    z,
                    eps: self.collision_eps,
                });
            }
        }
        Ok(())
    }
}

impl Default for DiskRule {
    fn default() -> Self {
        Self::new(64, 256)
    }
}

/// Disk area integral `∬_D f dξ dη` over the tensor nodes.
///
/// Node values are summed in ascending node order regardless of execution
/// strategy; a non-finite value reports the offending node.
pub fn disk_integral(rule: &DiskRule, f: impl Fn(Complex64) -> Complex64 + Sync) -> Result<Complex64> {
    disk_integral_with(rule, f, Strategy::default())
}

pub fn disk_integral_with(
    rule: &DiskRule,
    f: impl Fn(Complex64) -> Complex64 + Sync,
    strategy: Strategy,
) -> Result<Complex64> {
    let values = par::map_collect(strategy, rule.nodes(), |&(node, w)| f(node) * w);
    let mut acc = Complex64::new(0.0, 0.0);
    for (index, v) in values.into_iter().enumerate() {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFiniteIntegrand {
                index,
                node: rule.nodes()[index].0,
            });
        }
        acc += v;
    }
    Ok(acc)
}

/// Schwarz boundary integral
/// `(1/2πi) ∮ γ(ζ) (ζ+z)/(ζ-z) dζ/ζ = (1/2π) ∫ γ(e^{it}) (P + iQ)(θ - t) dt`
/// by circle quadrature. Function-kind data only.
pub fn schwarz_integral(
    boundary: &BoundaryFourierData,
    z: Complex64,
    rule: &CircleRule,
) -> Result<Complex64> {
    if boundary.kind() != DataKind::Function {
        return Err(Error::QuadratureNeedsFunction);
    }
    if z.norm() > R_MAX_QUADRATURE {
        return Err(Error::OutsideQuadratureDomain(z.norm(), R_MAX_QUADRATURE));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for t in rule.nodes() {
        let zeta = Complex64::from_polar(1.0, t);
        acc += boundary.sample(t)? * ((zeta + z) / (zeta - z));
    }
    Ok(acc / rule.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn poisson_values() {
        assert!((poisson(0.0, 1.3).unwrap() - 1.0).abs() < 1e-15);
        assert!((poisson(0.5, 0.0).unwrap() - 3.0).abs() < 1e-15);
        assert!((poisson(0.5, PI).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(matches!(poisson(1.0, 0.0), Err(Error::RadiusOutOfRange(_))));
    }

    #[test]
    fn conj_poisson_values() {
        assert_eq!(conj_poisson(0.7, 0.0).unwrap(), 0.0);
        assert!((conj_poisson(0.5, PI / 2.0).unwrap() - 0.8).abs() < 1e-15);
        let (a, b) = (
            conj_poisson(0.3, 0.9).unwrap(),
            conj_poisson(0.3, -0.9).unwrap(),
        );
        assert!((a + b).abs() < 1e-15);
    }

    #[test]
    fn schwarz_kernel_values() {
        for t in [0.0, 1.0, 2.5] {
            let zeta = Complex64::from_polar(1.0, t);
            assert!((schwarz_kernel(zeta, c(0.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        }
        assert!((schwarz_kernel(c(1.0, 0.0), c(0.5, 0.0)).unwrap() - c(3.0, 0.0)).norm() < 1e-15);
        // Rotation invariance: ζ = i, z = ri has the same kernel as ζ = 1, z = r.
        let r = 0.37;
        let a = schwarz_kernel(c(0.0, 1.0), c(0.0, r)).unwrap();
        let b = schwarz_kernel(c(1.0, 0.0), c(r, 0.0)).unwrap();
        assert!((a - b).norm() < 1e-15);
        assert!(matches!(
            schwarz_kernel(c(2.0, 0.0), c(0.0, 0.0)),
            Err(Error::NotOnCircle(_))
        ));
    }

    #[test]
    fn schwarz_kernel_matches_poisson_parts_on_grid() {
        for i in 0..20 {
            let r = 0.95 * i as f64 / 19.0;
            for j in 0..20 {
                let theta = TAU * j as f64 / 20.0;
                for k in 0..20 {
                    let t = TAU * k as f64 / 20.0 + 0.05;
                    let s = schwarz_kernel(
                        Complex64::from_polar(1.0, t),
                        Complex64::from_polar(r, theta),
                    )
                    .unwrap();
                    assert!((s.re - poisson(r, theta - t).unwrap()).abs() < 1e-12);
                    assert!((s.im - conj_poisson(r, theta - t).unwrap()).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn circle_rule_weights_sum_to_tau() {
        let rule = CircleRule::new(37);
        let total = rule.weight() * rule.len() as f64;
        assert!((total - TAU).abs() < 1e-12);
    }

    #[test]
    fn circle_integral_examples() {
        let rule = CircleRule::new(64);
        assert!((circle_integral(&rule, |_| c(1.0, 0.0)) - c(1.0, 0.0)).norm() < 1e-15);
        let first_mode = circle_integral(&rule, |t| Complex64::from_polar(1.0, t));
        assert!(first_mode.norm() < 1e-14);
        let poisson_mean =
            circle_integral(&rule, |t| c(poisson(0.5, t).unwrap(), 0.0));
        assert!((poisson_mean - c(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn circle_integral_exact_for_low_degree() {
        // Degree-d trigonometric polynomials integrate exactly once N > d.
        let rule = CircleRule::new(8);
        for d in 1..8i32 {
            let v = circle_integral(&rule, |t| Complex64::from_polar(1.0, d as f64 * t));
            assert!(v.norm() < 1e-14, "degree {d}");
        }
    }

    #[test]
    fn disk_rule_invariants() {
        let rule = DiskRule::default();
        assert!((rule.total_weight() - PI).abs() < 1e-12);
        let min_rho = rule
            .nodes()
            .iter()
            .map(|&(n, _)| n.norm())
            .fold(f64::INFINITY, f64::min);
        assert!(min_rho > 1e-4);
        // Default offset keeps nodes off the positive real axis.
        assert!(rule
            .nodes()
            .iter()
            .all(|&(n, _)| n.im.abs() > 1e-12 || n.re < 0.0));
    }

    #[test]
    fn disk_integral_examples() {
        let rule = DiskRule::new(32, 64);
        let area = disk_integral(&rule, |_| c(1.0, 0.0)).unwrap();
        assert!((area - c(PI, 0.0)).norm() < 1e-12);
        let inv = disk_integral(&rule, |zeta| 1.0 / zeta).unwrap();
        assert!(inv.norm() < 1e-10);
        let sq = disk_integral(&rule, |zeta| c(zeta.norm_sqr(), 0.0)).unwrap();
        assert!((sq - c(PI / 2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn disk_integral_radial_polynomials_match_analytic() {
        let rule = DiskRule::new(32, 16);
        // ∬ |ζ|^{2m} = 2π/(2m + 2).
        for m in 0..6u32 {
            let got = disk_integral(&rule, |zeta| c(zeta.norm_sqr().powi(m as i32), 0.0)).unwrap();
            let want = TAU / (2.0 * m as f64 + 2.0);
            assert!((got - c(want, 0.0)).norm() < 1e-10, "m={m}");
        }
    }

    #[test]
    fn disk_integral_reports_nonfinite_node() {
        let rule = DiskRule::new(4, 4);
        let bad = rule.nodes()[5].0;
        let err = disk_integral(&rule, |zeta| {
            if zeta == bad {
                c(f64::NAN, 0.0)
            } else {
                c(1.0, 0.0)
            }
        });
        assert!(matches!(err, Err(Error::NonFiniteIntegrand { index: 5, .. })));
    }

    #[test]
    fn collision_guard_triggers() {
        let rule = DiskRule::new(8, 8);
        let node = rule.nodes()[10].0;
        assert!(matches!(
            rule.check_collision(node),
            Err(Error::NodeCollision { index: 10, .. })
        ));
        assert!(rule.check_collision(c(0.987, 0.0)).is_ok());
    }

    #[test]
    fn sequential_and_default_strategy_agree_bitwise() {
        let rule = DiskRule::new(16, 32);
        let f = |zeta: Complex64| (zeta + c(0.3, 0.1)) / (zeta - c(0.3, 0.1));
        let a = disk_integral_with(&rule, f, Strategy::Sequential).unwrap();
        let b = disk_integral(&rule, f).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn schwarz_integral_examples() {
        let rule = CircleRule::new(256);
        let one = BoundaryFourierData::constant(1.0);
        let z = c(0.41, -0.23);
        assert!((schwarz_integral(&one, z, &rule).unwrap() - c(1.0, 0.0)).norm() < 1e-12);

        let cos = BoundaryFourierData::cosine();
        assert!((schwarz_integral(&cos, z, &rule).unwrap() - z).norm() < 1e-12);

        let zero = BoundaryFourierData::zero(DataKind::Function);
        assert_eq!(schwarz_integral(&zero, z, &rule).unwrap(), c(0.0, 0.0));

        assert!(matches!(
            schwarz_integral(&cos, c(0.9995, 0.0), &rule),
            Err(Error::OutsideQuadratureDomain(..))
        ));
        assert!(matches!(
            schwarz_integral(&BoundaryFourierData::delta(0.0, 8), z, &rule),
            Err(Error::QuadratureNeedsFunction)
        ));
    }

    #[test]
    fn schwarz_integral_matches_spectral_pairing() {
        let rule = CircleRule::new(256);
        let d = BoundaryFourierData::function(
            [
                (0, c(0.4, 0.0)),
                (1, c(0.3, -0.1)),
                (-1, c(0.3, 0.1)),
                (4, c(-0.05, 0.2)),
                (-4, c(-0.05, -0.2)),
            ],
            true,
        )
        .unwrap();
        for i in 0..6 {
            let r = 0.9 * (i as f64 + 0.5) / 6.0;
            for j in 0..8 {
                let th = TAU * j as f64 / 8.0;
                let z = Complex64::from_polar(r, th);
                let quad = schwarz_integral(&d, z, &rule).unwrap();
                let exact = d.pair_schwarz_kernel(r, th).unwrap();
                assert!((quad - exact).norm() < 1e-10, "r={r} th={th}");
            }
        }
    }
}
