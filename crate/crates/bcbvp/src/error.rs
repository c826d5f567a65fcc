//! Library error type.

use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("radius r = {0} must satisfy r < 1")]
    RadiusOutOfRange(f64),
    #[error("|zeta| = {0} is not on the unit circle (tolerance 1e-12)")]
    NotOnCircle(f64),
    #[error("|z| = {0} exceeds the quadrature limit {1}; use the spectral path")]
    OutsideQuadratureDomain(f64, f64),
    #[error("quadrature node {index} at {node} lies within {eps} of the evaluation point {z}")]
    NodeCollision {
        index: usize,
        node: Complex64,
        z: Complex64,
        eps: f64,
    },
    #[error("integrand is not finite at node {index} ({node})")]
    NonFiniteIntegrand { index: usize, node: Complex64 },
    #[error("boundary data of kind `distribution` has no pointwise values")]
    DistributionSample,
    #[error("{samples} samples cannot resolve bandwidth K = {bandwidth} without aliasing (need at least 2K+1)")]
    Aliasing { samples: usize, bandwidth: usize },
    #[error("data marked real-valued violates conjugate symmetry at mode {0}")]
    NotRealValued(i32),
    #[error("Schwarz boundary data must be real-valued")]
    ComplexBoundaryData,
    #[error("mixed boundary data kinds: both idempotent components must be functions or both distributions")]
    MixedBoundaryKinds,
    #[error("iterated T requires n >= 1")]
    ZeroIteration,
    #[error("iterated T is supported on polynomial sources only; nested quadrature of the singular kernel carries no accuracy certificate")]
    IteratedGridSource,
    #[error("order n = {0} is outside the supported range 1..=3")]
    OrderOutOfRange(u32),
    #[error("spec supplies {got} {what} entries but order n = {n}")]
    LengthMismatch {
        what: &'static str,
        got: usize,
        n: u32,
    },
    #[error("the quadrature path requires function-kind boundary data; distributions pair spectrally only")]
    QuadratureNeedsFunction,
    #[error("the spectral path requires a polynomial (or zero) source; grid sources evaluate by quadrature")]
    SpectralNeedsPolynomial,
    #[error("this solver handles first-order problems only (got n = {0}); use the higher-order solver")]
    NotFirstOrder(u32),
    #[error("the higher-order solver runs on the spectral path only")]
    HigherOrderSpectralOnly,
    #[error("higher-order solver requires a polynomial (or zero) source")]
    HigherOrderNeedsPolynomial,
    #[error("finite-difference stencil of half-width {h} exits the disk at |z| = {r}")]
    StencilOutsideDisk { r: f64, h: f64 },
    #[error("grid radii must lie strictly inside the disk (got r_max = {0})")]
    GridOutsideDisk(f64),
    #[error("grid resolution must be at least 2 (got {0})")]
    GridTooCoarse(usize),
}
