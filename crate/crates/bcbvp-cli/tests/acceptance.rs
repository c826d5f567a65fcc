//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities (visible with `--nocapture`).
//!
//! Run with: cargo test -p bcbvp-cli --test acceptance -- --nocapture

use std::f64::consts::{FRAC_PI_2, TAU};
use std::time::Instant;

use bcbvp::bicomplex::Bicomplex;
use bcbvp::boundary::{truncated_schwarz_kernel, BoundaryFourierData, DataKind};
use bcbvp::poly::ComplexPoly;
use bcbvp::quadrature::{conj_poisson, poisson, schwarz_kernel, DiskRule};
use bcbvp::solvers::{
    solve_dirichlet, solve_schwarz_distributional, solve_schwarz_higher_order,
    solve_schwarz_homogeneous, solve_schwarz_nonhomogeneous, DirichletSpec, EvalPath, SchwarzSpec,
};
use bcbvp::t_operator::{
    t_bicomplex, t_bicomplex_iterated, t_poly, t_quadrature, PolynomialSource, Source,
};
use bcbvp::verify::{
    bc_dbar, five_point_laplacian, laplacian_identity_check, wirtinger_dz, wirtinger_dzbar,
};
use bcbvp::{BicomplexBoundaryData, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn polar_grid(n_r: usize, n_t: usize, r_max: f64) -> Vec<Complex64> {
    let mut pts = Vec::new();
    for i in 0..n_r {
        let r = r_max * (i as f64 + 1.0) / n_r as f64;
        for j in 0..n_t {
            pts.push(Complex64::from_polar(r, TAU * j as f64 / n_t as f64));
        }
    }
    pts
}

/// Five radii up to 0.8 and five angles at an irrational offset: a fixed,
/// untuned sample of the disk.
fn fair_25_points() -> Vec<Complex64> {
    (0..5)
        .flat_map(|i| {
            (0..5).map(move |j| {
                Complex64::from_polar(0.16 * (i as f64 + 1.0), 0.448799 + TAU * j as f64 / 5.0)
            })
        })
        .collect()
}

fn field_fn(
    field: &bcbvp::SolutionField,
) -> impl Fn(Complex64) -> Result<Bicomplex> + '_ {
    move |z| field.eval(z)
}

#[test]
fn criterion_01_idempotent_algebra() {
    let (pp, pm) = (Bicomplex::P_PLUS, Bicomplex::P_MINUS);
    assert_eq!(pp * pm, Bicomplex::ZERO);
    assert_eq!(pp * pp, pp);
    assert_eq!(pm * pm, pm);
    assert_eq!(pp + pm, Bicomplex::ONE);

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut sample = |rng: &mut ChaCha8Rng| {
        Bicomplex::new(
            c(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)),
            c(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)),
        )
    };
    let eps = f64::EPSILON;
    let mut worst_round = 0.0f64;
    let mut worst_mul = 0.0f64;
    for _ in 0..10_000 {
        let a = sample(&mut rng);
        let b = sample(&mut rng);

        let (p, m) = a.to_idempotent();
        let back = Bicomplex::from_idempotent(p, m);
        let scale = a.z1.norm().max(a.z2.norm()).max(1.0);
        let round_err = (back.z1 - a.z1).norm().max((back.z2 - a.z2).norm()) / scale;
        worst_round = worst_round.max(round_err);
        assert!(round_err <= 4.0 * eps, "round-trip error {round_err:e}");

        let ab = a * b;
        let ba = b * a;
        let mul_scale = (a.bnorm() * b.bnorm()).max(1.0) * 2.0;
        let comm_err = (ab.z1 - ba.z1).norm().max((ab.z2 - ba.z2).norm()) / mul_scale;
        assert!(comm_err <= 8.0 * eps);

        let (ap, am) = a.to_idempotent();
        let (bp, bm) = b.to_idempotent();
        let via_idem = Bicomplex::from_idempotent(ap * bp, am * bm);
        let mul_err = (via_idem.z1 - ab.z1).norm().max((via_idem.z2 - ab.z2).norm()) / mul_scale;
        worst_mul = worst_mul.max(mul_err);
        assert!(mul_err <= 8.0 * eps, "product equivalence error {mul_err:e}");
    }
    println!(
        "criterion 01 (idempotent algebra): PASS — exact idempotent identities; \
         10^4 round-trips worst {:.2} eps, product equivalence worst {:.2} eps",
        worst_round / eps,
        worst_mul / eps
    );
}

#[test]
fn criterion_02_kernel_identities() {
    let mut worst = 0.0f64;
    for i in 0..20 {
        let r = 0.95 * i as f64 / 19.0;
        for j in 0..20 {
            let theta = TAU * j as f64 / 20.0;
            let z = Complex64::from_polar(r, theta);
            for k in 0..20 {
                let t = TAU * k as f64 / 20.0 + 0.03;
                let s = schwarz_kernel(Complex64::from_polar(1.0, t), z).unwrap();
                worst = worst
                    .max((s.re - poisson(r, theta - t).unwrap()).abs())
                    .max((s.im - conj_poisson(r, theta - t).unwrap()).abs());
            }
        }
    }
    assert!(worst <= 1e-12, "kernel decomposition worst {worst:e}");
    let p_half = poisson(0.5, 0.0).unwrap();
    let q_half = conj_poisson(0.5, FRAC_PI_2).unwrap();
    assert!((p_half - 3.0).abs() <= 1e-14);
    assert!((q_half - 0.8).abs() <= 1e-14);
    println!(
        "criterion 02 (kernel identities): PASS — 8000-point decomposition worst {worst:.2e}; \
         P_1/2(0) = {p_half}, Q_1/2(pi/2) = {q_half}"
    );
}

#[test]
fn criterion_03_homogeneous_schwarz() {
    let cos = BoundaryFourierData::cosine();
    let w = solve_schwarz_homogeneous(&cos, &cos, 0.0, 0.0, &EvalPath::Spectral).unwrap();

    let mut worst_pointwise = 0.0f64;
    for z in polar_grid(15, 16, 0.9) {
        let want = Bicomplex::from_idempotent(z.conj(), z);
        worst_pointwise = worst_pointwise.max((w.eval(z).unwrap() - want).bnorm());
    }
    assert!(worst_pointwise <= 1e-10);

    let h = 1e-4;
    let f = field_fn(&w);
    let mut worst_pde = 0.0f64;
    let mut worst_holo = 0.0f64;
    for z in polar_grid(5, 5, 0.7) {
        worst_pde = worst_pde.max(bc_dbar(&f, z, h).unwrap().bnorm());
        let conj_plus = |z: Complex64| Ok(Bicomplex::from_complex(w.eval_plus(z)?.conj()));
        let minus = |z: Complex64| Ok(Bicomplex::from_complex(w.eval_minus(z)?));
        worst_holo = worst_holo
            .max(wirtinger_dzbar(&conj_plus, z, h).unwrap().bnorm())
            .max(wirtinger_dzbar(&minus, z, h).unwrap().bnorm());
    }
    assert!(worst_pde <= 1e-6, "pde residual {worst_pde:e}");
    assert!(worst_holo <= 1e-6, "holomorphy residual {worst_holo:e}");

    let origin = c(0.0, 0.0);
    let im_plus = w.eval_plus(origin).unwrap().im.abs();
    let im_minus = w.eval_minus(origin).unwrap().im.abs();
    assert!(im_plus <= 1e-12 && im_minus <= 1e-12);
    println!(
        "criterion 03 (homogeneous Schwarz): PASS — pointwise {worst_pointwise:.2e}, \
         dbar residual {worst_pde:.2e}, holomorphy {worst_holo:.2e}, \
         origin ({im_plus:.1e}, {im_minus:.1e})"
    );
}

#[test]
fn criterion_04_t_operator() {
    let points = fair_25_points();
    let rule = DiskRule::default();

    let mut worst_default = 0.0f64;
    for &z in &points {
        let got = t_quadrature(|_| c(1.0, 0.0), z, &rule).unwrap();
        worst_default = worst_default.max((got - (z.conj() - z)).norm());
    }
    assert!(worst_default <= 1e-3, "default rules worst {worst_default:e}");

    let started = Instant::now();
    let refined = rule.refined();
    let mut worst_refined = 0.0f64;
    for &z in &points {
        let got = t_quadrature(|_| c(1.0, 0.0), z, &refined).unwrap();
        worst_refined = worst_refined.max((got - (z.conj() - z)).norm());
    }
    let elapsed = started.elapsed();
    assert!(worst_refined <= 1e-4, "refined rules worst {worst_refined:e}");
    assert!(elapsed.as_secs() < 60, "refinement took {elapsed:?}");

    let oracle = t_poly(&ComplexPoly::one());
    let mut worst_oracle = 0.0f64;
    for &z in &points {
        worst_oracle = worst_oracle.max((oracle.eval(z) - (z.conj() - z)).norm());
    }
    assert!(worst_oracle <= 1e-12);
    println!(
        "criterion 04 (T operator): PASS — quadrature worst {worst_default:.2e} (default), \
         {worst_refined:.2e} (doubled, {elapsed:.1?}), oracle worst {worst_oracle:.2e}"
    );
}

#[test]
fn criterion_05_nonhomogeneous_schwarz() {
    let zero = BoundaryFourierData::zero(DataKind::Function);
    let spec = SchwarzSpec::first_order(
        zero.clone(),
        zero,
        0.0,
        0.0,
        Source::Poly(PolynomialSource::constant(Bicomplex::ONE)),
    );
    let w = solve_schwarz_nonhomogeneous(&spec, &EvalPath::Spectral).unwrap();

    let mut worst_pointwise = 0.0f64;
    for z in polar_grid(15, 16, 0.9) {
        let got = w.eval(z).unwrap();
        let want = Bicomplex::new(c(0.0, 0.0), c(-2.0 * z.im, 0.0));
        worst_pointwise = worst_pointwise.max((got - want).bnorm());
    }
    assert!(worst_pointwise <= 1e-10);

    let f = field_fn(&w);
    let mut worst_pde = 0.0f64;
    for z in polar_grid(5, 5, 0.7) {
        worst_pde = worst_pde.max((bc_dbar(&f, z, 1e-4).unwrap() - Bicomplex::ONE).bnorm());
    }
    assert!(worst_pde <= 1e-5);
    println!(
        "criterion 05 (nonhomogeneous Schwarz): PASS — field (0, -2y) to {worst_pointwise:.2e}, \
         dbar residual {worst_pde:.2e}"
    );
}

#[test]
fn criterion_06_distributional_schwarz() {
    let k = 64;
    let delta = BoundaryFourierData::delta(0.0, k);
    let spec = SchwarzSpec::first_order(delta.clone(), delta, 0.0, 0.0, Source::Zero);
    let w = solve_schwarz_distributional(&spec, &EvalPath::Spectral).unwrap();

    let mut worst_kernel = 0.0f64;
    for z in polar_grid(10, 12, 0.9) {
        let (r, theta) = (z.norm(), z.arg());
        let kernel = truncated_schwarz_kernel(r, theta, k) / TAU;
        worst_kernel = worst_kernel
            .max((w.eval_minus(z).unwrap() - kernel).norm())
            .max((w.eval_plus(z).unwrap() - kernel.conj()).norm());
    }
    assert!(worst_kernel <= 1e-12, "delta kernel worst {worst_kernel:e}");

    let cos_fn = BoundaryFourierData::cosine();
    let cos_dist =
        BoundaryFourierData::distribution([(1, c(0.5, 0.0)), (-1, c(0.5, 0.0))], true).unwrap();
    let wf = solve_schwarz_homogeneous(&cos_fn, &cos_fn, 0.0, 0.0, &EvalPath::Spectral).unwrap();
    let dspec = SchwarzSpec::first_order(cos_dist.clone(), cos_dist, 0.0, 0.0, Source::Zero);
    let wd = solve_schwarz_distributional(&dspec, &EvalPath::Spectral).unwrap();
    let mut worst_equiv = 0.0f64;
    for z in polar_grid(15, 16, 0.9) {
        worst_equiv = worst_equiv.max((wf.eval(z).unwrap() - wd.eval(z).unwrap()).bnorm());
    }
    assert!(worst_equiv <= 1e-10);
    println!(
        "criterion 06 (distributional Schwarz): PASS — truncated delta kernel to \
         {worst_kernel:.2e}, function/distribution equivalence {worst_equiv:.2e}"
    );
}

#[test]
fn criterion_07_higher_order_schwarz() {
    // n = 1 reduction: the general moment assembly against the first-order
    // solver, on a problem with boundary data, constants, and a source.
    let cos = BoundaryFourierData::cosine();
    let src = Source::Poly(PolynomialSource::new([(
        (1, 0),
        Bicomplex::new(c(0.4, 0.0), c(0.0, 0.2)),
    )]));
    let spec = SchwarzSpec::first_order(cos.clone(), cos.clone(), 0.3, -0.6, src);
    let first = solve_schwarz_nonhomogeneous(&spec, &EvalPath::Spectral).unwrap();
    let via_general = solve_schwarz_higher_order(&spec, &EvalPath::Spectral).unwrap();
    let mut worst_n1 = 0.0f64;
    for z in polar_grid(10, 12, 0.9) {
        worst_n1 = worst_n1.max((first.eval(z).unwrap() - via_general.eval(z).unwrap()).bnorm());
    }
    assert!(worst_n1 <= 1e-12, "n=1 reduction worst {worst_n1:e}");

    // n = 2 with vanishing order-1 data reproduces the n = 1 field.
    let zero = BoundaryFourierData::zero(DataKind::Function);
    let spec2 = SchwarzSpec {
        order: 2,
        boundary_plus: vec![cos.clone(), zero.clone()],
        boundary_minus: vec![cos.clone(), zero],
        c_plus: vec![0.0, 0.0],
        c_minus: vec![0.0, 0.0],
        source: Source::Zero,
    };
    let w2 = solve_schwarz_higher_order(&spec2, &EvalPath::Spectral).unwrap();
    let w1 = solve_schwarz_homogeneous(&cos, &cos, 0.0, 0.0, &EvalPath::Spectral).unwrap();
    let mut worst_n2 = 0.0f64;
    for z in polar_grid(10, 12, 0.9) {
        worst_n2 = worst_n2.max((w2.eval(z).unwrap() - w1.eval(z).unwrap()).bnorm());
    }
    assert!(worst_n2 <= 1e-8, "n=2 reduction worst {worst_n2:e}");

    // Iteration identity dbar(T_B^2(1)) = T_B(1) by finite differences.
    let one = Source::Poly(PolynomialSource::constant(Bicomplex::ONE));
    let rule = DiskRule::default();
    let t2 = |z: Complex64| t_bicomplex_iterated(&one, 2, z, &rule);
    let mut worst_iter = 0.0f64;
    for z in [c(0.2, 0.1), c(-0.35, 0.4), c(0.05, -0.6)] {
        let lhs = bc_dbar(&t2, z, 1e-3).unwrap();
        let rhs = t_bicomplex(&one, z, &rule).unwrap();
        worst_iter = worst_iter.max((lhs - rhs).bnorm());
    }
    assert!(worst_iter <= 1e-5, "iteration identity worst {worst_iter:e}");
    println!(
        "criterion 07 (higher-order Schwarz): PASS — n=1 reduction {worst_n1:.2e}, \
         n=2 collapse {worst_n2:.2e}, iteration identity {worst_iter:.2e}"
    );
}

#[test]
fn criterion_08_dirichlet() {
    // Zero data solves to the zero field at machine precision.
    let zero = BoundaryFourierData::zero(DataKind::Function);
    let zero_spec = DirichletSpec {
        boundary: BicomplexBoundaryData::new(zero.clone(), zero).unwrap(),
    };
    let w0 = solve_dirichlet(&zero_spec, &EvalPath::Spectral).unwrap();
    for z in polar_grid(6, 8, 0.9) {
        assert_eq!(w0.eval(z).unwrap(), Bicomplex::ZERO);
    }

    // g = e^{it} extends to the field z.
    let e_it = BoundaryFourierData::function([(1, c(1.0, 0.0))], false).unwrap();
    let spec = DirichletSpec {
        boundary: BicomplexBoundaryData::new(e_it.clone(), e_it).unwrap(),
    };
    let w = solve_dirichlet(&spec, &EvalPath::Spectral).unwrap();
    let mut worst_field = 0.0f64;
    for z in polar_grid(15, 16, 0.9) {
        let want = Bicomplex::new(z, c(0.0, 0.0));
        worst_field = worst_field.max((w.eval(z).unwrap() - want).bnorm());
    }
    assert!(worst_field <= 1e-10);

    // Harmonicity and the factorization identity 4 d dbar = laplacian.
    let h = 1e-3;
    let mixed = BoundaryFourierData::function(
        [(0, c(0.2, 0.0)), (2, c(0.3, -0.1)), (-2, c(0.3, 0.1))],
        true,
    )
    .unwrap();
    let mixed_spec = DirichletSpec {
        boundary: BicomplexBoundaryData::new(mixed.clone(), mixed).unwrap(),
    };
    let wm = solve_dirichlet(&mixed_spec, &EvalPath::Spectral).unwrap();
    let f = field_fn(&w);
    let fm = field_fn(&wm);
    let mut worst_lap = 0.0f64;
    for z in polar_grid(5, 8, 0.7) {
        worst_lap = worst_lap
            .max(five_point_laplacian(&f, z, h).unwrap().bnorm())
            .max(five_point_laplacian(&fm, z, h).unwrap().bnorm());
    }
    assert!(worst_lap <= 1e-4, "laplacian worst {worst_lap:e}");

    let smooth_suite: Vec<Box<dyn Fn(Complex64) -> Result<Bicomplex>>> = vec![
        Box::new(|z: Complex64| Ok(Bicomplex::from_real(z.re * z.re))),
        Box::new(|z: Complex64| Ok(Bicomplex::from_real(z.re * z.im))),
        Box::new(|z: Complex64| Ok(Bicomplex::from_real(z.norm_sqr()))),
        Box::new(|z: Complex64| {
            Ok(Bicomplex::new(z * z + z.conj(), c(0.5, 0.0) * z * z.conj()))
        }),
    ];
    let mut worst_fact = 0.0f64;
    for field in &smooth_suite {
        for z in [c(0.2, 0.3), c(-0.4, 0.1), c(0.0, -0.5)] {
            worst_fact = worst_fact.max(laplacian_identity_check(field, z, h).unwrap());
        }
    }
    assert!(worst_fact <= 1e-4, "factorization worst {worst_fact:e}");
    println!(
        "criterion 08 (Dirichlet): PASS — zero data exact, e^it field {worst_field:.2e}, \
         laplacian {worst_lap:.2e}, factorization {worst_fact:.2e}"
    );
}

#[test]
fn criterion_09_finite_difference_order() {
    // Order-2 convergence needs a field with a nonvanishing third
    // derivative; z^2 zbar provides it. On z zbar itself central stencils
    // are exact (the components are quadratic), so its error must sit at
    // the rounding floor instead of scaling with h^2.
    let cubic = |z: Complex64| Ok(Bicomplex::from_complex(z * z * z.conj()));
    let z0 = c(0.31, 0.17);
    let exact = 2.0 * z0 * z0.conj();
    let err = |h: f64| {
        (wirtinger_dz(&cubic, z0, h).unwrap().minus() - exact).norm()
    };
    let (e1, e2) = (err(2e-2), err(1e-2));
    let ratio = e1 / e2;
    assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");

    let quadratic = |z: Complex64| Ok(Bicomplex::from_complex(z * z.conj()));
    let floor_h = (wirtinger_dz(&quadratic, z0, 1e-4).unwrap().minus() - z0.conj()).norm();
    let floor_h2 = (wirtinger_dz(&quadratic, z0, 5e-5).unwrap().minus() - z0.conj()).norm();
    assert!(floor_h <= 1e-10 && floor_h2 <= 1e-10);
    println!(
        "criterion 09 (finite-difference order): PASS — halving ratio {ratio:.3} on z^2 zbar; \
         z zbar stencil exact to ({floor_h:.1e}, {floor_h2:.1e})"
    );
}

#[test]
fn criterion_10_cli() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_bcbvp");
    for (name, expected) in [
        ("dirichlet-e_it", 0),
        ("schwarz-homog-cos", 0),
        ("schwarz-nonhomog-const", 0),
        ("schwarz-dist-delta", 0),
        ("schwarz-order2", 0),
        ("negative-control", 1),
    ] {
        let out = Command::new(bin)
            .args(["verify", "--input", &format!("demo:{name}")])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(expected), "demo {name}");
    }

    let run = || {
        Command::new(bin)
            .args(["solve", "--input", "demo:schwarz-homog-cos"])
            .output()
            .unwrap()
            .stdout
    };
    let (a, b) = (run(), run());
    assert!(!a.is_empty());
    assert_eq!(a, b, "repeated runs differ");
    println!(
        "criterion 10 (CLI): PASS — demo exit codes as documented, negative control fails, \
         repeated runs byte-identical"
    );
}
