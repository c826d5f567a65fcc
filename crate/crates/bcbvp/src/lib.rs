//! Bicomplex Schwarz and Dirichlet boundary value problems on the complex
//! unit disk.
//!
//! The library is organized around two evaluation paths:
//!
//! - a **spectral / oracle path** that assembles solutions as closed-form
//!   polynomials in `(z, z̄)` from finite Fourier boundary data and
//!   polynomial right-hand sides, and
//! - a **quadrature path** that evaluates the same boundary and area
//!   integrals numerically (trapezoid rule on the circle, Gauss–Legendre ×
//!   uniform-angle tensor rule on the disk).
//!
//! The [`verify`] module provides finite-difference Wirtinger operators and
//! residual reports that certify solver output against the defining
//! equations, independently of how the solution was produced.

pub mod bicomplex;
pub mod boundary;
pub mod error;
pub mod grid;
pub mod par;
pub mod poly;
pub mod problem;
pub mod quadrature;
pub mod solvers;
pub mod t_operator;
pub mod verify;

pub use bicomplex::Bicomplex;
pub use boundary::{BicomplexBoundaryData, BoundaryFourierData, DataKind};
pub use error::{Error, Result};
pub use poly::ComplexPoly;
pub use solvers::{DirichletSpec, EvalPath, PathKind, Problem, SchwarzSpec, SolutionField};
pub use t_operator::{GridSource, PolynomialSource, Source};
