//! Polar evaluation grids and the CSV grid format.
//!
//! Output is deterministic: rows are ordered radius-major, values are summed
//! and written in that order, and floats print in Rust's shortest
//! round-trip form, so identical configurations produce identical bytes.

use std::io::{self, Write};

use num_complex::Complex64;

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::solvers::SolutionField;

#[derive(Debug, Clone)]
pub struct GridSpec {
    pub n_r: usize,
    pub n_theta: usize,
    pub r_max: f64,
}

impl GridSpec {
    pub fn new(n_r: usize, n_theta: usize, r_max: f64) -> Result<Self> {
        if n_r < 2 {
            return Err(Error::GridTooCoarse(n_r));
        }
        if n_theta < 2 {
            return Err(Error::GridTooCoarse(n_theta));
        }
        if !(0.0 < r_max && r_max < 1.0) {
            return Err(Error::GridOutsideDisk(r_max));
        }
        Ok(Self {
            n_r,
            n_theta,
            r_max,
        })
    }

    /// Radius-major points with radii `r_max (i+1)/n_r` (strictly inside the
    /// disk, no duplicate origin) and uniform angles.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let mut pts = Vec::with_capacity(self.n_r * self.n_theta);
        for i in 0..self.n_r {
            let r = self.r_max * (i as f64 + 1.0) / self.n_r as f64;
            for j in 0..self.n_theta {
                pts.push((r, std::f64::consts::TAU * j as f64 / self.n_theta as f64));
            }
        }
        pts
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n_r: 15,
            n_theta: 16,
            r_max: 0.9,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GridRow {
    pub r: f64,
    pub theta: f64,
    pub value: Bicomplex,
}

pub fn evaluate_grid(field: &SolutionField, grid: &GridSpec) -> Result<Vec<GridRow>> {
    evaluate_grid_with(field, grid, Strategy::default())
}

pub fn evaluate_grid_with(
    field: &SolutionField,
    grid: &GridSpec,
    strategy: Strategy,
) -> Result<Vec<GridRow>> {
    let points = grid.points();
    let values = par::map_collect(strategy, &points, |&(r, theta)| {
        field.eval(Complex64::from_polar(r, theta))
    });
    points
        .iter()
        .zip(values)
        .map(|(&(r, theta), value)| {
            Ok(GridRow {
                r,
                theta,
                value: value?,
            })
        })
        .collect()
}

pub const GRID_CSV_HEADER: &str =
    "r,theta,re_z1,im_z1,re_z2,im_z2,re_wplus,im_wplus,re_wminus,im_wminus";

pub fn write_grid_csv<W: Write>(rows: &[GridRow], out: &mut W) -> io::Result<()> {
    writeln!(out, "{GRID_CSV_HEADER}")?;
    for row in rows {
        let b = row.value;
        let (p, m) = b.to_idempotent();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            row.r, row.theta, b.z1.re, b.z1.im, b.z2.re, b.z2.im, p.re, p.im, m.re, m.im
        )?;
    }
    Ok(())
}
