//! The on-disk problem description and its validation.
//!
//! Schema:
//! ```json
//! {
//!   "problem": "schwarz" | "dirichlet",
//!   "n": 1,
//!   "boundary": {"plus": [<fourier data>, ...], "minus": [...]},
//!   "constants": {"plus": [0.0, ...], "minus": [...]},
//!   "source": {"terms": [[a, b, re_z1, im_z1, re_z2, im_z2], ...]},
//!   "path": "spectral" | "quadrature",
//!   "inject": {"plus": [[a, b, re, im], ...], "minus": [...]}
//! }
//! ```
//! `n`, `constants`, `source`, `path`, and `inject` are optional. Schema
//! violations are reported with JSON pointer paths. The `inject` section
//! adds polynomial perturbations to the solved components — it exists for
//! negative-control verification runs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::boundary::{BicomplexBoundaryData, BoundaryFourierData};
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::solvers::{
    solve_dirichlet, solve_schwarz_distributional, solve_schwarz_higher_order,
    solve_schwarz_nonhomogeneous, DirichletSpec, EvalPath, Problem, SchwarzSpec, SolutionField,
};
use crate::t_operator::{PolynomialSource, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemType {
    Schwarz,
    Dirichlet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathChoice {
    #[default]
    Spectral,
    Quadrature,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpecFile {
    pub problem: ProblemType,
    #[serde(default = "default_order")]
    pub n: u32,
    pub boundary: BoundarySection,
    #[serde(default, skip_serializing_if = "ConstantsSection::is_empty")]
    pub constants: ConstantsSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<PolynomialSource>,
    #[serde(default)]
    pub path: PathChoice,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inject: Option<InjectSection>,
}

fn default_order() -> u32 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundarySection {
    pub plus: Vec<BoundaryFourierData>,
    pub minus: Vec<BoundaryFourierData>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantsSection {
    #[serde(default)]
    pub plus: Vec<f64>,
    #[serde(default)]
    pub minus: Vec<f64>,
}

impl ConstantsSection {
    fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }
}

/// Polynomial perturbations `Σ c z^a z̄^b` per component, as
/// `[a, b, re, im]` rows.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InjectSection {
    #[serde(default)]
    pub plus: Vec<(u32, u32, f64, f64)>,
    #[serde(default)]
    pub minus: Vec<(u32, u32, f64, f64)>,
}

impl InjectSection {
    fn to_polys(&self) -> (Option<ComplexPoly>, Option<ComplexPoly>) {
        let build = |rows: &[(u32, u32, f64, f64)]| {
            if rows.is_empty() {
                None
            } else {
                Some(ComplexPoly::from_terms(rows.iter().map(
                    |&(a, b, re, im)| ((a, b), Complex64::new(re, im)),
                )))
            }
        };
        (build(&self.plus), build(&self.minus))
    }
}

/// A schema violation, located by a JSON pointer.
#[derive(Debug, Clone)]
pub struct SpecError {
    pub pointer: String,
    pub message: String,
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        if self.pointer.is_empty() {
            write!(f, "invalid problem spec: {}", self.message)
        } else {
            write!(
                f,
                "invalid problem spec at {}: {}",
                self.pointer, self.message
            )
        }
    }
}

impl std::error::Error for SpecError {}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for segment in path.iter() {
        match segment {
            Segment::Map { key } => {
                out.push('/');
                out.push_str(key);
            }
            Segment::Seq { index } => {
                out.push('/');
                out.push_str(&index.to_string());
            }
            Segment::Enum { variant } => {
                out.push('/');
                out.push_str(variant);
            }
            Segment::Unknown => out.push_str("/?"),
        }
    }
    out
}

/// Parses a problem spec, reporting malformed JSON and schema violations
/// with pointer paths.
pub fn parse_spec(json: &str) -> std::result::Result<ProblemSpecFile, SpecError> {
    let de = &mut serde_json::Deserializer::from_str(json);
    serde_path_to_error::deserialize(de).map_err(|e| SpecError {
        pointer: pointer_of(e.path()),
        message: e.inner().to_string(),
    })
}

/// A validated problem plus the requested path and optional injection.
#[derive(Debug, Clone)]
pub struct BuiltProblem {
    pub problem: Problem,
    pub path: PathChoice,
    pub injection: Option<(Option<ComplexPoly>, Option<ComplexPoly>)>,
}

impl ProblemSpecFile {
    /// Semantic validation beyond the serde schema: array lengths against
    /// the order, and per-problem field applicability.
    pub fn build(&self) -> std::result::Result<BuiltProblem, SpecError> {
        let fail = |pointer: &str, message: String| SpecError {
            pointer: pointer.into(),
            message,
        };
        let problem = match self.problem {
            ProblemType::Schwarz => {
                let n = self.n;
                if !(1..=3).contains(&n) {
                    return Err(fail("/n", format!("order must be 1..=3, got {n}")));
                }
                let expect = |pointer: &str, got: usize| {
                    if got != n as usize {
                        Err(fail(
                            pointer,
                            format!("expected {n} entries for order n = {n}, got {got}"),
                        ))
                    } else {
                        Ok(())
                    }
                };
                expect("/boundary/plus", self.boundary.plus.len())?;
                expect("/boundary/minus", self.boundary.minus.len())?;
                let constants = |values: &[f64], pointer: &str| {
                    if values.is_empty() {
                        Ok(vec![0.0; n as usize])
                    } else if values.len() != n as usize {
                        Err(fail(
                            pointer,
                            format!(
                                "expected {n} constants for order n = {n}, got {}",
                                values.len()
                            ),
                        ))
                    } else {
                        Ok(values.to_vec())
                    }
                };
                let c_plus = constants(&self.constants.plus, "/constants/plus")?;
                let c_minus = constants(&self.constants.minus, "/constants/minus")?;
                for (side, list) in [("plus", &self.boundary.plus), ("minus", &self.boundary.minus)]
                {
                    for (i, d) in list.iter().enumerate() {
                        if !d.is_real_valued() {
                            return Err(fail(
                                &format!("/boundary/{side}/{i}/real"),
                                "Schwarz boundary data must be real-valued".into(),
                            ));
                        }
                    }
                }
                Problem::Schwarz(SchwarzSpec {
                    order: n,
                    boundary_plus: self.boundary.plus.clone(),
                    boundary_minus: self.boundary.minus.clone(),
                    c_plus,
                    c_minus,
                    source: match &self.source {
                        None => Source::Zero,
                        Some(p) if p.is_zero() => Source::Zero,
                        Some(p) => Source::Poly(p.clone()),
                    },
                })
            }
            ProblemType::Dirichlet => {
                if self.n != 1 {
                    return Err(fail("/n", "a Dirichlet problem has no order".into()));
                }
                if !self.constants.is_empty() {
                    return Err(fail(
                        "/constants",
                        "a Dirichlet problem has no origin constants".into(),
                    ));
                }
                if self.source.is_some() {
                    return Err(fail("/source", "a Dirichlet problem has no source".into()));
                }
                for (side, list) in [("plus", &self.boundary.plus), ("minus", &self.boundary.minus)]
                {
                    if list.len() != 1 {
                        return Err(fail(
                            &format!("/boundary/{side}"),
                            format!("expected exactly 1 boundary entry, got {}", list.len()),
                        ));
                    }
                }
                let boundary = BicomplexBoundaryData::new(
                    self.boundary.plus[0].clone(),
                    self.boundary.minus[0].clone(),
                )
                .map_err(|e| fail("/boundary", e.to_string()))?;
                Problem::Dirichlet(DirichletSpec { boundary })
            }
        };
        Ok(BuiltProblem {
            problem,
            path: self.path,
            injection: self.inject.as_ref().map(InjectSection::to_polys),
        })
    }
}

/// Routes a problem to the solver its data calls for.
pub fn solve(problem: &Problem, path: &EvalPath) -> Result<SolutionField> {
    match problem {
        Problem::Schwarz(spec) => {
            if spec.order >= 2 {
                solve_schwarz_higher_order(spec, path)
            } else if spec.has_distribution_data() {
                solve_schwarz_distributional(spec, path)
            } else {
                solve_schwarz_nonhomogeneous(spec, path)
            }
        }
        Problem::Dirichlet(spec) => solve_dirichlet(spec, path),
    }
}

/// Applies an optional injection after solving.
pub fn solve_built(built: &BuiltProblem, path: &EvalPath) -> Result<SolutionField> {
    let field = solve(&built.problem, path)?;
    Ok(match &built.injection {
        None => field,
        Some((plus, minus)) => field.with_injection(plus.clone(), minus.clone()),
    })
}

/// Reconstructs an `EvalPath` from a path choice and quadrature parameters.
pub fn eval_path(choice: PathChoice, params: crate::solvers::QuadratureParams) -> EvalPath {
    match choice {
        PathChoice::Spectral => EvalPath::Spectral,
        PathChoice::Quadrature => EvalPath::Quadrature(params),
    }
}

impl From<Error> for SpecError {
    fn from(e: Error) -> Self {
        SpecError {
            pointer: String::new(),
            message: e.to_string(),
        }
    }
}
