//! Search boxes, objective problems and the static penalty used for
//! constrained problems.

use std::fmt;
use std::sync::Arc;

use crate::error::{invalid_argument, Error, Result};

/// Default coefficient of the quadratic static penalty.
pub const DEFAULT_PENALTY: f64 = 1e10;

/// Per-dimension lower/upper limits of the search box.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(invalid_argument("bounds must have at least one dimension"));
        }
        if lower.len() != upper.len() {
            return Err(invalid_argument(format!(
                "lower has {} entries but upper has {}",
                lower.len(),
                upper.len()
            )));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite()) || lo > hi {
                return Err(invalid_argument(format!(
                    "dimension {j}: lower {lo} and upper {hi} do not form a finite interval"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same `[lo, hi]` interval in every one of `d` dimensions.
    pub fn uniform(d: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; d], vec![hi; d])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *v >= *lo && *v <= *hi)
    }
}

/// Coordinate-wise projection of `position` onto the box.
///
/// NaN coordinates are mapped to the lower bound so the result is always
/// inside the box.
pub fn clamp(position: &[f64], bounds: &Bounds) -> Vec<f64> {
    debug_assert_eq!(position.len(), bounds.dimension());
    position
        .iter()
        .zip(bounds.lower.iter().zip(&bounds.upper))
        .map(|(&v, (&lo, &hi))| if v.is_nan() { lo } else { v.clamp(lo, hi) })
        .collect()
}

pub(crate) fn clamp_in_place(position: &mut [f64], bounds: &Bounds) {
    for (v, (&lo, &hi)) in position
        .iter_mut()
        .zip(bounds.lower.iter().zip(&bounds.upper))
    {
        *v = if v.is_nan() { lo } else { v.clamp(lo, hi) };
    }
}

type ScalarFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// An inequality constraint `g(x) <= 0`.
#[derive(Clone)]
pub struct Constraint {
    name: String,
    g: ScalarFn,
}

impl Constraint {
    pub fn new(name: impl Into<String>, g: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            g: Arc::new(g),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        (self.g)(x)
    }
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Constraint")
            .field("name", &self.name)
            .finish()
    }
}

/// Known global optimum of a problem, when one is documented.
#[derive(Debug, Clone, PartialEq)]
pub struct KnownOptimum {
    pub value: f64,
    pub location: Option<Vec<f64>>,
}

/// An objective with a search box and optional inequality constraints.
///
/// Constraints are turned into a static quadratic penalty:
/// `objective(x) + penalty * sum_k max(0, g_k(x) - tol)^2`, where `tol` is the
/// problem's feasibility tolerance (zero unless set).
#[derive(Clone)]
pub struct Problem {
    name: String,
    bounds: Bounds,
    objective: ScalarFn,
    constraints: Vec<Constraint>,
    penalty_coefficient: f64,
    feasibility_tolerance: f64,
    optimum: Option<KnownOptimum>,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("dimension", &self.dimension())
            .field("constraints", &self.constraints)
            .field("penalty_coefficient", &self.penalty_coefficient)
            .finish()
    }
}

impl Problem {
    pub fn new(
        name: impl Into<String>,
        bounds: Bounds,
        objective: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            bounds,
            objective: Arc::new(objective),
            constraints: Vec::new(),
            penalty_coefficient: DEFAULT_PENALTY,
            feasibility_tolerance: 0.0,
            optimum: None,
        }
    }

    pub fn with_constraint(mut self, constraint: Constraint) -> Self {
        self.constraints.push(constraint);
        self
    }

    pub fn with_penalty(mut self, coefficient: f64) -> Self {
        self.penalty_coefficient = coefficient;
        self
    }

    /// Constraint values up to `tol` count as satisfied.
    pub fn with_feasibility_tolerance(mut self, tol: f64) -> Self {
        self.feasibility_tolerance = tol;
        self
    }

    pub fn with_optimum(mut self, optimum: KnownOptimum) -> Self {
        self.optimum = Some(optimum);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.bounds.dimension()
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn penalty_coefficient(&self) -> f64 {
        self.penalty_coefficient
    }

    pub fn feasibility_tolerance(&self) -> f64 {
        self.feasibility_tolerance
    }

    pub fn optimum(&self) -> Option<&KnownOptimum> {
        self.optimum.as_ref()
    }

    /// Raw objective value, without any penalty.
    pub fn objective(&self, x: &[f64]) -> f64 {
        (self.objective)(x)
    }

    /// Constraint values `g_k(x)` in declaration order.
    pub fn constraint_values(&self, x: &[f64]) -> Vec<f64> {
        self.constraints.iter().map(|c| c.value(x)).collect()
    }

    /// Penalty term alone; zero when every constraint is satisfied.
    pub fn penalty(&self, x: &[f64]) -> f64 {
        let violation: f64 = self
            .constraints
            .iter()
            .map(|c| {
                let v = (c.value(x) - self.feasibility_tolerance).max(0.0);
                v * v
            })
            .sum();
        if violation == 0.0 {
            0.0
        } else {
            self.penalty_coefficient * violation
        }
    }

    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.constraints
            .iter()
            .all(|c| c.value(x) <= self.feasibility_tolerance)
    }

    /// Penalized objective. Lower is better.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension() {
            return Err(invalid_argument(format!(
                "problem `{}` has dimension {} but position has {} entries",
                self.name,
                self.dimension(),
                x.len()
            )));
        }
        let f = self.objective(x);
        let value = if self.constraints.is_empty() {
            f
        } else {
            let p = self.penalty(x);
            if p == 0.0 {
                f
            } else {
                f + p
            }
        };
        if !value.is_finite() {
            return Err(Error::Evaluation {
                problem: self.name.clone(),
                value,
            });
        }
        Ok(value)
    }
}
