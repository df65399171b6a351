use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rng::RandomSource;

/// Optimization direction of an objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Minimize,
    Maximize,
}

impl Direction {
    /// True when `candidate` is strictly fitter than `incumbent`.
    pub fn improves(self, candidate: f64, incumbent: f64) -> bool {
        match self {
            Direction::Minimize => candidate < incumbent,
            Direction::Maximize => candidate > incumbent,
        }
    }
}

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("bounds length {got} does not match dimension {dimension}")]
    BoundsLength { dimension: usize, got: usize },
    #[error("lower bound {lower} is not below upper bound {upper} in dimension {index}")]
    EmptyInterval {
        index: usize,
        lower: f64,
        upper: f64,
    },
}

type ObjectiveFn = dyn Fn(&[f64], &mut RandomSource) -> f64 + Send + Sync;

/// A bounded single-objective search problem.
///
/// The objective receives the run's [`RandomSource`] so noisy objectives
/// stay deterministic per seed; deterministic objectives ignore it.
#[derive(Clone)]
pub struct Problem {
    name: String,
    dimension: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    direction: Direction,
    objective: Arc<ObjectiveFn>,
}

impl Problem {
    pub fn new(
        name: impl Into<String>,
        lower: Vec<f64>,
        upper: Vec<f64>,
        direction: Direction,
        objective: impl Fn(&[f64], &mut RandomSource) -> f64 + Send + Sync + 'static,
    ) -> Result<Self, ProblemError> {
        let dimension = lower.len();
        if dimension == 0 {
            return Err(ProblemError::ZeroDimension);
        }
        if upper.len() != dimension {
            return Err(ProblemError::BoundsLength {
                dimension,
                got: upper.len(),
            });
        }
        for (i, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) {
                return Err(ProblemError::EmptyInterval {
                    index: i,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        Ok(Self {
            name: name.into(),
            dimension,
            lower,
            upper,
            direction,
            objective: Arc::new(objective),
        })
    }

    /// Deterministic objective on a symmetric box.
    pub fn on_box(
        name: impl Into<String>,
        dimension: usize,
        lower: f64,
        upper: f64,
        direction: Direction,
        objective: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Result<Self, ProblemError> {
        Self::new(
            name,
            vec![lower; dimension],
            vec![upper; dimension],
            direction,
            move |x, _| objective(x),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn evaluate(&self, x: &[f64], rng: &mut RandomSource) -> f64 {
        assert_eq!(x.len(), self.dimension, "point dimension mismatch");
        (self.objective)(x, rng)
    }

    /// Rebuild the problem with a different box, keeping the objective.
    pub fn with_bounds(&self, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, ProblemError> {
        if upper.len() != lower.len() {
            return Err(ProblemError::BoundsLength {
                dimension: lower.len(),
                got: upper.len(),
            });
        }
        if lower.is_empty() {
            return Err(ProblemError::ZeroDimension);
        }
        for (i, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) {
                return Err(ProblemError::EmptyInterval {
                    index: i,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        let mut p = self.clone();
        p.dimension = lower.len();
        p.lower = lower;
        p.upper = upper;
        Ok(p)
    }
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("dimension", &self.dimension)
            .field("direction", &self.direction)
            .finish_non_exhaustive()
    }
}
