use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Granularity of the random walk factor `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RMode {
    /// One draw per ant per iteration, broadcast to every dimension.
    ScalarPerAnt,
    /// Independent draw per dimension.
    VectorPerDimension,
}

/// How the tendency rate treats the coordinate difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TendencyMode {
    /// Each dimension forms its own right triangle with the shared
    /// fitness difference.
    PerDimension,
    /// One scalar rate from the Euclidean distance, broadcast.
    EuclideanNorm,
}

/// How raw heavy-tailed steps are forced into `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevyBound {
    /// Redraw until the step falls inside the interval. Keeps the
    /// distribution free of point masses at the endpoints.
    Resample,
    /// Saturate out-of-range steps at the endpoints. Puts noticeable
    /// probability atoms on exactly -1 and 1, which turns the
    /// best-ant update into an exact jump to the origin whenever -1
    /// is drawn.
    Clamp,
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("population must be at least 2, got {0}")]
    PopulationTooSmall(usize),
    #[error("iterations must be at least 1")]
    NoIterations,
    #[error("epsilon_guard must be positive, got {0}")]
    NonPositiveEpsilon(f64),
    #[error("levy_beta must lie in (1, 2], got {0}")]
    BetaOutOfRange(f64),
}

/// Engine parameters for one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AnaConfig {
    /// Number of worker ants.
    pub population: usize,
    /// Iteration budget; each iteration updates every ant once.
    pub iterations: usize,
    /// Seed of the run's random stream.
    pub seed: u64,
    pub r_mode: RMode,
    pub tendency_mode: TendencyMode,
    /// Stability exponent of the heavy-tailed walk factor.
    pub levy_beta: f64,
    pub levy_bound: LevyBound,
    /// Threshold below which a tendency-rate denominator counts as
    /// degenerate and the update falls back to the stationary rule.
    pub epsilon_guard: f64,
}

impl Default for AnaConfig {
    fn default() -> Self {
        Self {
            population: 30,
            iterations: 500,
            seed: 0,
            r_mode: RMode::ScalarPerAnt,
            tendency_mode: TendencyMode::PerDimension,
            levy_beta: 1.5,
            levy_bound: LevyBound::Resample,
            epsilon_guard: 1e-12,
        }
    }
}

impl AnaConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.population < 2 {
            return Err(ConfigError::PopulationTooSmall(self.population));
        }
        if self.iterations == 0 {
            return Err(ConfigError::NoIterations);
        }
        if !(self.epsilon_guard > 0.0) {
            return Err(ConfigError::NonPositiveEpsilon(self.epsilon_guard));
        }
        if !(self.levy_beta > 1.0 && self.levy_beta <= 2.0) {
            return Err(ConfigError::BetaOutOfRange(self.levy_beta));
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}
