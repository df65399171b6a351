//! Ant-nesting optimizer, the benchmark suites it is evaluated on, two
//! engineering fitness problems, and the statistical machinery for
//! comparing result sets.

pub mod benchfns;
pub mod config;
pub mod engine;
pub mod levy;
pub mod problem;
pub mod realworld;
pub mod rng;
pub mod stats;

pub use config::{AnaConfig, ConfigError, LevyBound, RMode, TendencyMode};
pub use engine::{run, AnaError, Ant, RunResult, SwarmState};
pub use problem::{Direction, Problem, ProblemError};
pub use rng::RandomSource;
