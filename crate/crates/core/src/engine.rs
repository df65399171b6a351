//! The ant-nesting optimizer.
//!
//! Each worker ant keeps its current and previous accepted position. Per
//! iteration every ant proposes one candidate move built from a bounded
//! heavy-tailed walk factor and the tendency rates toward the swarm-wide
//! best, and the move is kept only if it strictly improves the ant's own
//! fitness. The swarm best is refreshed immediately after every accepted
//! move, so later ants in the same iteration see it.

use serde::Serialize;
use thiserror::Error;

use crate::config::{AnaConfig, ConfigError, RMode, TendencyMode};
use crate::levy::LevyStep;
use crate::problem::{Direction, Problem};
use crate::rng::RandomSource;

#[derive(Debug, Error)]
pub enum AnaError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("objective returned non-finite value {value} at initial point {position:?}")]
    NonFiniteInit { value: f64, position: Vec<f64> },
}

/// One search agent.
#[derive(Debug, Clone, PartialEq)]
pub struct Ant {
    pub position: Vec<f64>,
    pub prev_position: Vec<f64>,
    pub fitness: f64,
    pub prev_fitness: f64,
}

/// Whole-swarm state between iterations.
#[derive(Debug, Clone)]
pub struct SwarmState {
    pub ants: Vec<Ant>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub iteration: usize,
    pub evaluations: u64,
    /// Candidate evaluations rejected because the objective returned a
    /// non-finite value.
    pub non_finite_rejections: u64,
}

/// Outcome of one completed run.
#[derive(Debug, Clone, Serialize)]
pub struct RunResult {
    /// Swarm-best fitness after each iteration.
    pub best_trace: Vec<f64>,
    pub final_position: Vec<f64>,
    pub final_fitness: f64,
    pub seed: u64,
    pub evaluations: u64,
    pub non_finite_rejections: u64,
}

/// Which update rule produced a position delta.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpdateRule {
    /// The ant sits on the swarm best: delta scales its own position.
    AtBest,
    /// Current equals previous position: delta scales the gap to best.
    Stationary,
    /// Regular weighted move; counts components that fell back to the
    /// stationary form because the weight denominator degenerated.
    Weighted { degenerate: usize },
}

/// Tendency rate between two evaluated points.
///
/// Per dimension the rate is the leg recovered from the coordinate gap and
/// the fitness gap; a negative radicand is folded back by absolute value.
/// In `EuclideanNorm` mode one scalar rate from the full distance is
/// broadcast to every dimension.
pub fn tendency(
    a_pos: &[f64],
    b_pos: &[f64],
    a_fit: f64,
    b_fit: f64,
    mode: TendencyMode,
) -> Vec<f64> {
    assert_eq!(a_pos.len(), b_pos.len(), "tendency operands differ in length");
    let df2 = (a_fit - b_fit) * (a_fit - b_fit);
    match mode {
        TendencyMode::PerDimension => a_pos
            .iter()
            .zip(b_pos)
            .map(|(&a, &b)| ((a - b) * (a - b) - df2).abs().sqrt())
            .collect(),
        TendencyMode::EuclideanNorm => {
            let dist2: f64 = a_pos
                .iter()
                .zip(b_pos)
                .map(|(&a, &b)| (a - b) * (a - b))
                .sum();
            let t = (dist2 - df2).abs().sqrt();
            vec![t; a_pos.len()]
        }
    }
}

/// Per-dimension deposition weight, `None` where the denominator is
/// degenerate and the caller must fall back to the stationary rule.
pub fn deposition_weight(
    t: &[f64],
    t_prev: &[f64],
    r: &[f64],
    direction: Direction,
    epsilon_guard: f64,
) -> Vec<Option<f64>> {
    assert!(t.len() == t_prev.len() && t.len() == r.len());
    t.iter()
        .zip(t_prev)
        .zip(r)
        .map(|((&ti, &tp), &ri)| {
            let (num, den) = match direction {
                Direction::Minimize => (ti, tp),
                Direction::Maximize => (tp, ti),
            };
            if den.abs() < epsilon_guard {
                None
            } else {
                Some(ri * num / den)
            }
        })
        .collect()
}

/// Proposed change of one ant's position.
pub fn position_delta(
    ant: &Ant,
    best_position: &[f64],
    best_fitness: f64,
    r: &[f64],
    config: &AnaConfig,
    direction: Direction,
) -> (Vec<f64>, UpdateRule) {
    if ant.position == best_position {
        let delta = r.iter().zip(&ant.position).map(|(&ri, &xi)| ri * xi).collect();
        return (delta, UpdateRule::AtBest);
    }
    if ant.position == ant.prev_position {
        let delta = r
            .iter()
            .zip(best_position)
            .zip(&ant.position)
            .map(|((&ri, &bi), &xi)| ri * (bi - xi))
            .collect();
        return (delta, UpdateRule::Stationary);
    }
    let t = tendency(
        best_position,
        &ant.position,
        best_fitness,
        ant.fitness,
        config.tendency_mode,
    );
    let t_prev = tendency(
        best_position,
        &ant.prev_position,
        best_fitness,
        ant.prev_fitness,
        config.tendency_mode,
    );
    let dw = deposition_weight(&t, &t_prev, r, direction, config.epsilon_guard);
    let mut degenerate = 0;
    let delta = dw
        .iter()
        .zip(r)
        .zip(best_position)
        .zip(&ant.position)
        .map(|(((w, &ri), &bi), &xi)| match w {
            Some(wi) => wi * (bi - xi),
            None => {
                degenerate += 1;
                ri * (bi - xi)
            }
        })
        .collect();
    (delta, UpdateRule::Weighted { degenerate })
}

/// Clip a point into the problem's box.
pub fn clamp_to_bounds(pos: &[f64], problem: &Problem) -> Vec<f64> {
    assert_eq!(pos.len(), problem.dimension());
    pos.iter()
        .zip(problem.lower())
        .zip(problem.upper())
        .map(|((&x, &lo), &hi)| x.clamp(lo, hi))
        .collect()
}

/// Draw uniform initial positions, evaluate them, and pick the first
/// fittest ant as the swarm best. Previous position and fitness start equal
/// to the current ones.
pub fn init_swarm(
    problem: &Problem,
    config: &AnaConfig,
    rng: &mut RandomSource,
) -> Result<SwarmState, AnaError> {
    config.validate()?;
    let dim = problem.dimension();
    let mut ants = Vec::with_capacity(config.population);
    for _ in 0..config.population {
        let position: Vec<f64> = (0..dim)
            .map(|d| rng.uniform(problem.lower()[d], problem.upper()[d]))
            .collect();
        let fitness = problem.evaluate(&position, rng);
        if !fitness.is_finite() {
            return Err(AnaError::NonFiniteInit {
                value: fitness,
                position,
            });
        }
        ants.push(Ant {
            prev_position: position.clone(),
            position,
            fitness,
            prev_fitness: fitness,
        });
    }
    let mut best = 0;
    for (i, ant) in ants.iter().enumerate() {
        if problem.direction().improves(ant.fitness, ants[best].fitness) {
            best = i;
        }
    }
    Ok(SwarmState {
        best_position: ants[best].position.clone(),
        best_fitness: ants[best].fitness,
        ants,
        iteration: 0,
        evaluations: config.population as u64,
        non_finite_rejections: 0,
    })
}

fn draw_r(config: &AnaConfig, levy: &LevyStep, rng: &mut RandomSource, dim: usize) -> Vec<f64> {
    match config.r_mode {
        RMode::ScalarPerAnt => vec![levy.draw(rng); dim],
        RMode::VectorPerDimension => (0..dim).map(|_| levy.draw(rng)).collect(),
    }
}

/// Advance the swarm by one iteration, updating every ant in index order.
pub fn step(
    state: &mut SwarmState,
    problem: &Problem,
    config: &AnaConfig,
    levy: &LevyStep,
    rng: &mut RandomSource,
) {
    let direction = problem.direction();
    for i in 0..state.ants.len() {
        let r = draw_r(config, levy, rng, problem.dimension());
        let (delta, _) = position_delta(
            &state.ants[i],
            &state.best_position,
            state.best_fitness,
            &r,
            config,
            direction,
        );
        let candidate: Vec<f64> = state.ants[i]
            .position
            .iter()
            .zip(&delta)
            .map(|(&x, &d)| x + d)
            .collect();
        let candidate = clamp_to_bounds(&candidate, problem);
        let fitness = problem.evaluate(&candidate, rng);
        state.evaluations += 1;
        if !fitness.is_finite() {
            state.non_finite_rejections += 1;
            continue;
        }
        let ant = &mut state.ants[i];
        if direction.improves(fitness, ant.fitness) {
            ant.prev_position = std::mem::replace(&mut ant.position, candidate);
            ant.prev_fitness = ant.fitness;
            ant.fitness = fitness;
            if direction.improves(fitness, state.best_fitness) {
                state.best_position = ant.position.clone();
                state.best_fitness = fitness;
            }
        }
    }
    state.iteration += 1;
}

/// Full run: initialization followed by exactly `config.iterations` steps.
/// Deterministic in `(problem, config.seed)`.
pub fn run(problem: &Problem, config: &AnaConfig) -> Result<RunResult, AnaError> {
    config.validate()?;
    let mut rng = RandomSource::from_seed(config.seed);
    let levy = LevyStep::new(config.levy_beta, config.levy_bound);
    let mut state = init_swarm(problem, config, &mut rng)?;
    let mut best_trace = Vec::with_capacity(config.iterations);
    for _ in 0..config.iterations {
        step(&mut state, problem, config, &levy, &mut rng);
        best_trace.push(state.best_fitness);
    }
    Ok(RunResult {
        final_position: state.best_position,
        final_fitness: state.best_fitness,
        best_trace,
        seed: config.seed,
        evaluations: state.evaluations,
        non_finite_rejections: state.non_finite_rejections,
    })
}
