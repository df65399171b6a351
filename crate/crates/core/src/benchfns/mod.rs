//! Benchmark objective functions: classic shifted test functions, the
//! weighted composition framework built on top of five of them, and the
//! 2019 100-digit-challenge suite.

pub mod cec2019;
pub mod composite;
pub mod standard;

use thiserror::Error;

use crate::problem::{Direction, Problem, ProblemError};

pub use cec2019::{eval_cec2019, parse_shift_rotation, Cec2019Fn, ShiftRotation};
pub use composite::{eval_composite, CompositeFn};
pub use standard::{eval_standard, StandardFn};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown function id `{0}`")]
    UnknownId(String),
    #[error("{id} is a component primitive, not a benchmark target")]
    NotATarget { id: String },
    #[error("{id} expects dimension {expected}, got {got}")]
    DimensionMismatch {
        id: String,
        expected: usize,
        got: usize,
    },
    #[error("shift/rotation data malformed: {0}")]
    BadTransformData(String),
    #[error("{id} does not take shift/rotation data")]
    TransformNotSupported { id: String },
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

/// Which benchmark family a function id belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Standard,
    Composite,
    Cec2019,
}

/// Coarse landscape class used for grouped rankings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionClass {
    Unimodal,
    Multimodal,
    Composite,
}

// Shared basic functions. The composition framework and the 2019 suite
// reuse these directly.

pub(crate) fn sphere(z: &[f64]) -> f64 {
    z.iter().map(|v| v * v).sum()
}

pub(crate) fn rastrigin(z: &[f64]) -> f64 {
    z.iter()
        .map(|&v| v * v - 10.0 * (2.0 * std::f64::consts::PI * v).cos() + 10.0)
        .sum()
}

pub(crate) fn griewank(z: &[f64]) -> f64 {
    let sum: f64 = z.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = z
        .iter()
        .enumerate()
        .map(|(i, &v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

/// Terms are grouped so the value at the origin is exactly zero.
pub(crate) fn ackley(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let rms = (z.iter().map(|v| v * v).sum::<f64>() / n).sqrt();
    let cos_mean = z
        .iter()
        .map(|&v| (2.0 * std::f64::consts::PI * v).cos())
        .sum::<f64>()
        / n;
    (20.0 - 20.0 * (-0.2 * rms).exp()) + (std::f64::consts::E - cos_mean.exp())
}

const WEIERSTRASS_A: f64 = 0.5;
const WEIERSTRASS_B: f64 = 3.0;
const WEIERSTRASS_KMAX: u32 = 20;

pub(crate) fn weierstrass(z: &[f64]) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut total = 0.0;
    for &v in z {
        for k in 0..=WEIERSTRASS_KMAX {
            let ak = WEIERSTRASS_A.powi(k as i32);
            let bk = WEIERSTRASS_B.powi(k as i32);
            total += ak * (two_pi * bk * (v + 0.5)).cos();
        }
    }
    let mut centre = 0.0;
    for k in 0..=WEIERSTRASS_KMAX {
        let ak = WEIERSTRASS_A.powi(k as i32);
        let bk = WEIERSTRASS_B.powi(k as i32);
        centre += ak * (two_pi * bk * 0.5).cos();
    }
    total - z.len() as f64 * centre
}

/// Resolve a function id string to its suite.
///
/// `F1`..`F12` are the classic functions, `F13`..`F18` (aliases
/// `CF1`..`CF6`) the composites, `CEC01`..`CEC10` the 2019 suite.
pub fn suite_of(id: &str) -> Option<Suite> {
    if let Some(rest) = id.strip_prefix("CEC") {
        return rest
            .parse::<u8>()
            .ok()
            .and_then(|n| (1..=10).contains(&n).then_some(Suite::Cec2019));
    }
    if let Some(rest) = id.strip_prefix("CF") {
        return rest
            .parse::<u8>()
            .ok()
            .and_then(|n| (1..=6).contains(&n).then_some(Suite::Composite));
    }
    if let Some(rest) = id.strip_prefix('F') {
        return rest.parse::<u8>().ok().and_then(|n| match n {
            1..=12 => Some(Suite::Standard),
            13..=18 => Some(Suite::Composite),
            _ => None,
        });
    }
    None
}

/// Landscape class of a benchmark-target id, for grouped rank averages.
pub fn class_of(id: &str) -> Option<FunctionClass> {
    match suite_of(id)? {
        Suite::Composite => Some(FunctionClass::Composite),
        Suite::Cec2019 => None,
        Suite::Standard => {
            let n: u8 = id.strip_prefix('F')?.parse().ok()?;
            match n {
                1..=7 => Some(FunctionClass::Unimodal),
                8..=12 => Some(FunctionClass::Multimodal),
                _ => None,
            }
        }
    }
}

/// Build the boxed problem for a benchmark-target id.
///
/// For the classic suite, `shifted` places the optimum at the published
/// shift vector; unshifted mode keeps the base optimum and uses the
/// reduced `[-5.12, 5.12]` box for F1 (the long-horizon protocol's only
/// range change). Composite and 2019-suite functions have fixed boxes and
/// dimensions; `dim` is validated against them (0 accepts the default).
pub fn make_problem(id: &str, dim: usize, shifted: bool) -> Result<Problem, BenchError> {
    match suite_of(id).ok_or_else(|| BenchError::UnknownId(id.to_string()))? {
        Suite::Standard => {
            let f = StandardFn::parse(id).ok_or_else(|| BenchError::UnknownId(id.to_string()))?;
            f.make_problem(dim, shifted)
        }
        Suite::Composite => {
            let f = CompositeFn::parse(id).ok_or_else(|| BenchError::UnknownId(id.to_string()))?;
            if dim != 0 && dim != composite::DIMENSION {
                return Err(BenchError::DimensionMismatch {
                    id: id.to_string(),
                    expected: composite::DIMENSION,
                    got: dim,
                });
            }
            Ok(f.make_problem())
        }
        Suite::Cec2019 => {
            let f = Cec2019Fn::parse(id).ok_or_else(|| BenchError::UnknownId(id.to_string()))?;
            if dim != 0 && dim != f.dimension() {
                return Err(BenchError::DimensionMismatch {
                    id: id.to_string(),
                    expected: f.dimension(),
                    got: dim,
                });
            }
            Ok(f.make_problem(None))
        }
    }
}

/// Every benchmark-target id, in suite order.
pub fn all_target_ids() -> Vec<String> {
    let mut ids = Vec::new();
    for f in StandardFn::ALL {
        if f.is_benchmark_target() {
            ids.push(f.id().to_string());
        }
    }
    for f in CompositeFn::ALL {
        ids.push(f.id().to_string());
    }
    for f in Cec2019Fn::ALL {
        ids.push(f.id().to_string());
    }
    ids
}

pub(crate) fn minimize_box(
    name: &str,
    dim: usize,
    lo: f64,
    hi: f64,
    f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
) -> Problem {
    Problem::on_box(name, dim, lo, hi, Direction::Minimize, f)
        .expect("static benchmark bounds are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_resolution() {
        assert_eq!(suite_of("F1"), Some(Suite::Standard));
        assert_eq!(suite_of("F12"), Some(Suite::Standard));
        assert_eq!(suite_of("F13"), Some(Suite::Composite));
        assert_eq!(suite_of("CF6"), Some(Suite::Composite));
        assert_eq!(suite_of("CEC01"), Some(Suite::Cec2019));
        assert_eq!(suite_of("CEC10"), Some(Suite::Cec2019));
        assert_eq!(suite_of("F19"), None);
        assert_eq!(suite_of("CEC11"), None);
        assert_eq!(suite_of("nope"), None);
    }

    #[test]
    fn classes() {
        assert_eq!(class_of("F1"), Some(FunctionClass::Unimodal));
        assert_eq!(class_of("F7"), Some(FunctionClass::Unimodal));
        assert_eq!(class_of("F9"), Some(FunctionClass::Multimodal));
        assert_eq!(class_of("F12"), Some(FunctionClass::Multimodal));
        assert_eq!(class_of("F13"), Some(FunctionClass::Composite));
        assert_eq!(class_of("CEC04"), None);
    }

    #[test]
    fn ackley_is_exactly_zero_at_origin() {
        assert_eq!(ackley(&[0.0; 10]), 0.0);
    }

    #[test]
    fn basic_function_reference_values() {
        let z = [0.5; 10];
        assert_eq!(rastrigin(&z), 202.5);
        assert!((griewank(&z) - 0.3130878930643841).abs() < 1e-12);
        assert!((ackley(&z) - 4.253654026568413).abs() < 1e-12);
        assert!((weierstrass(&z) - 39.99998092651367).abs() < 1e-9);
        assert_eq!(weierstrass(&[0.0; 10]), 0.0);
    }

    #[test]
    fn target_listing_has_expected_size() {
        // 10 classic targets + 6 composites + 10 CEC functions
        assert_eq!(all_target_ids().len(), 26);
    }
}
