//! Descriptive statistics, algorithm ranking, and the hypothesis tests
//! used to compare optimizer result sets.

pub mod describe;
pub mod levene;
pub mod rank;
pub mod shapiro;
pub mod ttest;
pub mod wilcoxon;

use thiserror::Error;

pub use describe::{box_whisker, describe, mean, FiveNumber};
pub use levene::levene;
pub use rank::{rank, RankTable};
pub use shapiro::shapiro_wilk;
pub use ttest::{student_t, welch_t};
pub use wilcoxon::wilcoxon_signed_rank;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("sample is empty")]
    Empty,
    #[error("need at least {required} values, got {actual}")]
    TooFew { required: usize, actual: usize },
    #[error("sample size {actual} exceeds supported maximum {max}")]
    TooLarge { actual: usize, max: usize },
    #[error("paired samples differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("all paired differences are zero")]
    AllDifferencesZero,
    #[error("variance is zero; test statistic undefined")]
    ZeroVariance,
    #[error("sample is constant; statistic undefined")]
    ConstantSample,
    #[error("sample contains a non-finite value")]
    NonFinite,
    #[error("rank input is incomplete or inconsistent")]
    BadRankInput,
}

pub(crate) fn ensure_finite(xs: &[f64]) -> Result<(), StatsError> {
    if xs.iter().any(|v| !v.is_finite()) {
        Err(StatsError::NonFinite)
    } else {
        Ok(())
    }
}
