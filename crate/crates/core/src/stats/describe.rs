//! Means, sample standard deviations, and five-number summaries.

use super::{ensure_finite, StatsError};

/// Compensated (Neumaier) sum.
fn csum(xs: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

pub fn mean(xs: &[f64]) -> Result<f64, StatsError> {
    if xs.is_empty() {
        return Err(StatsError::Empty);
    }
    ensure_finite(xs)?;
    Ok(csum(xs) / xs.len() as f64)
}

/// Arithmetic mean and sample standard deviation (n-1 denominator).
pub fn describe(xs: &[f64]) -> Result<(f64, f64), StatsError> {
    if xs.len() < 2 {
        return Err(StatsError::TooFew {
            required: 2,
            actual: xs.len(),
        });
    }
    ensure_finite(xs)?;
    let m = csum(xs) / xs.len() as f64;
    let sq: Vec<f64> = xs.iter().map(|&x| (x - m) * (x - m)).collect();
    let var = csum(&sq) / (xs.len() - 1) as f64;
    Ok((m, var.sqrt()))
}

/// Five-number summary with quartiles by linear interpolation of the
/// order statistics (inclusive positions `(n-1) * p`).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct FiveNumber {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let pos = (sorted.len() - 1) as f64 * p;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    sorted[lo] + frac * (sorted[hi] - sorted[lo])
}

pub fn box_whisker(xs: &[f64]) -> Result<FiveNumber, StatsError> {
    if xs.is_empty() {
        return Err(StatsError::Empty);
    }
    ensure_finite(xs)?;
    let mut sorted = xs.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(FiveNumber {
        min: sorted[0],
        q1: quantile_sorted(&sorted, 0.25),
        median: quantile_sorted(&sorted, 0.5),
        q3: quantile_sorted(&sorted, 0.75),
        max: sorted[sorted.len() - 1],
    })
}
