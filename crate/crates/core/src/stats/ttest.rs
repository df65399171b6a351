//! Two-sample location tests, two-tailed.
//!
//! The p-value comes from the regularized incomplete beta function:
//! for a t statistic with `df` degrees of freedom the two-tailed p is
//! `I_{df/(df+t^2)}(df/2, 1/2)`.

use statrs::function::beta::beta_reg;

use super::{ensure_finite, StatsError};

fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|&x| (x - m) * (x - m)).sum::<f64>() / (n - 1.0);
    (m, var)
}

fn two_tailed_p(t: f64, df: f64) -> f64 {
    if t == 0.0 {
        return 1.0;
    }
    beta_reg(df / 2.0, 0.5, df / (df + t * t))
}

fn check(a: &[f64], b: &[f64]) -> Result<(), StatsError> {
    for s in [a, b] {
        if s.len() < 2 {
            return Err(StatsError::TooFew {
                required: 2,
                actual: s.len(),
            });
        }
        ensure_finite(s)?;
    }
    Ok(())
}

/// Equal-variance (pooled) two-sample t-test.
pub fn student_t(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    check(a, b)?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (ma, va) = mean_var(a);
    let (mb, vb) = mean_var(b);
    let df = na + nb - 2.0;
    let pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / df;
    if pooled <= 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    let t = (ma - mb) / (pooled * (1.0 / na + 1.0 / nb)).sqrt();
    Ok(two_tailed_p(t, df))
}

/// Unequal-variance two-sample t-test with Welch-Satterthwaite degrees
/// of freedom.
pub fn welch_t(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    check(a, b)?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (ma, va) = mean_var(a);
    let (mb, vb) = mean_var(b);
    let sa = va / na;
    let sb = vb / nb;
    if sa + sb <= 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    let t = (ma - mb) / (sa + sb).sqrt();
    let df = (sa + sb) * (sa + sb)
        / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
    Ok(two_tailed_p(t, df))
}
