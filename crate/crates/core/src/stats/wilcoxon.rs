//! Paired signed-rank test.
//!
//! Zero differences are dropped; tied absolute differences share average
//! ranks. Up to 30 effective pairs the two-sided p-value is exact: the
//! null distribution of the positive-rank sum over all `2^n` sign
//! assignments is built by dynamic programming over the observed rank
//! multiset (ranks are half-integers, so doubling makes them exact
//! integers), which enumerates the same assignment space without walking
//! each of the `2^n` masks. Larger samples use the tie-corrected normal
//! approximation with a continuity correction.

use statrs::distribution::{ContinuousCDF, Normal};

use super::{ensure_finite, StatsError};

const EXACT_LIMIT: usize = 30;

/// Average ranks of the absolute differences (ties share the mean rank).
fn average_ranks(abs_d: &[f64]) -> Vec<f64> {
    let n = abs_d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| abs_d[i].partial_cmp(&abs_d[j]).unwrap());
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && abs_d[order[j + 1]] == abs_d[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Exact two-sided p for the observed positive-rank sum, conditional on
/// the rank multiset. `counts[s]` ends up holding the number of sign
/// assignments whose positive-rank sum is `s/2`.
fn exact_two_sided_p(ranks: &[f64], w_plus: f64) -> f64 {
    let scaled: Vec<usize> = ranks.iter().map(|&r| (2.0 * r) as usize).collect();
    let total: usize = scaled.iter().sum();
    let mut counts = vec![0u64; total + 1];
    counts[0] = 1;
    for &r in &scaled {
        for s in (r..=total).rev() {
            counts[s] += counts[s - r];
        }
    }
    let w2 = (2.0 * w_plus).round() as usize;
    let all: f64 = (counts.iter().map(|&c| c as u128).sum::<u128>()) as f64;
    let le: u128 = counts[..=w2].iter().map(|&c| c as u128).sum();
    let ge: u128 = counts[w2..].iter().map(|&c| c as u128).sum();
    let tail = (le.min(ge)) as f64 / all;
    (2.0 * tail).min(1.0)
}

fn approx_two_sided_p(ranks: &[f64], w_plus: f64) -> f64 {
    let n = ranks.len() as f64;
    let mean = n * (n + 1.0) / 4.0;
    // tie correction over groups of equal ranks
    let mut sorted = ranks.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
    let d = w_plus - mean;
    let z = (d - 0.5 * d.signum()) / var.sqrt();
    let normal = Normal::new(0.0, 1.0).unwrap();
    (2.0 * (1.0 - normal.cdf(z.abs()))).min(1.0)
}

/// Two-sided signed-rank p-value for paired samples.
pub fn wilcoxon_signed_rank(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    if a.len() != b.len() {
        return Err(StatsError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Err(StatsError::Empty);
    }
    ensure_finite(a)?;
    ensure_finite(b)?;
    let diffs: Vec<f64> = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| x - y)
        .filter(|d| *d != 0.0)
        .collect();
    if diffs.is_empty() {
        return Err(StatsError::AllDifferencesZero);
    }
    let abs_d: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    let ranks = average_ranks(&abs_d);
    let w_plus: f64 = ranks
        .iter()
        .zip(&diffs)
        .filter(|(_, &d)| d > 0.0)
        .map(|(&r, _)| r)
        .sum();
    if diffs.len() <= EXACT_LIMIT {
        Ok(exact_two_sided_p(&ranks, w_plus))
    } else {
        Ok(approx_two_sided_p(&ranks, w_plus))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomSource;

    /// Oracle: walk all `2^n` sign masks directly.
    fn brute_force_p(diffs: &[f64]) -> f64 {
        let abs_d: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
        let ranks = average_ranks(&abs_d);
        let w_obs: f64 = ranks
            .iter()
            .zip(diffs)
            .filter(|(_, &d)| d > 0.0)
            .map(|(&r, _)| r)
            .sum();
        let n = diffs.len();
        let mut le = 0u64;
        let mut ge = 0u64;
        for mask in 0u64..(1 << n) {
            let w: f64 = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| ranks[i])
                .sum();
            if w <= w_obs {
                le += 1;
            }
            if w >= w_obs {
                ge += 1;
            }
        }
        let tail = le.min(ge) as f64 / (1u64 << n) as f64;
        (2.0 * tail).min(1.0)
    }

    #[test]
    fn all_positive_differences_n30() {
        let a: Vec<f64> = (1..=30).map(|i| i as f64).collect();
        let b = vec![0.0; 30];
        let p = wilcoxon_signed_rank(&a, &b).unwrap();
        assert!((p - 1.862645149230957e-9).abs() < 1e-12, "got {p:e}");
    }

    #[test]
    fn equal_samples_error() {
        let a = [1.0, 2.0, 3.0];
        assert_eq!(
            wilcoxon_signed_rank(&a, &a),
            Err(StatsError::AllDifferencesZero)
        );
    }

    #[test]
    fn length_mismatch_errors() {
        assert!(matches!(
            wilcoxon_signed_rank(&[1.0], &[1.0, 2.0]),
            Err(StatsError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn five_pair_example() {
        let a = [1.0, -2.0, 3.0, 4.0, 5.0];
        let b = [0.0; 5];
        let p = wilcoxon_signed_rank(&a, &b).unwrap();
        assert_eq!(p, 0.1875);
        assert_eq!(p, brute_force_p(&a));
    }

    #[test]
    fn exact_matches_brute_force_on_random_samples() {
        let mut rng = RandomSource::from_seed(271828);
        for case in 0..100 {
            let n = 2 + (case % 11); // up to 12 pairs
            let a: Vec<f64> = (0..n).map(|_| rng.uniform(-5.0, 5.0)).collect();
            let b: Vec<f64> = (0..n)
                .map(|i| {
                    // force occasional ties in |difference|
                    if rng.unit() < 0.3 {
                        a[i] - 1.0
                    } else {
                        rng.uniform(-5.0, 5.0)
                    }
                })
                .collect();
            let diffs: Vec<f64> = a
                .iter()
                .zip(&b)
                .map(|(&x, &y)| x - y)
                .filter(|d| *d != 0.0)
                .collect();
            if diffs.is_empty() {
                continue;
            }
            let p = wilcoxon_signed_rank(&a, &b).unwrap();
            let oracle = brute_force_p(&diffs);
            assert_eq!(p, oracle, "case {case}: {p} vs oracle {oracle}");
        }
    }

    #[test]
    fn swap_preserves_two_sided_p() {
        let mut rng = RandomSource::from_seed(99);
        for _ in 0..20 {
            let a: Vec<f64> = (0..10).map(|_| rng.uniform(0.0, 1.0)).collect();
            let b: Vec<f64> = (0..10).map(|_| rng.uniform(0.0, 1.0)).collect();
            let p1 = wilcoxon_signed_rank(&a, &b);
            let p2 = wilcoxon_signed_rank(&b, &a);
            assert_eq!(p1, p2);
        }
    }

    #[test]
    fn zero_differences_are_dropped_before_ranking() {
        let a = [1.0, 2.0, 3.0, 4.0, 10.0, 20.0];
        let b = [1.0, 2.0, 3.0, 4.0, 0.0, 0.0];
        // two effective pairs, both positive: p = 2 * (1/4)
        let p = wilcoxon_signed_rank(&a, &b).unwrap();
        assert_eq!(p, 0.5);
    }

    #[test]
    fn large_samples_use_the_normal_tail() {
        let mut rng = RandomSource::from_seed(7);
        let a: Vec<f64> = (0..40).map(|_| rng.standard_normal()).collect();
        let b: Vec<f64> = a.iter().map(|v| v + 0.4 + rng.standard_normal()).collect();
        let p = wilcoxon_signed_rank(&a, &b).unwrap();
        assert!(p > 0.0 && p < 1.0);
        assert!(p < 0.2, "clear shift should be visible, got {p}");
    }
}
