//! Aperiodic linear array: peak sidelobe level of a ten-element symmetric
//! isotropic array with four free element positions (in wavelengths) and a
//! fifth fixed at 2.25.
//!
//! The far-field magnitude at angle `theta` is
//! `AF = sum_i cos(2 pi x_i u) + cos(2.25 * 2 pi u)` with
//! `u = cos(theta) - cos(theta_s)` and broadside steering
//! (`theta_s = 90 deg`). The fitness is the largest `20 log10 |AF|` over a
//! uniform angle grid with the main lobe cut out to the first local
//! minimum of `|AF|` on each side; infeasible layouts additionally pay a
//! static penalty.

use crate::problem::{Direction, Problem};

/// Position of the fixed outermost element, in wavelengths.
pub const FIXED_ELEMENT: f64 = 2.25;
/// Minimum pairwise spacing between elements.
pub const SPACING_MIN: f64 = 0.25;
/// Minimum distance of the innermost element from the array centre.
pub const POSITION_MIN: f64 = 0.125;
/// Grid resolution used by the fitness function.
pub const DEFAULT_GRID: usize = 2001;
/// Penalty scale per constraint violation, in dB.
pub const PENALTY_SCALE: f64 = 1e3;

const N_FREE: usize = 4;

/// Array factor at `theta_deg` in `[0, 180]` degrees.
pub fn array_factor(x: &[f64], theta_deg: f64) -> f64 {
    debug_assert_eq!(x.len(), N_FREE);
    let two_pi = 2.0 * std::f64::consts::PI;
    let u = (theta_deg.to_radians()).cos();
    x.iter().map(|&xi| (two_pi * xi * u).cos()).sum::<f64>() + (FIXED_ELEMENT * two_pi * u).cos()
}

/// Count and total magnitude of constraint violations.
pub fn violations(x: &[f64]) -> (usize, f64) {
    let mut count = 0;
    let mut magnitude = 0.0;
    for &xi in x {
        if !(xi > 0.0 && xi < FIXED_ELEMENT) {
            count += 1;
            magnitude += (xi - FIXED_ELEMENT).max(0.0) + (-xi).max(0.0);
        }
    }
    let min = x.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= POSITION_MIN {
        count += 1;
        magnitude += POSITION_MIN - min;
    }
    for i in 0..x.len() {
        for j in (i + 1)..x.len() {
            let gap = (x[i] - x[j]).abs();
            if gap <= SPACING_MIN {
                count += 1;
                magnitude += SPACING_MIN - gap;
            }
        }
    }
    (count, magnitude)
}

pub fn is_feasible(x: &[f64]) -> bool {
    violations(x).0 == 0
}

/// Zero on the feasible set, otherwise scale times (count + magnitude).
pub fn penalty(x: &[f64]) -> f64 {
    let (count, magnitude) = violations(x);
    if count == 0 {
        0.0
    } else {
        PENALTY_SCALE * (count as f64 + magnitude)
    }
}

/// Peak `20 log10 |AF|` over a uniform grid of `grid_points` angles in
/// `[0, 180]` degrees.
///
/// With `exclude_main_lobe` the contiguous region around 90 degrees is
/// removed out to the first local minimum of `|AF|` on each side. Grid
/// points where `AF` vanishes contribute nothing to the maximum.
pub fn peak_sidelobe_db(x: &[f64], grid_points: usize, exclude_main_lobe: bool) -> f64 {
    assert!(grid_points >= 3);
    let step = 180.0 / (grid_points - 1) as f64;
    let magnitudes: Vec<f64> = (0..grid_points)
        .map(|i| array_factor(x, i as f64 * step).abs())
        .collect();

    let (skip_from, skip_to) = if exclude_main_lobe {
        let centre = (grid_points - 1) / 2;
        let mut right = centre;
        while right + 1 < grid_points && magnitudes[right + 1] <= magnitudes[right] {
            right += 1;
        }
        let mut left = centre;
        while left > 0 && magnitudes[left - 1] <= magnitudes[left] {
            left -= 1;
        }
        (left, right)
    } else {
        (1, 0)
    };

    let mut peak = f64::NEG_INFINITY;
    for (i, &m) in magnitudes.iter().enumerate() {
        if exclude_main_lobe && (skip_from..=skip_to).contains(&i) {
            continue;
        }
        if m > 0.0 {
            peak = peak.max(20.0 * m.log10());
        }
    }
    peak
}

/// Fitness: peak sidelobe level on the default grid plus the penalty.
pub fn antenna_fitness(x: &[f64]) -> f64 {
    peak_sidelobe_db(x, DEFAULT_GRID, true) + penalty(x)
}

/// Full `AF(theta)` sweep for export: `(theta_deg, af, af_db)` rows.
pub fn sweep(x: &[f64], grid_points: usize) -> Vec<(f64, f64, f64)> {
    let step = 180.0 / (grid_points - 1) as f64;
    (0..grid_points)
        .map(|i| {
            let theta = i as f64 * step;
            let af = array_factor(x, theta);
            (theta, af, 20.0 * af.abs().log10())
        })
        .collect()
}

/// The four-variable minimization problem on `[0, 2.25]^4`.
pub fn problem() -> Problem {
    Problem::on_box(
        "antenna",
        N_FREE,
        0.0,
        FIXED_ELEMENT,
        Direction::Minimize,
        |x| antenna_fitness(x),
    )
    .expect("static bounds are valid")
}
