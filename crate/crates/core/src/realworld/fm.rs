//! Parameter matching for a three-operator frequency-modulated tone.
//!
//! Six parameters `(a1, w1, a2, w2, a3, w3)` shape the nested wave
//! `y(t) = a1 sin(w1 t + a2 sin(w2 t theta + a3 sin(w3 t theta)))` with
//! `theta = 2 pi / 100`, sampled at the integers `t = 0..=100`. The
//! fitness is the squared error against the wave generated by a fixed
//! target parameter vector.
//!
//! As printed, the outermost frequency term omits the `theta` factor the
//! inner terms carry; `outer_theta` switches to the fully scaled variant.

use crate::problem::{Direction, Problem};

pub const THETA: f64 = 2.0 * std::f64::consts::PI / 100.0;
/// Inclusive sample horizon.
pub const HORIZON: u32 = 100;
pub const PARAM_MIN: f64 = -6.4;
pub const PARAM_MAX: f64 = 6.35;

/// Parameters of the target wave.
pub fn target_params() -> [f64; 6] {
    [1.0, 5.0, 1.5, 4.8, 2.0, 4.9]
}

/// Wave sample at integer time `t`.
pub fn fm_wave(p: &[f64], t: u32, outer_theta: bool) -> f64 {
    debug_assert_eq!(p.len(), 6);
    let (a1, w1, a2, w2, a3, w3) = (p[0], p[1], p[2], p[3], p[4], p[5]);
    let t = t as f64;
    let outer = if outer_theta { w1 * t * THETA } else { w1 * t };
    a1 * (outer + a2 * (w2 * t * THETA + a3 * (w3 * t * THETA).sin()).sin()).sin()
}

/// Sum of squared errors against the target wave over the full horizon.
pub fn fm_fitness(p: &[f64], outer_theta: bool) -> f64 {
    let target = target_params();
    (0..=HORIZON)
        .map(|t| {
            let d = fm_wave(p, t, outer_theta) - fm_wave(&target, t, outer_theta);
            d * d
        })
        .sum()
}

/// `(t, y, y_target)` rows for export.
pub fn waveform(p: &[f64], outer_theta: bool) -> Vec<(u32, f64, f64)> {
    let target = target_params();
    (0..=HORIZON)
        .map(|t| {
            (
                t,
                fm_wave(p, t, outer_theta),
                fm_wave(&target, t, outer_theta),
            )
        })
        .collect()
}

/// The six-variable minimization problem on `[-6.4, 6.35]^6`.
pub fn problem(outer_theta: bool) -> Problem {
    Problem::on_box("fm", 6, PARAM_MIN, PARAM_MAX, Direction::Minimize, move |x| {
        fm_fitness(x, outer_theta)
    })
    .expect("static bounds are valid")
}
