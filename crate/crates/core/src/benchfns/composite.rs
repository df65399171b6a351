//! Weighted composition framework CF1..CF6 (ids F13..F18).
//!
//! Each composite blends ten scaled, shifted basic functions. At a point
//! `x` every component `i` gets a Gaussian proximity weight
//! `w_i = exp(-||x - o_i||^2 / (2 D sigma_i^2))`; the largest weight is
//! kept and all others are damped by `(1 - max_w^10)`, then the weights
//! are normalised to sum one. The blended value is
//! `sum_i w_i * (C * f_i((x - o_i) / lambda_i) / |fmax_i| + bias_i)` with
//! `C = 2000`, `bias_i = 100 * i`, and `fmax_i = f_i((5,..,5) / lambda_i)`.
//!
//! The component optima `o_i` are fixed project data: drawn once,
//! uniformly in the search box, from the documented seed below, and
//! frozen here so results stay reproducible.

use std::sync::OnceLock;

use crate::problem::Problem;
use crate::rng::RandomSource;

use super::{ackley, griewank, minimize_box, rastrigin, sphere, weierstrass};

pub const DIMENSION: usize = 10;
const N_COMPONENTS: usize = 10;
const SCALE: f64 = 2000.0;
const RANGE: (f64, f64) = (-5.0, 5.0);

/// Seed the frozen optima table was generated from.
pub const OPTIMA_SEED: u64 = 314159;

/// Regenerate the optima table from [`OPTIMA_SEED`]; the frozen table is
/// checked against this in tests.
pub(crate) fn generate_optima() -> [[f64; DIMENSION]; N_COMPONENTS] {
    let mut rng = RandomSource::from_seed(OPTIMA_SEED);
    let mut table = [[0.0; DIMENSION]; N_COMPONENTS];
    for row in &mut table {
        for v in row.iter_mut() {
            *v = rng.uniform(RANGE.0, RANGE.1);
        }
    }
    table
}

/// Component optimum locations, one row per component.
pub fn optima() -> &'static [[f64; DIMENSION]; N_COMPONENTS] {
    &OPTIMA
}

static OPTIMA: [[f64; DIMENSION]; N_COMPONENTS] = [
    [0.1041250386331738, 3.631567470340757, 0.6702946447307507, 2.1888480236343044, -0.48108624451330684, 4.029577201633966, -1.6702057565106943, -0.14900497645308786, -0.8040676176234962, -0.015959539528206612],
    [-0.17595399869610517, -2.204075899901745, -0.2816701149988621, 2.2745107572540757, -0.629373589723663, 4.208546183988071, -3.55721150971543, -1.8484126412196145, 0.6704962302750186, 1.5179888441348623],
    [-0.6025901867856884, 2.2028582402688706, -1.9752102164115062, -0.13093592381524033, -1.5258198166751082, 4.638696102927057, 0.8404950523719208, 0.7560444738368393, 3.888669876276957, 2.577065105571929],
    [2.535409255391233, 3.9173305213106353, 1.1123259159806, -2.251295911652643, 2.791667909717061, -3.387531218216048, -4.087823810063923, 4.448776837810945, -3.450579410259996, -3.35946300155514],
    [-2.637617189735776, 0.5917145876951659, -4.473976729267633, 4.884902745416886, -4.105414517891475, 0.3206278917654579, -4.218004339210992, 2.49432613611238, 1.7908541814798724, 2.5163159807511883],
    [4.072125327707992, -3.8681099194973365, 3.3134138524561543, -0.002067023242267929, 1.8339194493075777, -2.0808445256818975, -0.04636379409866276, 1.832430868429701, -1.6684668382367152, -1.7437927411654663],
    [2.4224256039089145, 1.8657096294821462, -0.45934922854101057, -3.482767892711026, 2.8354654451828765, 1.7072357317187894, 3.746103329915094, 2.28102691508888, -0.9526223800382567, 2.4639454385247896],
    [-4.967298680414599, -4.279881634085091, -2.578871136165488, 3.2154649000951387, 3.722160373285705, 1.3175693615384905, -1.3102832232788009, 2.838568912450203, -4.543325600172654, 4.39355195015742],
    [3.3068397179958033, 0.8397679609856965, 2.514679061793843, -0.5487084029954614, -3.190916040928815, -3.2236177918662223, 4.501071860027041, -2.841542726251245, 4.479905053204696, 4.2584628102664475],
    [3.9983165717702125, 0.11904037449742688, -2.2453031667526426, -1.6293592051908714, -3.8397165890383245, 3.1727523406317566, -3.4588026499573465, -0.16894135312900893, 3.773924257437944, -1.8480668418928747],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Component {
    Sphere,
    Griewank,
    Rastrigin,
    Ackley,
    Weierstrass,
}

impl Component {
    fn eval(self, z: &[f64]) -> f64 {
        match self {
            Component::Sphere => sphere(z),
            Component::Griewank => griewank(z),
            Component::Rastrigin => rastrigin(z),
            Component::Ackley => ackley(z),
            Component::Weierstrass => weierstrass(z),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompositeFn {
    Cf1,
    Cf2,
    Cf3,
    Cf4,
    Cf5,
    Cf6,
}

impl CompositeFn {
    pub const ALL: [CompositeFn; 6] = [
        CompositeFn::Cf1,
        CompositeFn::Cf2,
        CompositeFn::Cf3,
        CompositeFn::Cf4,
        CompositeFn::Cf5,
        CompositeFn::Cf6,
    ];

    /// Accepts both the composite alias (`CF1`) and the suite id (`F13`).
    pub fn parse(id: &str) -> Option<Self> {
        let n: usize = if let Some(rest) = id.strip_prefix("CF") {
            rest.parse::<usize>().ok()?
        } else if let Some(rest) = id.strip_prefix('F') {
            rest.parse::<usize>().ok()?.checked_sub(12)?
        } else {
            return None;
        };
        Self::ALL.get(n.checked_sub(1)?).copied()
    }

    /// Suite id, `F13`..`F18`.
    pub fn id(self) -> &'static str {
        match self {
            CompositeFn::Cf1 => "F13",
            CompositeFn::Cf2 => "F14",
            CompositeFn::Cf3 => "F15",
            CompositeFn::Cf4 => "F16",
            CompositeFn::Cf5 => "F17",
            CompositeFn::Cf6 => "F18",
        }
    }

    pub fn alias(self) -> &'static str {
        match self {
            CompositeFn::Cf1 => "CF1",
            CompositeFn::Cf2 => "CF2",
            CompositeFn::Cf3 => "CF3",
            CompositeFn::Cf4 => "CF4",
            CompositeFn::Cf5 => "CF5",
            CompositeFn::Cf6 => "CF6",
        }
    }

    fn index(self) -> usize {
        match self {
            CompositeFn::Cf1 => 0,
            CompositeFn::Cf2 => 1,
            CompositeFn::Cf3 => 2,
            CompositeFn::Cf4 => 3,
            CompositeFn::Cf5 => 4,
            CompositeFn::Cf6 => 5,
        }
    }

    fn components(self) -> [Component; N_COMPONENTS] {
        use Component::*;
        match self {
            CompositeFn::Cf1 => [Sphere; 10],
            CompositeFn::Cf2 | CompositeFn::Cf3 => [Griewank; 10],
            CompositeFn::Cf4 => [
                Ackley,
                Ackley,
                Rastrigin,
                Rastrigin,
                Weierstrass,
                Weierstrass,
                Griewank,
                Griewank,
                Sphere,
                Sphere,
            ],
            CompositeFn::Cf5 | CompositeFn::Cf6 => [
                Rastrigin,
                Rastrigin,
                Weierstrass,
                Weierstrass,
                Griewank,
                Griewank,
                Ackley,
                Ackley,
                Sphere,
                Sphere,
            ],
        }
    }

    fn sigmas(self) -> [f64; N_COMPONENTS] {
        match self {
            CompositeFn::Cf6 => [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
            _ => [1.0; 10],
        }
    }

    fn lambdas(self) -> [f64; N_COMPONENTS] {
        match self {
            CompositeFn::Cf1 | CompositeFn::Cf2 => [5.0 / 100.0; 10],
            CompositeFn::Cf3 => [1.0; 10],
            CompositeFn::Cf4 => [
                5.0 / 32.0,
                5.0 / 32.0,
                1.0,
                1.0,
                5.0 / 0.5,
                5.0 / 0.5,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 100.0,
            ],
            CompositeFn::Cf5 => [
                1.0 / 5.0,
                1.0 / 5.0,
                5.0 / 0.5,
                5.0 / 0.5,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 32.0,
                5.0 / 32.0,
                5.0 / 100.0,
                5.0 / 100.0,
            ],
            CompositeFn::Cf6 => [
                0.1 * 1.0 / 5.0,
                0.2 * 1.0 / 5.0,
                0.3 * 5.0 / 0.5,
                0.4 * 5.0 / 0.5,
                0.5 * 5.0 / 100.0,
                0.6 * 5.0 / 100.0,
                0.7 * 5.0 / 32.0,
                0.8 * 5.0 / 32.0,
                0.9 * 5.0 / 100.0,
                1.0 * 5.0 / 100.0,
            ],
        }
    }

    /// Normalisation constants `|f_i((5,..,5) / lambda_i)|`, cached.
    fn fmax(self) -> &'static [f64; N_COMPONENTS] {
        static CACHE: OnceLock<[[f64; N_COMPONENTS]; 6]> = OnceLock::new();
        &CACHE.get_or_init(|| {
            let mut all = [[0.0; N_COMPONENTS]; 6];
            for cf in CompositeFn::ALL {
                let lambdas = cf.lambdas();
                let comps = cf.components();
                for i in 0..N_COMPONENTS {
                    let z = vec![RANGE.1 / lambdas[i]; DIMENSION];
                    all[cf.index()][i] = comps[i].eval(&z).abs();
                }
            }
            all
        })[self.index()]
    }

    pub fn make_problem(self) -> Problem {
        let cf = self;
        minimize_box(self.id(), DIMENSION, RANGE.0, RANGE.1, move |x| {
            eval_composite(cf, x)
        })
    }
}

/// Blended composite value at `x` (length [`DIMENSION`]).
pub fn eval_composite(cf: CompositeFn, x: &[f64]) -> f64 {
    assert_eq!(x.len(), DIMENSION, "composite functions are 10-dimensional");
    let comps = cf.components();
    let sigmas = cf.sigmas();
    let lambdas = cf.lambdas();
    let fmax = cf.fmax();
    let optima = optima();

    let mut weights = [0.0; N_COMPONENTS];
    for i in 0..N_COMPONENTS {
        let dist2: f64 = x
            .iter()
            .zip(&optima[i])
            .map(|(&a, &o)| (a - o) * (a - o))
            .sum();
        weights[i] = (-dist2 / (2.0 * DIMENSION as f64 * sigmas[i] * sigmas[i])).exp();
    }
    let max_w = weights.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let damp = 1.0 - max_w.powi(10);
    for w in &mut weights {
        if *w != max_w {
            *w *= damp;
        }
    }
    let total: f64 = weights.iter().sum();

    let mut value = 0.0;
    for i in 0..N_COMPONENTS {
        let w = weights[i] / total;
        if w == 0.0 {
            continue;
        }
        let z: Vec<f64> = x
            .iter()
            .zip(&optima[i])
            .map(|(&a, &o)| (a - o) / lambdas[i])
            .collect();
        let bias = 100.0 * i as f64;
        value += w * (SCALE * comps[i].eval(&z) / fmax[i] + bias);
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_table_matches_generator() {
        assert_eq!(*optima(), generate_optima());
    }

    #[test]
    fn optima_lie_in_the_box() {
        for row in optima() {
            for &v in row {
                assert!((RANGE.0..=RANGE.1).contains(&v));
            }
        }
    }

    #[test]
    fn zero_at_first_optimum_exactly() {
        for cf in CompositeFn::ALL {
            let v = eval_composite(cf, &optima()[0]);
            assert_eq!(v, 0.0, "{} at o_1 gave {v}", cf.id());
        }
    }

    #[test]
    fn bias_dominates_at_third_optimum() {
        // the third component's own term vanishes there, leaving its bias
        let v = eval_composite(CompositeFn::Cf4, &optima()[2]);
        assert!((v - 200.0).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn positive_far_from_all_optima() {
        let v = eval_composite(CompositeFn::Cf1, &[5.0; 10]);
        assert!(v > 0.0);
    }

    #[test]
    fn matches_plain_reference_evaluation() {
        // straight-line re-implementation, kept independent of the
        // library path it checks
        fn reference(cf: CompositeFn, x: &[f64]) -> f64 {
            let comps = cf.components();
            let sigmas = cf.sigmas();
            let lambdas = cf.lambdas();
            let optima = optima();
            let d = x.len() as f64;
            let mut w = vec![0.0; 10];
            for i in 0..10 {
                let mut dist2 = 0.0;
                for k in 0..x.len() {
                    dist2 += (x[k] - optima[i][k]) * (x[k] - optima[i][k]);
                }
                w[i] = (-dist2 / (2.0 * d * sigmas[i] * sigmas[i])).exp();
            }
            let mw = w.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            for wi in w.iter_mut() {
                if *wi != mw {
                    *wi *= 1.0 - mw.powi(10);
                }
            }
            let sum: f64 = w.iter().sum();
            let mut val = 0.0;
            for i in 0..10 {
                let z: Vec<f64> = (0..x.len())
                    .map(|k| (x[k] - optima[i][k]) / lambdas[i])
                    .collect();
                let zmax = vec![5.0 / lambdas[i]; x.len()];
                let fm = comps[i].eval(&zmax).abs();
                val += w[i] / sum * (2000.0 * comps[i].eval(&z) / fm + 100.0 * i as f64);
            }
            val
        }

        let mut rng = RandomSource::from_seed(5150);
        for cf in CompositeFn::ALL {
            for _ in 0..50 {
                let x: Vec<f64> = (0..10).map(|_| rng.uniform(-5.0, 5.0)).collect();
                let a = eval_composite(cf, &x);
                let b = reference(cf, &x);
                assert!(
                    (a - b).abs() <= 1e-9 * b.abs().max(1.0),
                    "{}: {a} vs {b}",
                    cf.id()
                );
            }
        }
    }

    #[test]
    fn finite_across_the_box() {
        let mut rng = RandomSource::from_seed(8);
        for cf in CompositeFn::ALL {
            for _ in 0..2000 {
                let x: Vec<f64> = (0..10).map(|_| rng.uniform(-5.0, 5.0)).collect();
                assert!(eval_composite(cf, &x).is_finite());
            }
        }
    }
}
