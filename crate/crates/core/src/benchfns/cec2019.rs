//! The ten functions of the 2019 100-digit-challenge suite.
//!
//! Values are unified so the global optimum maps to 1. The first three
//! functions have fixed dimensions and are never shifted or rotated; the
//! remaining seven are 10-dimensional on `[-100, 100]` and accept an
//! optional shift vector and rotation matrix (`z = M (x - o)`). Without
//! supplied data they fall back to a zero shift and identity rotation,
//! which is labelled unofficial in problem names.

use crate::problem::{Direction, Problem};

use super::{ackley, griewank, rastrigin, weierstrass, BenchError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cec2019Fn {
    Cec01,
    Cec02,
    Cec03,
    Cec04,
    Cec05,
    Cec06,
    Cec07,
    Cec08,
    Cec09,
    Cec10,
}

impl Cec2019Fn {
    pub const ALL: [Cec2019Fn; 10] = [
        Cec2019Fn::Cec01,
        Cec2019Fn::Cec02,
        Cec2019Fn::Cec03,
        Cec2019Fn::Cec04,
        Cec2019Fn::Cec05,
        Cec2019Fn::Cec06,
        Cec2019Fn::Cec07,
        Cec2019Fn::Cec08,
        Cec2019Fn::Cec09,
        Cec2019Fn::Cec10,
    ];

    pub fn parse(id: &str) -> Option<Self> {
        let n: usize = id.strip_prefix("CEC")?.parse().ok()?;
        Self::ALL.get(n.checked_sub(1)?).copied()
    }

    pub fn id(self) -> &'static str {
        match self {
            Cec2019Fn::Cec01 => "CEC01",
            Cec2019Fn::Cec02 => "CEC02",
            Cec2019Fn::Cec03 => "CEC03",
            Cec2019Fn::Cec04 => "CEC04",
            Cec2019Fn::Cec05 => "CEC05",
            Cec2019Fn::Cec06 => "CEC06",
            Cec2019Fn::Cec07 => "CEC07",
            Cec2019Fn::Cec08 => "CEC08",
            Cec2019Fn::Cec09 => "CEC09",
            Cec2019Fn::Cec10 => "CEC10",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Cec2019Fn::Cec01 => "Chebyshev polynomial fitting",
            Cec2019Fn::Cec02 => "inverse Hilbert matrix",
            Cec2019Fn::Cec03 => "Lennard-Jones minimum energy cluster",
            Cec2019Fn::Cec04 => "Rastrigin",
            Cec2019Fn::Cec05 => "Griewank",
            Cec2019Fn::Cec06 => "Weierstrass",
            Cec2019Fn::Cec07 => "modified Schwefel",
            Cec2019Fn::Cec08 => "expanded Schaffer F6",
            Cec2019Fn::Cec09 => "happy cat",
            Cec2019Fn::Cec10 => "Ackley",
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            Cec2019Fn::Cec01 => 9,
            Cec2019Fn::Cec02 => 16,
            Cec2019Fn::Cec03 => 18,
            _ => 10,
        }
    }

    pub fn range(self) -> (f64, f64) {
        match self {
            Cec2019Fn::Cec01 => (-8192.0, 8192.0),
            Cec2019Fn::Cec02 => (-16384.0, 16384.0),
            Cec2019Fn::Cec03 => (-4.0, 4.0),
            _ => (-100.0, 100.0),
        }
    }

    /// Only the scalable functions 04..10 take shift/rotation data.
    pub fn supports_transform(self) -> bool {
        !matches!(self, Cec2019Fn::Cec01 | Cec2019Fn::Cec02 | Cec2019Fn::Cec03)
    }

    fn eval_base(self, z: &[f64]) -> f64 {
        match self {
            Cec2019Fn::Cec01 => chebyshev_fit(z),
            Cec2019Fn::Cec02 => inverse_hilbert(z),
            Cec2019Fn::Cec03 => lennard_jones(z),
            Cec2019Fn::Cec04 => rastrigin(z),
            Cec2019Fn::Cec05 => griewank(z),
            Cec2019Fn::Cec06 => weierstrass(z),
            Cec2019Fn::Cec07 => modified_schwefel(z),
            Cec2019Fn::Cec08 => expanded_schaffer_f6(z),
            Cec2019Fn::Cec09 => happy_cat(z),
            Cec2019Fn::Cec10 => ackley(z),
        }
    }

    /// Build the bounded minimization problem, optionally with official
    /// shift/rotation data.
    pub fn make_problem(self, transform: Option<ShiftRotation>) -> Problem {
        let f = self;
        let (lo, hi) = self.range();
        let dim = self.dimension();
        let name = if self.supports_transform() && transform.is_none() {
            format!("{} (unofficial zero shift, identity rotation)", self.id())
        } else {
            self.id().to_string()
        };
        Problem::on_box(name, dim, lo, hi, Direction::Minimize, move |x| {
            eval_cec2019(f, x, transform.as_ref()).expect("dimension fixed by problem")
        })
        .expect("static benchmark bounds are valid")
    }
}

/// Shift vector plus row-major rotation matrix for one scalable function.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftRotation {
    dim: usize,
    shift: Vec<f64>,
    rotation: Vec<f64>,
}

impl ShiftRotation {
    pub fn new(shift: Vec<f64>, rotation: Vec<f64>) -> Result<Self, BenchError> {
        let dim = shift.len();
        if rotation.len() != dim * dim {
            return Err(BenchError::BadTransformData(format!(
                "rotation has {} entries, expected {}",
                rotation.len(),
                dim * dim
            )));
        }
        Ok(Self {
            dim,
            shift,
            rotation,
        })
    }

    pub fn identity(dim: usize) -> Self {
        let mut rotation = vec![0.0; dim * dim];
        for i in 0..dim {
            rotation[i * dim + i] = 1.0;
        }
        Self {
            dim,
            shift: vec![0.0; dim],
            rotation,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `z = M (x - o)`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let d: Vec<f64> = x.iter().zip(&self.shift).map(|(&a, &o)| a - o).collect();
        (0..self.dim)
            .map(|i| {
                let row = &self.rotation[i * self.dim..(i + 1) * self.dim];
                row.iter().zip(&d).map(|(&m, &v)| m * v).sum()
            })
            .collect()
    }
}

/// Parse the plain-text data format: line 1 holds the shift vector, the
/// next `dim` lines the rotation matrix rows, whitespace separated.
pub fn parse_shift_rotation(text: &str, dim: usize) -> Result<ShiftRotation, BenchError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let parse_row = |line: &str, what: &str| -> Result<Vec<f64>, BenchError> {
        line.split_whitespace()
            .map(|tok| {
                tok.parse::<f64>().map_err(|_| {
                    BenchError::BadTransformData(format!("bad number `{tok}` in {what}"))
                })
            })
            .collect()
    };
    let shift_line = lines
        .next()
        .ok_or_else(|| BenchError::BadTransformData("missing shift line".into()))?;
    let shift = parse_row(shift_line, "shift vector")?;
    if shift.len() != dim {
        return Err(BenchError::BadTransformData(format!(
            "shift has {} entries, expected {dim}",
            shift.len()
        )));
    }
    let mut rotation = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        let line = lines.next().ok_or_else(|| {
            BenchError::BadTransformData(format!("missing rotation row {}", i + 1))
        })?;
        let row = parse_row(line, "rotation matrix")?;
        if row.len() != dim {
            return Err(BenchError::BadTransformData(format!(
                "rotation row {} has {} entries, expected {dim}",
                i + 1,
                row.len()
            )));
        }
        rotation.extend(row);
    }
    if lines.next().is_some() {
        return Err(BenchError::BadTransformData(
            "trailing content after rotation matrix".into(),
        ));
    }
    ShiftRotation::new(shift, rotation)
}

/// Evaluate one suite function with the +1 optimum unification.
pub fn eval_cec2019(
    id: Cec2019Fn,
    x: &[f64],
    transform: Option<&ShiftRotation>,
) -> Result<f64, BenchError> {
    if x.len() != id.dimension() {
        return Err(BenchError::DimensionMismatch {
            id: id.id().to_string(),
            expected: id.dimension(),
            got: x.len(),
        });
    }
    let value = match transform {
        None => id.eval_base(x),
        Some(t) => {
            if !id.supports_transform() {
                return Err(BenchError::TransformNotSupported {
                    id: id.id().to_string(),
                });
            }
            if t.dim() != id.dimension() {
                return Err(BenchError::BadTransformData(format!(
                    "transform dimension {} does not match {}",
                    t.dim(),
                    id.id()
                )));
            }
            id.eval_base(&t.apply(x))
        }
    };
    Ok(value + 1.0)
}

/// Polynomial fitting: coefficients must keep the degree-(D-1) polynomial
/// inside `[-1, 1]` on the sampled interval while matching the reference
/// magnitude at the endpoints 1.2 and -1.2.
fn chebyshev_fit(x: &[f64]) -> f64 {
    let d = x.len();
    // reference magnitude at 1.2 via the three-term recurrence
    let (mut a, mut b) = (1.0f64, 1.2f64);
    for _ in 0..d.saturating_sub(2) {
        let next = 2.4 * b - a;
        a = b;
        b = next;
    }
    let target = b;
    let horner = |y: f64| x.iter().skip(1).fold(x[0], |p, &c| y * p + c);

    let sample = 32 * d;
    let dy = 2.0 / sample as f64;
    let mut sum = 0.0;
    let mut y = -1.0;
    for _ in 0..=sample {
        let p = horner(y);
        if p.abs() > 1.0 {
            let over = 1.0 - p.abs();
            sum += over * over;
        }
        y += dy;
    }
    for endpoint in [-1.2, 1.2] {
        let p = horner(endpoint);
        if p < target {
            sum += p * p;
        }
    }
    sum
}

/// L1 deviation of `H * X` from the identity, where `X` is read row-wise
/// from the decision vector and `H` is the Hilbert matrix.
fn inverse_hilbert(x: &[f64]) -> f64 {
    let b = (x.len() as f64).sqrt().round() as usize;
    debug_assert_eq!(b * b, x.len());
    let mut sum = 0.0;
    for i in 0..b {
        for k in 0..b {
            let mut y = 0.0;
            for j in 0..b {
                let h = 1.0 / (i + j + 1) as f64;
                y += h * x[k + b * j];
            }
            let target = if i == k { 1.0 } else { 0.0 };
            sum += (y - target).abs();
        }
    }
    sum
}

/// Pair potential energy of `len/3` atoms plus the cluster-minimum
/// compensation constant, so the global optimum sits at zero.
fn lennard_jones(x: &[f64]) -> f64 {
    let k = x.len() / 3;
    let mut sum = 12.7120622568;
    for i in 0..k.saturating_sub(1) {
        for j in (i + 1)..k {
            let dx = x[3 * i] - x[3 * j];
            let dy = x[3 * i + 1] - x[3 * j + 1];
            let dz = x[3 * i + 2] - x[3 * j + 2];
            let ed = dx * dx + dy * dy + dz * dz;
            let ud = ed * ed * ed;
            if ud > 1.0e-10 {
                sum += (1.0 / ud - 2.0) / ud;
            } else {
                sum += 1.0e20;
            }
        }
    }
    sum
}

fn modified_schwefel(z: &[f64]) -> f64 {
    let d = z.len() as f64;
    let mut total = 0.0;
    for &zi in z {
        let v = zi + 4.209687462275036e2;
        total += if v.abs() <= 500.0 {
            v * v.abs().sqrt().sin()
        } else if v > 500.0 {
            let w = 500.0 - v % 500.0;
            w * w.abs().sqrt().sin() - (v - 500.0) * (v - 500.0) / (10000.0 * d)
        } else {
            let w = v.abs() % 500.0 - 500.0;
            w * w.abs().sqrt().sin() - (v + 500.0) * (v + 500.0) / (10000.0 * d)
        };
    }
    418.9829 * d - total
}

fn schaffer_f6(x: f64, y: f64) -> f64 {
    let s2 = x * x + y * y;
    let num = s2.sqrt().sin().powi(2) - 0.5;
    let den = (1.0 + 0.001 * s2).powi(2);
    0.5 + num / den
}

fn expanded_schaffer_f6(z: &[f64]) -> f64 {
    let n = z.len();
    (0..n).map(|i| schaffer_f6(z[i], z[(i + 1) % n])).sum()
}

fn happy_cat(z: &[f64]) -> f64 {
    let d = z.len() as f64;
    let s2: f64 = z.iter().map(|v| v * v).sum();
    let s1: f64 = z.iter().sum();
    (s2 - d).abs().powf(0.25) + (0.5 * s2 + s1) / d + 0.5
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomSource;

    #[test]
    fn table_metadata() {
        assert_eq!(Cec2019Fn::Cec01.dimension(), 9);
        assert_eq!(Cec2019Fn::Cec01.range(), (-8192.0, 8192.0));
        assert_eq!(Cec2019Fn::Cec02.dimension(), 16);
        assert_eq!(Cec2019Fn::Cec02.range(), (-16384.0, 16384.0));
        assert_eq!(Cec2019Fn::Cec03.dimension(), 18);
        assert_eq!(Cec2019Fn::Cec03.range(), (-4.0, 4.0));
        for f in &Cec2019Fn::ALL[3..] {
            assert_eq!(f.dimension(), 10);
            assert_eq!(f.range(), (-100.0, 100.0));
        }
    }

    #[test]
    fn chebyshev_optimum_is_one() {
        let xstar = [128.0, 0.0, -256.0, 0.0, 160.0, 0.0, -32.0, 0.0, 1.0];
        let v = eval_cec2019(Cec2019Fn::Cec01, &xstar, None).unwrap();
        assert!((v - 1.0).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn inverse_hilbert_optimum_is_one() {
        #[rustfmt::skip]
        let xstar = [
            16.0, -120.0, 240.0, -140.0,
            -120.0, 1200.0, -2700.0, 1680.0,
            240.0, -2700.0, 6480.0, -4200.0,
            -140.0, 1680.0, -4200.0, 2800.0,
        ];
        let v = eval_cec2019(Cec2019Fn::Cec02, &xstar, None).unwrap();
        assert!((v - 1.0).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn lennard_jones_cluster_minimum_is_one() {
        // six atoms at the optimally scaled octahedron
        let y: f64 = 24.75 / (2.0 * 12.046875);
        let edge = y.powf(-1.0 / 6.0);
        let r = edge / 2f64.sqrt();
        #[rustfmt::skip]
        let x = [
            r, 0.0, 0.0,  -r, 0.0, 0.0,
            0.0, r, 0.0,  0.0, -r, 0.0,
            0.0, 0.0, r,  0.0, 0.0, -r,
        ];
        let v = eval_cec2019(Cec2019Fn::Cec03, &x, None).unwrap();
        assert!((v - 1.0).abs() < 1e-8, "got {v}");
    }

    #[test]
    fn scalable_functions_hit_one_at_their_base_optima() {
        let zeros = [0.0; 10];
        for f in [
            Cec2019Fn::Cec04,
            Cec2019Fn::Cec05,
            Cec2019Fn::Cec06,
            Cec2019Fn::Cec08,
            Cec2019Fn::Cec10,
        ] {
            let v = eval_cec2019(f, &zeros, None).unwrap();
            assert!((v - 1.0).abs() <= 1e-12, "{}: {v}", f.id());
        }
        let v = eval_cec2019(Cec2019Fn::Cec09, &[-1.0; 10], None).unwrap();
        assert!((v - 1.0).abs() <= 1e-12, "happy cat: {v}");
        // the rounded plateau constant leaves a small positive residue
        let v = eval_cec2019(Cec2019Fn::Cec07, &zeros, None).unwrap();
        assert!((v - 1.0001272756617254).abs() < 1e-9, "got {v}");
        assert!(v >= 1.0);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let r = eval_cec2019(Cec2019Fn::Cec01, &[0.0; 10], None);
        assert!(matches!(r, Err(BenchError::DimensionMismatch { .. })));
    }

    #[test]
    fn fixed_functions_reject_transforms() {
        let t = ShiftRotation::identity(18);
        let x = [0.0; 18];
        let r = eval_cec2019(Cec2019Fn::Cec03, &x, Some(&t));
        assert!(matches!(r, Err(BenchError::TransformNotSupported { .. })));
    }

    #[test]
    fn shift_moves_the_optimum() {
        let mut shift = vec![0.0; 10];
        shift[0] = 3.0;
        shift[7] = -2.5;
        let t = ShiftRotation::new(shift.clone(), ShiftRotation::identity(10).rotation).unwrap();
        let v = eval_cec2019(Cec2019Fn::Cec04, &shift, Some(&t)).unwrap();
        assert!((v - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn rotation_applies_before_the_base_function() {
        // 90-degree rotation in the first two coordinates
        let dim = 10;
        let mut rotation = ShiftRotation::identity(dim).rotation;
        rotation[0] = 0.0;
        rotation[1] = 1.0;
        rotation[dim] = -1.0;
        rotation[dim + 1] = 0.0;
        let t = ShiftRotation::new(vec![0.0; dim], rotation).unwrap();
        let mut x = [0.0; 10];
        x[0] = 1.0;
        x[1] = 2.0;
        let direct = {
            let mut z = [0.0; 10];
            z[0] = 2.0;
            z[1] = -1.0;
            rastrigin(&z) + 1.0
        };
        let v = eval_cec2019(Cec2019Fn::Cec04, &x, Some(&t)).unwrap();
        assert!((v - direct).abs() < 1e-12);
    }

    #[test]
    fn parse_round_trips_a_valid_file() {
        let text = "1.5 -2.25 0.0\n1 0 0\n0 1 0\n0 0 1\n";
        let t = parse_shift_rotation(text, 3).unwrap();
        assert_eq!(t.shift, vec![1.5, -2.25, 0.0]);
        assert_eq!(t.apply(&[1.5, -2.25, 0.0]), vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn parse_rejects_malformed_files() {
        assert!(parse_shift_rotation("", 3).is_err());
        assert!(parse_shift_rotation("1 2\n1 0\n0 1\n", 3).is_err());
        assert!(parse_shift_rotation("1 2 3\n1 0 0\n0 1 0\n", 3).is_err());
        assert!(parse_shift_rotation("1 2 3\n1 0 0\n0 x 0\n0 0 1\n", 3).is_err());
        assert!(parse_shift_rotation("1 2 3\n1 0 0\n0 1 0\n0 0 1\nextra\n", 3).is_err());
    }

    #[test]
    fn unification_floor_on_random_samples() {
        let mut rng = RandomSource::from_seed(606);
        for f in [
            Cec2019Fn::Cec04,
            Cec2019Fn::Cec05,
            Cec2019Fn::Cec07,
            Cec2019Fn::Cec08,
            Cec2019Fn::Cec09,
            Cec2019Fn::Cec10,
        ] {
            let mut min = f64::INFINITY;
            for _ in 0..10_000 {
                let x: Vec<f64> = (0..10).map(|_| rng.uniform(-100.0, 100.0)).collect();
                min = min.min(eval_cec2019(f, &x, None).unwrap());
            }
            assert!(min >= 1.0 - 1e-9, "{}: sampled min {min}", f.id());
        }
    }
}
