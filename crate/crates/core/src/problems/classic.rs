//! Classic analytic test functions.

use std::f64::consts::{E, PI};

use crate::problem::{Bounds, KnownOptimum, Problem};
use crate::rng::RngStream;

/// Peak value of `x sin(sqrt(x))` on `[0, 500]`, reached at
/// [`SCHWEFEL_OPTIMIZER`].
pub const SCHWEFEL_PEAK: f64 = 418.982_887_272_433_7;
pub const SCHWEFEL_OPTIMIZER: f64 = 420.968_746_359_982_05;

/// Seed of the fixed rotation/shift used by `rot-rastrigin`; the dimension
/// is added so each `d` gets its own instance.
const ROTATION_SEED: u64 = 0x0C0F_FEE5_2017;

fn build(
    name: &str,
    d: usize,
    lo: f64,
    hi: f64,
    at: Vec<f64>,
    f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
) -> Problem {
    Problem::new(name, Bounds::uniform(d, lo, hi).expect("valid box"), f).with_optimum(
        KnownOptimum {
            value: 0.0,
            location: Some(at),
        },
    )
}

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

pub fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64
        + x.iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

pub fn griewank(x: &[f64]) -> f64 {
    let s = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let p: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    1.0 + s - p
}

/// Schwefel 2.26, shifted so the global minimum value is zero.
pub fn schwefel226(x: &[f64]) -> f64 {
    SCHWEFEL_PEAK * x.len() as f64 - x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
}

pub fn levy(x: &[f64]) -> f64 {
    let w: Vec<f64> = x.iter().map(|v| 1.0 + (v - 1.0) / 4.0).collect();
    let d = w.len();
    let head = (PI * w[0]).sin().powi(2);
    let body: f64 = w[..d - 1]
        .iter()
        .map(|wi| (wi - 1.0).powi(2) * (1.0 + 10.0 * (PI * wi + 1.0).sin().powi(2)))
        .sum();
    let wd = w[d - 1];
    let tail = (wd - 1.0).powi(2) * (1.0 + (2.0 * PI * wd).sin().powi(2));
    head + body + tail
}

/// Orthogonal `d x d` matrix from a seeded Gaussian matrix by modified
/// Gram-Schmidt, row-major.
pub fn seeded_rotation(d: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = RngStream::new(seed);
    let mut rows: Vec<Vec<f64>> = (0..d).map(|_| rng.normal_vec(d)).collect();
    for i in 0..d {
        for k in 0..i {
            let dot: f64 = rows[i].iter().zip(&rows[k]).map(|(a, b)| a * b).sum();
            let basis = rows[k].clone();
            for (a, b) in rows[i].iter_mut().zip(&basis) {
                *a -= dot * b;
            }
        }
        let norm = rows[i].iter().map(|a| a * a).sum::<f64>().sqrt();
        rows[i].iter_mut().for_each(|a| *a /= norm);
    }
    rows
}

/// Fixed shift and rotation of the `rot-rastrigin` instance in dimension `d`.
pub fn rotated_rastrigin_instance(d: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    let seed = ROTATION_SEED + d as u64;
    let rotation = seeded_rotation(d, seed);
    let mut rng = RngStream::new(seed ^ 0xFFFF);
    let shift = (0..d).map(|_| -4.0 + 8.0 * rng.uniform()).collect();
    (shift, rotation)
}

pub fn sphere_problem(d: usize) -> Problem {
    build("sphere", d, -100.0, 100.0, vec![0.0; d], sphere)
}

pub fn rosenbrock_problem(d: usize) -> Problem {
    build("rosenbrock", d, -30.0, 30.0, vec![1.0; d], rosenbrock)
}

pub fn rastrigin_problem(d: usize) -> Problem {
    build("rastrigin", d, -5.12, 5.12, vec![0.0; d], rastrigin)
}

pub fn ackley_problem(d: usize) -> Problem {
    build("ackley", d, -32.768, 32.768, vec![0.0; d], ackley)
}

pub fn griewank_problem(d: usize) -> Problem {
    build("griewank", d, -600.0, 600.0, vec![0.0; d], griewank)
}

pub fn schwefel226_problem(d: usize) -> Problem {
    build(
        "schwefel226",
        d,
        -500.0,
        500.0,
        vec![SCHWEFEL_OPTIMIZER; d],
        schwefel226,
    )
}

pub fn levy_problem(d: usize) -> Problem {
    build("levy", d, -10.0, 10.0, vec![1.0; d], levy)
}

/// Rastrigin composed with a fixed shift `o` and rotation `R`:
/// `f(x) = rastrigin(R (x - o))`.
pub fn rotated_rastrigin_problem(d: usize) -> Problem {
    let (shift, rotation) = rotated_rastrigin_instance(d);
    let at = shift.clone();
    build("rot-rastrigin", d, -5.12, 5.12, at, move |x| {
        let z: Vec<f64> = rotation
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x.iter().zip(&shift))
                    .map(|(r, (xi, oi))| r * (xi - oi))
                    .sum()
            })
            .collect();
        rastrigin(&z)
    })
}
