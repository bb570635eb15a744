//! Constrained engineering design problems.
//!
//! All three use the corrected formulations common in the literature. The
//! constraints that carry physical units are written in normalized form
//! (`value / limit - 1 <= 0`), and values up to [`FEASIBILITY_TOLERANCE`]
//! count as satisfied so that optima printed to eight significant digits
//! evaluate as feasible.

use std::f64::consts::PI;

use crate::problem::{Bounds, Constraint, KnownOptimum, Problem};

pub const FEASIBILITY_TOLERANCE: f64 = 1e-6;

/// Violation reported for a constraint whose formula breaks down (zero
/// denominator).
const BROKEN_CONSTRAINT: f64 = 1e6;

fn finite_or_broken(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        BROKEN_CONSTRAINT
    }
}

pub fn spring_objective(x: &[f64]) -> f64 {
    (x[2] + 2.0) * x[1] * x[0] * x[0]
}

/// Tension/compression spring, `x = (d, D, N)`: wire diameter, mean coil
/// diameter and number of active coils.
///
/// ```text
/// f  = (N + 2) D d^2
/// g1 = 1 - D^3 N / (71785 d^4)
/// g2 = (4 D^2 - d D) / (12566 (D d^3 - d^4)) + 1 / (5108 d^2) - 1
/// g3 = 1 - 140.45 d / (D^2 N)
/// g4 = (d + D) / 1.5 - 1
/// ```
///
/// `g2` uses the standard `D d^3` denominator and trailing `- 1`. When
/// `D == d` that denominator vanishes and `g2` reports a large violation.
pub fn spring_problem() -> Problem {
    let bounds = Bounds::new(vec![0.05, 0.25, 2.0], vec![2.0, 1.3, 15.0]).expect("valid box");
    Problem::new("spring", bounds, spring_objective)
        .with_constraint(Constraint::new("deflection", |x| {
            1.0 - x[1].powi(3) * x[2] / (71785.0 * x[0].powi(4))
        }))
        .with_constraint(Constraint::new("shear stress", |x| {
            let (d, dc) = (x[0], x[1]);
            finite_or_broken(
                (4.0 * dc * dc - d * dc) / (12566.0 * (dc * d.powi(3) - d.powi(4)))
                    + 1.0 / (5108.0 * d * d)
                    - 1.0,
            )
        }))
        .with_constraint(Constraint::new("surge frequency", |x| {
            1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2])
        }))
        .with_constraint(Constraint::new("outside diameter", |x| {
            (x[0] + x[1]) / 1.5 - 1.0
        }))
        .with_feasibility_tolerance(FEASIBILITY_TOLERANCE)
        .with_optimum(KnownOptimum {
            value: 0.012_665_232_788,
            location: Some(vec![0.051_689_06, 0.356_717_74, 11.288_965]),
        })
}

pub fn pressure_vessel_objective(x: &[f64]) -> f64 {
    0.6224 * x[0] * x[2] * x[3]
        + 1.7781 * x[1] * x[2] * x[2]
        + 3.1661 * x[0] * x[0] * x[3]
        + 19.84 * x[0] * x[0] * x[2]
}

/// Cylindrical pressure vessel, `x = (Ts, Th, R, L)`: shell and head
/// thickness, inner radius, cylinder length. Continuous relaxation.
///
/// ```text
/// g1 = -Ts + 0.0193 R
/// g2 = -Th + 0.00954 R
/// g3 = 1 - (pi R^2 L + 4/3 pi R^3) / 1296000   (volume >= 1296000)
/// g4 = L - 240
/// ```
///
/// The shell/head constraints carry the minus signs lost in common
/// typesettings, and `g3` is the volume requirement divided by 1296000.
pub fn pressure_vessel_problem() -> Problem {
    let bounds =
        Bounds::new(vec![0.1, 0.1, 10.0, 10.0], vec![2.0, 2.0, 200.0, 200.0]).expect("valid box");
    Problem::new("pressure-vessel", bounds, pressure_vessel_objective)
        .with_constraint(Constraint::new("shell thickness", |x| {
            -x[0] + 0.0193 * x[2]
        }))
        .with_constraint(Constraint::new("head thickness", |x| {
            -x[1] + 0.00954 * x[2]
        }))
        .with_constraint(Constraint::new("volume", |x| {
            1.0 - (PI * x[2] * x[2] * x[3] + 4.0 / 3.0 * PI * x[2].powi(3)) / 1_296_000.0
        }))
        .with_constraint(Constraint::new("length", |x| x[3] - 240.0))
        .with_feasibility_tolerance(FEASIBILITY_TOLERANCE)
        .with_optimum(KnownOptimum {
            value: 5_885.332_773_6,
            location: Some(vec![0.778_168_64, 0.384_649_16, 40.319_618_7, 200.0]),
        })
}

pub mod welded {
    //! Welded-beam constants and response quantities.

    pub const LOAD: f64 = 6000.0;
    pub const LENGTH: f64 = 14.0;
    pub const YOUNG: f64 = 30e6;
    pub const SHEAR_MODULUS: f64 = 12e6;
    pub const MAX_SHEAR: f64 = 13_600.0;
    pub const MAX_BENDING: f64 = 30_000.0;
    pub const MAX_DEFLECTION: f64 = 0.25;

    /// Weld shear stress, combining the direct component
    /// `P / (sqrt(2) h l)` with the torsional component `M R / J`.
    pub fn shear_stress(x: &[f64]) -> f64 {
        let (h, l, t) = (x[0], x[1], x[2]);
        let direct = LOAD / (std::f64::consts::SQRT_2 * h * l);
        let moment = LOAD * (LENGTH + l / 2.0);
        let half_span = (h + t) / 2.0;
        let radius = (l * l / 4.0 + half_span * half_span).sqrt();
        let polar =
            2.0 * (std::f64::consts::SQRT_2 * h * l * (l * l / 4.0 + half_span * half_span));
        let torsional = moment * radius / polar;
        (direct * direct + 2.0 * direct * torsional * l / (2.0 * radius) + torsional * torsional)
            .sqrt()
    }

    pub fn bending_stress(x: &[f64]) -> f64 {
        6.0 * LOAD * LENGTH / (x[3] * x[2] * x[2])
    }

    pub fn deflection(x: &[f64]) -> f64 {
        4.0 * LOAD * LENGTH.powi(3) / (YOUNG * x[2].powi(3) * x[3])
    }

    pub fn buckling_load(x: &[f64]) -> f64 {
        let (t, b) = (x[2], x[3]);
        4.013 * YOUNG * (t * t * b.powi(6) / 36.0).sqrt() / (LENGTH * LENGTH)
            * (1.0 - t / (2.0 * LENGTH) * (YOUNG / (4.0 * SHEAR_MODULUS)).sqrt())
    }
}

pub fn welded_beam_objective(x: &[f64]) -> f64 {
    1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1])
}

/// Welded beam, `x = (h, l, t, b)`: weld thickness, weld length, bar height,
/// bar thickness. P = 6000 lb, L = 14 in, E = 30e6 psi, G = 12e6 psi.
///
/// ```text
/// g1 = tau(x) / 13600 - 1
/// g2 = sigma(x) / 30000 - 1
/// g3 = h - b
/// g4 = delta(x) / 0.25 - 1
/// g5 = 1 - Pc(x) / P
/// ```
///
/// The polar moment of the weld group is `J = 2 sqrt(2) h l (l^2/4 + ((h+t)/2)^2)`.
/// Under this form the best known design costs 1.6952472.
pub fn welded_beam_problem() -> Problem {
    use welded::*;
    let bounds =
        Bounds::new(vec![0.1, 0.1, 0.1, 0.1], vec![2.0, 10.0, 10.0, 2.0]).expect("valid box");
    Problem::new("welded-beam", bounds, welded_beam_objective)
        .with_constraint(Constraint::new("shear stress", |x| {
            shear_stress(x) / MAX_SHEAR - 1.0
        }))
        .with_constraint(Constraint::new("bending stress", |x| {
            bending_stress(x) / MAX_BENDING - 1.0
        }))
        .with_constraint(Constraint::new("weld thickness", |x| x[0] - x[3]))
        .with_constraint(Constraint::new("deflection", |x| {
            deflection(x) / MAX_DEFLECTION - 1.0
        }))
        .with_constraint(Constraint::new("buckling", |x| {
            1.0 - buckling_load(x) / LOAD
        }))
        .with_feasibility_tolerance(FEASIBILITY_TOLERANCE)
        .with_optimum(KnownOptimum {
            value: 1.695_247_164_902,
            location: Some(vec![0.205_729_64, 3.253_120_04, 9.036_623_91, 0.205_729_64]),
        })
}
