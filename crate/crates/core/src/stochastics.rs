//! Random-motion generators and the iteration schedule factors.
//!
//! Brownian steps are standard normal vectors. Lévy steps use Mantegna's
//! construction `scale * z / |y|^(1/alpha)` with `z ~ N(0, sigma_z^2)` and
//! `y ~ N(0, 1)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid_argument, Result};
use crate::rng::RngStream;
use crate::special::gamma;

/// Mantegna scale constant
/// `sigma_z = [Γ(1+α) sin(πα/2) / (Γ((1+α)/2) α 2^((α-1)/2))]^(1/α)`.
///
/// At `alpha == 2` the sine vanishes and the constant is exactly zero.
pub fn mantegna_sigma(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(invalid_argument(format!(
            "stability index {alpha} outside (0, 2]"
        )));
    }
    if alpha == 2.0 {
        return Ok(0.0);
    }
    let num = gamma(1.0 + alpha) * (PI * alpha / 2.0).sin();
    let den = gamma((1.0 + alpha) / 2.0) * alpha * 2f64.powf((alpha - 1.0) / 2.0);
    Ok((num / den).powf(1.0 / alpha))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevyParams {
    alpha: f64,
    scale: f64,
    sigma_z: f64,
}

impl LevyParams {
    /// Rejects `alpha` outside `(0, 2)`: at 2 the Mantegna constant is zero.
    pub fn new(alpha: f64, scale: f64) -> Result<Self> {
        let sigma_z = mantegna_sigma(alpha)?;
        if sigma_z <= 0.0 {
            return Err(invalid_argument(format!(
                "stability index {alpha} gives a degenerate Mantegna constant"
            )));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(invalid_argument(format!(
                "Lévy scale {scale} must be positive"
            )));
        }
        Ok(Self {
            alpha,
            scale,
            sigma_z,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn sigma_z(&self) -> f64 {
        self.sigma_z
    }
}

impl Default for LevyParams {
    fn default() -> Self {
        Self::new(1.5, 0.05).expect("default Lévy parameters are valid")
    }
}

/// `d` independent standard normal draws.
pub fn brownian_vector(rng: &mut RngStream, d: usize) -> Result<Vec<f64>> {
    if d < 1 {
        return Err(invalid_argument("Brownian vector needs d >= 1"));
    }
    Ok(rng.normal_vec(d))
}

/// One Mantegna component. Draw order: `z`, then `y` (redrawn while zero).
pub(crate) fn levy_component(rng: &mut RngStream, params: &LevyParams) -> f64 {
    let z = params.sigma_z * rng.normal();
    let mut y = rng.normal();
    while y == 0.0 {
        y = rng.normal();
    }
    params.scale * z / y.abs().powf(1.0 / params.alpha)
}

/// `d` independent Lévy steps, component by component.
pub fn levy_vector(rng: &mut RngStream, d: usize, params: &LevyParams) -> Result<Vec<f64>> {
    if d < 1 {
        return Err(invalid_argument("Lévy vector needs d >= 1"));
    }
    Ok((0..d).map(|_| levy_component(rng, params)).collect())
}

/// Base of the step-control factor CF.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CfVariant {
    /// `(t/T)^(2t/T)`
    #[default]
    Rising,
    /// `(1 - t/T)^(2t/T)`
    Mpa,
}

fn check_iteration(t: usize, max_iter: usize) -> Result<()> {
    if t < 1 || t > max_iter {
        return Err(invalid_argument(format!(
            "iteration {t} outside 1..={max_iter}"
        )));
    }
    Ok(())
}

pub fn cf_factor(t: usize, max_iter: usize, variant: CfVariant) -> Result<f64> {
    check_iteration(t, max_iter)?;
    let r = t as f64 / max_iter as f64;
    let base = match variant {
        CfVariant::Rising => r,
        CfVariant::Mpa => 1.0 - r,
    };
    Ok(base.powf(2.0 * r))
}

/// Exponent used by the adaptive Brownian scale `(1 - t/T)^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum BrownianExponent {
    /// `e = t/T`
    #[default]
    #[serde(rename = "t_over_T")]
    TOverT,
    /// `e = 1/T`
    #[serde(rename = "one_over_T")]
    OneOverT,
}

pub fn apts_brownian_factor(t: usize, max_iter: usize, exponent: BrownianExponent) -> Result<f64> {
    check_iteration(t, max_iter)?;
    let r = t as f64 / max_iter as f64;
    let e = match exponent {
        BrownianExponent::TOverT => r,
        BrownianExponent::OneOverT => 1.0 / max_iter as f64,
    };
    Ok((1.0 - r).powf(e))
}

pub fn apts_levy_factor(t: usize, max_iter: usize) -> Result<f64> {
    check_iteration(t, max_iter)?;
    Ok(1.0 - t as f64 / max_iter as f64)
}

/// Scales a Brownian vector by `(1 - t/T)^(t/T)`.
pub fn apts_scale_brownian(rb: &[f64], t: usize, max_iter: usize) -> Result<Vec<f64>> {
    apts_scale_brownian_with(rb, t, max_iter, BrownianExponent::TOverT)
}

pub fn apts_scale_brownian_with(
    rb: &[f64],
    t: usize,
    max_iter: usize,
    exponent: BrownianExponent,
) -> Result<Vec<f64>> {
    let f = apts_brownian_factor(t, max_iter, exponent)?;
    Ok(rb.iter().map(|v| v * f).collect())
}

/// Scales a Lévy vector by `(1 - t/T)`.
pub fn apts_scale_levy(rl: &[f64], t: usize, max_iter: usize) -> Result<Vec<f64>> {
    let f = apts_levy_factor(t, max_iter)?;
    Ok(rl.iter().map(|v| v * f).collect())
}
