//! Divergence residuals `d_c Z_ab^c`: exact through dual numbers, or by
//! central differences on a grid for the convergence diagnostic.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{eval_zilch, NumericError};
use crate::catalog::{AnalyticSolution, FieldSample};
use crate::jet::Field;
use crate::minkowski::MetricConvention;
use crate::noether::ZilchForm;
use crate::ring::Dual;

fn unit(c: usize) -> [f64; 4] {
    std::array::from_fn(|i| if i == c { 1.0 } else { 0.0 })
}

/// Largest `|F_ab,J|`, `|G_ab,J|` at orders 0, 1, 2.
fn strength_scales(s: &FieldSample<f64>) -> [f64; 3] {
    let mut m = [0.0f64; 3];
    for j in crate::catalog::MULTI_INDICES.iter().filter(|j| j.order() < 3) {
        let dirs = j.dirs();
        for field in [Field::A, Field::C] {
            for a in 0..4 {
                for b in 0..4 {
                    let v = s.strength(field, a, b, &dirs).abs();
                    m[j.order() as usize] = m[j.order() as usize].max(v);
                }
            }
        }
    }
    m
}

/// Natural size of a current bilinear in `F` and `F'`: `|F| |F'|`. Used to
/// normalize residuals of quantities that may vanish, such as the zilch of
/// a linearly polarized wave.
pub fn zilch_scale(s: &FieldSample<f64>) -> f64 {
    let [m0, m1, _] = strength_scales(s);
    m0 * m1
}

/// Natural size of a divergence of a bilinear current: `|F| |F''| + |F'|^2`.
fn divergence_scale(s: &FieldSample<f64>) -> f64 {
    let [m0, m1, m2] = strength_scales(s);
    m0 * m2 + m1 * m1
}

/// `max_ab |d_c Z_ab^c|` from four directional dual samples.
pub fn divergence_of_sample(
    directional: &[FieldSample<Dual>; 4],
    form: ZilchForm,
    conv: &MetricConvention,
) -> Result<f64, NumericError> {
    let mut div = [[0.0f64; 4]; 4];
    for (c, s) in directional.iter().enumerate() {
        let z = eval_zilch(s, form, conv)?;
        for a in 0..4 {
            for b in 0..4 {
                div[a][b] += conv.g(c) as f64 * z.t[a][b][c].slope;
            }
        }
    }
    Ok(div.iter().flatten().fold(0.0, |m, x| m.max(x.abs())))
}

/// Relative divergence at a generic jet point (depth 3), the negative
/// control for the on-shell law.
pub fn divergence_residual_sample(s: &FieldSample<f64>, form: ZilchForm, conv: &MetricConvention) -> Result<f64, NumericError> {
    if s.depth < 3 {
        return Err(NumericError::InsufficientDepth { needed: 3, got: s.depth });
    }
    let dirs = std::array::from_fn(|c| s.directional(unit(c)));
    let scale = divergence_scale(s);
    Ok(divergence_of_sample(&dirs, form, conv)? / scale.max(f64::MIN_POSITIVE))
}

/// Largest relative `|d_c Z_ab^c|` over the events, from closed-form
/// derivatives through order 3.
pub fn divergence_residual_analytic(sol: &AnalyticSolution, form: ZilchForm, events: &[[f64; 4]]) -> Result<f64, NumericError> {
    Ok(divergence_residuals_analytic(sol, &[form], events)?[0])
}

/// [`divergence_residual_analytic`] for several forms, sampling each event
/// once.
pub fn divergence_residuals_analytic(
    sol: &AnalyticSolution,
    forms: &[ZilchForm],
    events: &[[f64; 4]],
) -> Result<Vec<f64>, NumericError> {
    let conv = sol.conv;
    let per: Vec<(Vec<f64>, f64)> = events
        .par_iter()
        .map(|&x| {
            let dirs = std::array::from_fn(|c| sol.sample_directional(x, unit(c)));
            let divs = forms
                .iter()
                .map(|&f| divergence_of_sample(&dirs, f, &conv))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((divs, divergence_scale(&sol.sample(x))))
        })
        .collect::<Result<_, NumericError>>()?;
    let scale = per.iter().map(|p| p.1).fold(0.0, f64::max);
    Ok((0..forms.len())
        .map(|k| {
            let worst = per.iter().map(|p| p.0[k]).fold(0.0, f64::max);
            if scale == 0.0 {
                worst
            } else {
                worst / scale
            }
        })
        .collect())
}

/// Central-difference grid around a set of evaluation points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct GridSpec {
    /// center of the evaluation region
    #[serde(default)]
    pub origin: [f64; 4],
    /// coarsest spacing `h`, the same on every axis
    pub spacing: f64,
    /// half-width of the region along each axis
    pub extent: f64,
    /// 2, 4 or 6
    #[serde(default = "default_stencil")]
    pub stencil_order: u8,
    /// number of grid levels, each halving `h`
    #[serde(default = "default_levels")]
    pub levels: usize,
}

fn default_stencil() -> u8 {
    4
}

fn default_levels() -> usize {
    4
}

impl GridSpec {
    /// The standard diagnostic grid for waves of frequency `omega`: 16
    /// points per wavelength at the coarsest level.
    pub fn for_frequency(omega: f64, stencil_order: u8) -> Self {
        let lambda = 2.0 * std::f64::consts::PI / omega;
        Self {
            origin: [0.0; 4],
            spacing: lambda / 16.0,
            extent: lambda / 2.0,
            stencil_order,
            levels: 4,
        }
    }

    fn weights(&self) -> Result<&'static [f64], NumericError> {
        match self.stencil_order {
            2 => Ok(&[-1.0 / 2.0, 0.0, 1.0 / 2.0]),
            4 => Ok(&[1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0]),
            6 => Ok(&[-1.0 / 60.0, 3.0 / 20.0, -3.0 / 4.0, 0.0, 3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0]),
            o => Err(NumericError::BadGrid(format!("stencil order must be 2, 4 or 6, got {o}"))),
        }
    }

    fn validate(&self, omega: f64) -> Result<(), NumericError> {
        self.weights()?;
        if !(self.spacing > 0.0 && self.spacing.is_finite()) {
            return Err(NumericError::BadGrid(format!("spacing must be positive, got {}", self.spacing)));
        }
        if self.levels < 2 {
            return Err(NumericError::BadGrid("at least two levels are needed for an observed order".into()));
        }
        let half_width = self.stencil_order as f64 / 2.0 * self.spacing;
        if self.extent < 2.0 * half_width {
            return Err(NumericError::BadGrid(format!(
                "extent {} is smaller than twice the stencil half-width {half_width}",
                self.extent
            )));
        }
        let ppw = 2.0 * std::f64::consts::PI / omega / self.spacing;
        if ppw < 16.0 {
            log::warn!("grid refused: {ppw:.1} points per wavelength");
            return Err(NumericError::Unresolved { points_per_wavelength: ppw });
        }
        Ok(())
    }

    /// Evaluation points: the 3^4 lattice at half the extent around the
    /// origin, identical at every level.
    fn points(&self) -> Vec<[f64; 4]> {
        let step = self.extent / 2.0;
        (0..81)
            .map(|n| {
                let mut m = n;
                std::array::from_fn(|axis| {
                    let k = (m % 3) as f64 - 1.0;
                    m /= 3;
                    self.origin[axis] + k * step
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub h: f64,
    pub residual: f64,
    /// `residual` over the field scale `|F| |F''| + |F'|^2` of the region
    pub relative: f64,
    /// `log2(r(2h) / r(h))`, absent at the coarsest level
    pub observed_order: Option<f64>,
}

/// `max |sum_c D_c Z_ab^c|` over the evaluation points with the chosen
/// central-difference stencil, per level. Absolute, so it scales with the
/// square of the amplitude.
pub fn divergence_residual_grid(sol: &AnalyticSolution, form: ZilchForm, grid: &GridSpec) -> Result<Vec<ConvergenceRow>, NumericError> {
    grid.validate(sol.omega)?;
    let weights = grid.weights()?;
    let half = (weights.len() / 2) as i64;
    let conv = sol.conv;
    let points = grid.points();
    let scale = points
        .iter()
        .map(|&x| divergence_scale(&sol.sample(x)))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(grid.levels);
    for level in 0..grid.levels {
        let h = grid.spacing / (1u64 << level) as f64;
        let per_point: Result<Vec<f64>, NumericError> = points
            .par_iter()
            .map(|&x| {
                let mut div = [[0.0f64; 4]; 4];
                for c in 0..4 {
                    for (k, &w) in weights.iter().enumerate() {
                        if w == 0.0 {
                            continue;
                        }
                        let mut y = x;
                        y[c] += (k as i64 - half) as f64 * h;
                        let z = eval_zilch(&sol.sample(y), form, &conv)?;
                        for a in 0..4 {
                            for b in 0..4 {
                                div[a][b] += w / h * conv.g(c) as f64 * z.t[a][b][c];
                            }
                        }
                    }
                }
                Ok(div.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs())))
            })
            .collect();
        let residual = per_point?.into_iter().fold(0.0, f64::max);
        let observed_order = rows.last().map(|prev| (prev.residual / residual).log2());
        rows.push(ConvergenceRow {
            h,
            residual,
            relative: residual / scale,
            observed_order,
        });
    }
    Ok(rows)
}
