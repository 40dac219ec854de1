//! Numeric evaluation of the zilch forms, stress-energy, the 1+3
//! decomposition and divergence residuals on field samples.
//!
//! Everything here is written in matrix form over a generic [`Ring`] and is
//! independent of the symbolic path, so the two can cross-check each other.
//! Tensors are returned with all indices down.

mod decompose;
mod divergence;
mod forms;
mod output;

pub use decompose::{
    contraction_decomposition, electric_magnetic, eval_decomposition, optical_chirality, zi0j_rewritten, DecompositionReport,
    DecompositionVariant, ElectricMagnetic,
};
pub use divergence::{
    divergence_of_sample, divergence_residual_analytic, divergence_residual_grid, divergence_residual_sample,
    divergence_residuals_analytic, zilch_scale, ConvergenceRow, GridSpec,
};
pub use forms::{eval_stress_energy, eval_zilch, eval_jet_polynomial, eval_zilch_equivalent, modification_term, FieldTensors};
pub use output::{write_convergence_csv, write_rank3_csv};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("sample depth {got} is below the {needed} this evaluation needs")]
    InsufficientDepth { needed: u8, got: u8 },
    #[error("coarsest grid has {points_per_wavelength:.1} points per wavelength, at least 16 are needed")]
    Unresolved { points_per_wavelength: f64 },
    #[error("invalid grid: {0}")]
    BadGrid(String),
    #[error("polynomial depends on explicit coordinates")]
    ExplicitCoordinate,
}

#[cfg(test)]
mod tests;
