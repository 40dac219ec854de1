//! Exact symbolic calculus on the finite jet space of the potentials.
//!
//! Free tensor indices are always concrete: a tensor family is a table of
//! polynomials indexed by assignments in `0..4`, and every identity is
//! checked entry by entry.

mod calculus;
mod constraint;
mod coord;
mod family;
mod poly;

use thiserror::Error;

pub use calculus::{
    conjugate, divergence, euler_operator, noether_current, partial, prolong_apply, substitute,
    total_derivative, total_derivative_multi,
};
pub use constraint::{dual_strength, expand_strengths, strength, substitute_duality_constraint};
pub use coord::{Derivs, Field, JetCoordinate, StrengthCoordinate, Var, MAX_ORDER};
pub use family::{EvolutionaryField, FreeIndexFamily};
pub use poly::{Coeff, ComplexPoly, Gauss, JetPolynomial, Monomial, RealPoly, MAX_DEGREE};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JetError {
    #[error("differentiating {coordinate} would exceed jet order {max}")]
    OrderOverflow { coordinate: String, max: u8 },
    #[error("Euler operator supports jet order <= {max}, got {order}")]
    EulerOrder { order: u8, max: u8 },
    #[error("prolongation to order {requested} cannot act on an expression of order {needed}")]
    ProlongationOrder { needed: u8, requested: u8 },
    #[error("deferred field strengths must be expanded before prolongation")]
    DeferredStrength,
    #[error("C-jet outside a field-strength pattern in monomial `{monomial}`")]
    BareCJet { monomial: String },
}

/// True iff the canonical term map is empty.
pub fn is_identically_zero<K: Coeff>(p: &JetPolynomial<K>) -> bool {
    p.is_empty()
}
