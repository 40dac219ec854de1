//! Lagrangians, the zilch symmetry and its Noether current, with exact
//! off-shell verification of every identity linking them.

mod coefficients;
pub mod forms;
pub mod strengths;
pub mod verify;

pub use coefficients::{Coefficients, Mutation};
pub use forms::{LagrangianKind, ZilchForm};
pub use strengths::{Reduction, Strengths};
pub use verify::{identity_suite, Formulation, IdentityReport, Witness};
