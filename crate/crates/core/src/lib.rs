//! Exact and numeric verification of the zilch conservation law as the
//! Noether current of a variational symmetry of duality-symmetric Maxwell
//! theory.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod cli;
pub mod jet;
pub mod noether;
pub mod numeric;
pub mod minkowski;
pub mod ring;
