//! Exact computer algebra for the Onsager algebra.

pub mod cli;
pub mod closed_ideals;
mod display;
pub mod elduque;
pub mod expr;
pub mod lie;
pub mod linalg;
pub mod loop_algebra;
pub mod onsager;
pub mod poly;
pub mod scalar;
pub mod suites;
pub mod tetrahedron;
