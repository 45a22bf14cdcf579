//! Exact computations in Kauffman skein theory.

pub mod bmw;
pub mod cli;
pub mod coeff;
pub mod eval;
pub mod linalg;
pub mod tangle;
pub mod torus;
pub mod young;
