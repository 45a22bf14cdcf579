//! The BMW algebras `K_n`, their Hecke quotients, and the idempotents and
//! tableau morphisms used to build skein-module bases.

mod algebra;
mod hecke;
mod persist;
mod relations;
mod section;
mod store;

pub use algebra::{default_algebra, generator, hecke_mul, project_pi, Algebra};
pub use hecke::{young_idempotent, young_quasi_idempotent};
pub use store::{IdempotentStore, Link, Section, TabPair};
pub use persist::FORMAT_VERSION;
pub use relations::{check_relations, RelationCheck};
pub use section::{ideal_generators, ideal_unit, section_by_annihilation, section_of};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BmwError {
    #[error("cannot stack {upper} bottom points onto {lower} top points")]
    Mismatch { upper: usize, lower: usize },
    #[error("Young symmetrizer is not quasi-idempotent")]
    Normalization,
    #[error("n = {n} exceeds the configured limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("linear system for an idempotent is singular or inconsistent")]
    Singular,
}
