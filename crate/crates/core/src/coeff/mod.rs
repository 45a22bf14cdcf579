//! Exact arithmetic in the coefficient field `Q(α, s)`.

mod laurent;
pub mod poly;
mod ratfn;

pub use laurent::BiLaurent;
pub use ratfn::{LazySum, RatFn, TermJson};
pub(crate) use ratfn::mod_inv;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero in Q(α, s)")]
    DivisionByZero,
}

/// Field operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arith {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(x: &RatFn, y: &RatFn, which: Arith) -> Result<RatFn, CoeffError> {
    match which {
        Arith::Add => Ok(x.add(y)),
        Arith::Sub => Ok(x.sub(y)),
        Arith::Mul => Ok(x.mul(y)),
        Arith::Div => x.div(y),
    }
}

/// `δ = (α − α⁻¹)/(s − s⁻¹) + 1`
pub fn loop_value() -> RatFn {
    RatFn::loop_value()
}

pub fn is_invertible(x: &RatFn) -> bool {
    x.is_invertible()
}
