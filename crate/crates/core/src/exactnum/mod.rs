//! Exact arithmetic over `Q(i)` and `Q(i, sqrt(m+ni))`, Galois conjugation,
//! certified embeddings into `C`, and exact signs of the real quantities all
//! geometric predicates reduce to.

pub mod approx;
pub mod biquad;
pub mod element;
pub mod field;
pub mod gaussian;

pub use approx::{embed, CertifiedApprox, Dyadic};
pub use biquad::BiquadExpr;
pub use element::{FieldElement, QuadraticElement};
pub use field::{make_field, FieldType, QuadraticField, RealRadical};
pub use gaussian::{GaussianInt, GaussianRational};

use std::sync::Arc;

use crate::error::Result;

/// Arithmetic operation selector for [`gauss_arith`] and [`elem_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn gauss_arith(a: &GaussianRational, b: &GaussianRational, op: Op) -> Result<GaussianRational> {
    Ok(match op {
        Op::Add => a + b,
        Op::Sub => a - b,
        Op::Mul => a * b,
        Op::Div => a.checked_div(b)?,
    })
}

pub fn elem_arith(a: &FieldElement, b: &FieldElement, op: Op) -> Result<FieldElement> {
    match op {
        Op::Add => a.try_add(b),
        Op::Sub => a.try_sub(b),
        Op::Mul => a.try_mul(b),
        Op::Div => a.try_div(b),
    }
}

pub fn galois_conjugate(a: &FieldElement) -> Result<FieldElement> {
    a.conjugate()
}

/// Exact sign of a real quantity.
pub fn real_sign(e: &BiquadExpr) -> Result<i8> {
    e.sign()
}

/// `sqrt(m + ni)` as a field element; squares of `Z[i]` come back demoted
/// to their principal Gaussian-integer root.
pub fn sqrt_gaussian(d: &GaussianInt) -> Result<FieldElement> {
    if let Some(r) = d.sqrt_exact() {
        return Ok(r.into());
    }
    Ok(FieldElement::sqrt_of(Arc::new(QuadraticField::new(d.clone())?)))
}
