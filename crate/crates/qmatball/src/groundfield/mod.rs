//! Exact arithmetic in ℚ(i)(q^{1/2}) and q-combinatorial helpers.
//!
//! The formal variable is `s`, with `s² = q`. Half-integer powers of `q`
//! are therefore ordinary powers of `s`.

mod gaussian;
mod poly;
mod qcomb;
mod scalar;

pub use gaussian::Gq;
pub use poly::Poly;
pub use qcomb::{q_exp_truncated, q_factorial};
pub use scalar::{parse_rational, rational, rational_sqrt, FieldError, Scalar};
