//! Exact arithmetic substrate: big rationals, Laurent polynomials in one
//! indeterminate, their fraction field, subtraction-free expression DAGs
//! with rational and min-plus evaluation, and dense exact matrices.

mod expr;
mod extint;
mod field;
mod frac;
mod laurent;
mod matrix;
mod rat;

pub use expr::{EvalError, ExprArena, ExprId, Node, TropValue, VarId};
pub use extint::ExtInt;
pub use field::Field;
pub use frac::LaurentFrac;
pub use laurent::LaurentPoly;
pub use matrix::{LaurentMatrix, Matrix, QMatrix};
pub use rat::{rat, rat_int, Rat};
