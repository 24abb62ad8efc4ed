//! Semistandard Young tableaux, crystal operators, Bender-Knuth
//! involutions, promotion and evacuation, Gelfand-Tsetlin patterns, and
//! rectangle coordinates with their rotation and reflection symmetries.

mod bk;
mod gt;
mod rect;
mod ssyt;

pub use bk::{affine_op, affine_stats, crystal_op_mod_n, crystal_stats_mod_n};
pub use gt::GTPattern;
pub use rect::{all_rectangles, reflect_tableau, rotate_tableau, KRectangle, SymmetryKind};
pub use ssyt::{bracket, Bracketing, Direction, Tableau, ValidationError};
