//! The tropical bridge: subtraction-free symbolic forms of the
//! chart-conjugated crystal maps, their min-plus evaluations, and
//! exhaustive checks that the resulting piecewise-linear maps realize the
//! combinatorial crystal on rectangle coordinates.

mod checks;
mod ops;
mod symbolic;

pub use checks::{check_trop_theorems, TropFailure};
pub use ops::TropicalCrystal;
pub use symbolic::{
    action_var, build_symbolic, decoration_closed_expr, rectangle_excess, MapId, SymbolicMap,
};
