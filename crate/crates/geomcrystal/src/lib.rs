//! Exact affine geometric crystals on Grassmannians and their tropicalization
//! to the affine crystal structure on rectangular semistandard tableaux.
//!
//! Everything is computed in exact arithmetic (big rationals, Laurent
//! polynomials, subtraction-free expression DAGs), so every identity checked
//! by the verification harness is an exact equality, not a numerical
//! approximation.
//!
//! The main layers, bottom up:
//!
//! * [`algebra`]: big rationals, Laurent polynomials in one indeterminate,
//!   subtraction-free expression DAGs with rational and min-plus (tropical)
//!   evaluation, and exact dense matrices.
//! * [`tableau`]: semistandard Young tableaux with crystal operators,
//!   Bender-Knuth involutions, promotion and evacuation, affine operators,
//!   Gelfand-Tsetlin patterns, and the rectangle coordinates with their
//!   rotation and reflection symmetries.
//! * [`grassmann`]: points of the affine geometric crystal on
//!   Gr(k,n) x C*, with Pluecker coordinates (cyclically extended with
//!   signs), the structure maps gamma, phi_i, eps_i, the unipotent crystal
//!   actions e_i^c, the decoration, and the cyclic shift PR.
//! * [`gt_param`]: the positive parametrization of the geometric crystal by
//!   rational rectangle charts, built from Chevalley generator products,
//!   planar networks with the Lindstroem lemma, shifted-tableau formulas for
//!   Pluecker coordinates, and the geometric Bender-Knuth involutions.
//! * [`tropical`]: symbolic subtraction-free formulas for the structure maps
//!   in chart coordinates, and their tropicalizations, which recover the
//!   combinatorial crystal on rectangular tableaux.
//! * [`loop_group`]: the embedding of the geometric crystal into loop-group
//!   matrices (folded form), the induced crystal structure on unipotent
//!   lower-triangular loop elements, and the Schuetzenberger and duality
//!   symmetries realized there.
//! * [`harness`]: the deterministic verification suites behind the
//!   `geomcrystal verify` command, with seeded sampling and JSON reports.

pub mod algebra;
pub mod grassmann;
pub mod gt_param;
pub mod harness;
pub mod loop_group;
pub mod tableau;
pub mod tropical;
