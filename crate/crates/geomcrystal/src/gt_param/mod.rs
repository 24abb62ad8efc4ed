//! Rational charts for the Grassmannian crystal: coordinate rectangles,
//! Chevalley generator products and the chart parametrization with its
//! Pluecker-ratio inverse, planar networks with the transfer-matrix /
//! path-family dictionary, tableau expansions of Pluecker coordinates,
//! and the geometric Bender-Knuth involutions.

mod bk;
mod chart;
mod chevalley;
mod jtableau;
mod network;

pub use bk::{
    geometric_bk, geometric_pr, geometric_pr_inverse, tropical_bk, tropical_bk_values,
    tropical_pr, tropical_pr_inverse, tropical_pr_inverse_values, tropical_pr_values,
};
pub use chart::{chart_t_var, chart_var, sample_rectangle, RationalRectangle};
pub use chevalley::{
    basic_elements, diagonal_form, m_interval, phi_matrix, t_gen, theta, theta_inverse,
    x_minus, BasicSubset,
};
pub use jtableau::{plucker_expr, plucker_via_jtableaux, x_ratio_expr, JTableau};
pub use network::{chart_network, interval_network, NetEdge, PlanarNetwork};
