//! Loop-group realization of the affine geometric crystal: folded
//! Laurent-matrix arithmetic, the unipotent-crystal matrix map from
//! Grassmannian points, the induced structure functions and decoration,
//! and the Schuetzenberger / duality symmetries with their tropical
//! shadows.

mod folded;
mod gmap;
mod symm;

pub use folded::{
    lower_act, lower_crystal_act, lower_eps, lower_gamma, lower_phi, tau, xhat, FoldedMatrix,
};
pub use gmap::{
    beta, beta_zero, chi_computes_decoration, g_at_zero_matches_chart, g_det_matches,
    g_first_block_matches_diagonal_form, g_induces_crystal, g_intertwines_generator, g_matrix,
    g_specialized_rank, g_transports_shift, h_is_scaled_inverse, h_matrix, h_transports_shift,
    pi_g_is_identity, pi_k, require_cyclic_pluckers, u_action_point, u_action_shift_transport,
};
pub use symm::{
    complement_swaps_pluckers, d_chart_closed_form, d_commutes_with_s, d_commutes_with_shift,
    d_compares_twisted_inverse, d_is_involution, d_reverses_action, d_swaps_structure_functions,
    duality_d, g_of_s_is_flip, jacobi_complementary_minors, orthogonal_complement, q_inverse,
    q_minor, reverse_rows, reverse_rows_swaps_pluckers, s_basic_pluckers, s_chart_closed_form,
    s_conjugates_shift, s_cyclic_pluckers, s_is_involution, s_plucker_minors, s_reverses_action,
    s_swaps_structure_functions, schuetzenberger_s, twisted_inverse_entries,
};
