//! Numerics for the deformed oscillator `[x, p] = i(1 + alpha x^2 + beta p^2)`
//! through its q-ladder realization: parameter derivation, truncated
//! Fock-space operators, spectra, the deformed Hermite polynomial families,
//! closed-form matrix elements, self-adjointness diagnostics, su(2)-style
//! ladder representations, and a position-space grid realization.

mod dd;
pub mod error;
pub mod fock;
pub mod frame;
pub mod matrix_elements;
pub mod polynomials;
pub mod spectra;
pub mod su2;
pub mod xrep;

pub use error::{Error, Result};
pub use fock::{
    build_hamiltonian, build_ladder, build_momentum, build_position, commutator_residual,
    ketbra, merge_normal_words, normal_order_expansion, theta_identity_residual,
    uncertainty_check, vacuum_projector_plain_exponential, vacuum_projector_series, NormalWord,
    OperatorLabel, TruncatedOperator,
};
pub use frame::{
    energy_level, log_q_factorial, log_q_number, q_factorial, q_number, DeformedFrame, QContext,
};
pub use matrix_elements::{
    antinormal_word_element, normal_ordered_xp_element, normal_word_element,
    selection_rule_shifts,
};
pub use polynomials::{
    eval_p, eval_p_sequence, eval_qhermite, eval_qhermite_momentum, p_coefficients,
    qhermite_coefficients, relate_p_to_h, zeros, Family, RecurrencePolynomial,
};
pub use spectra::{
    deficiency_diagnostics, eigendecompose, log_position_offdiag, momentum_phase_reduction,
    DeficiencyReport, TridiagonalSymmetric,
};
pub use su2::{
    build_representation, hamiltonian_eigenvalue_formula, hamiltonian_eigenvalue_ladder_route,
    j2_eigenvalue_formula, ladder_coefficients, quadratic_hamiltonian,
    quadratic_hamiltonian_ladder_route, Su2Frame, Su2Representation,
};
pub use xrep::{
    build_momentum_xrep, kernel_phase, kernel_transform, weighted_hermiticity_residual, Grid1D,
    WeightedOperator,
};
