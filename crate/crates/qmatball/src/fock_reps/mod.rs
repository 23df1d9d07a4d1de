//! Fock-space representations: `π₊`, the tensor construction `Π̃`, the induced
//! representation `Π` of the matrix ball, the abstract module `ℋ` with its
//! Gram form, and the type and equivalence checks between them.

mod fock;
mod operator;
mod pi;
mod theta;
mod types;

pub use fock::{
    add_vec, adjoint_apply, basis_of_degree, basis_upto, degree, fock_norm2, inner, lambda_chain, norm2, permutation_product, pi_plus, reduced_decomposition_u,
    scale_vec, unit, FockIndex, FockVec, TensorRep,
};
pub use operator::TruncatedOperator;
pub use pi::{pi_plus_operator, rep_f0, rep_minor, rep_ncpoly, rep_pi_z, rep_t, rep_tilde_pi, rep_tpoly, PiRep};
pub use theta::{check_equivalence, gram_matrix, h_basis, inner_h, rule_failures, theta_matrix, z_part, EquivalenceReport};
pub use types::{check_type, TypeReport};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FockError {
    #[error("requested slice of degree {requested} exceeds the certified degree {certified}")]
    CutoffTooSmall { requested: u32, certified: i32 },
    #[error("symbol {0} has no image in this representation")]
    NotRepresented(String),
    #[error("element {0} does not lie in the f0-module")]
    NotInH(String),
}
