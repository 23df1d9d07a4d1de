//! Exact symbolic engine for the quantum matrix ball.

pub mod algebras;
pub mod cli;
pub mod fock_reps;
pub mod groundfield;
pub mod hopf_action;
pub mod linalg;
pub mod ncpoly;
pub mod qtrace_integral;
pub mod rmatrix;
pub mod sln_minors;
