//! Clifford quartic forms `P̃(w) = Σ ε_i (ᵀw S_i w)²` built from representations of
//! `R_{p,q} = C_p ⊗ C_q`: exact construction and identity checks, symmetry
//! algebra dimensions, classification tables and local zeta gamma factors.

pub mod classify;
pub mod error;
pub mod linalg;
pub mod quartic;
pub mod repkit;
pub mod sampling;
pub mod signed_perm;
pub mod symlie;
pub mod zetafe;

mod pauli;

pub use error::{Error, Result};
pub use repkit::CliffordRep;
pub use signed_perm::SignedPerm;
