//! Finitely generated abelian groups: invariant factors, Smith normal form,
//! and the closed-form tensor calculus for abelian groups.

mod calculus;
mod invariants;
mod matrix;
mod snf;
mod structure;

pub use calculus::{
    abelian_subquotients, abelian_tensor_square, delta_in_nabla, AbelianSubquotients, BasedAbelianGroup,
};
pub use invariants::{factorize, AbelianInvariants};
pub use matrix::IntegerMatrix;
pub use snf::{cokernel_invariants, smith_normal_form, subquotient_invariants, SnfResult};
pub use structure::AbelianCoordinates;
