//! Finite permutation groups and the constructions built on them.

pub mod action;
pub mod chain;
pub mod compat;
pub mod complement;
pub mod finite;
pub mod hom;
pub mod named;
pub mod perm;
pub mod quotient;
pub mod sdp;

pub use action::ActionTable;
pub use compat::{check_compatible_actions, ActionPair, CompatibilityReport, Violation};
pub use complement::find_complement;
pub use finite::{CayleyTable, FiniteGroup, Subgroup};
pub use hom::GroupHomomorphism;
pub use named::{make_named_group, make_semidirect};
pub use perm::Perm;
pub use quotient::{abelian_invariants_of_quotient, abelianization, quotient_group, Quotient};
pub use sdp::{semidirect_product, BuiltinAction, SemidirectProduct};
