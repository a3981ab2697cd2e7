//! The nonabelian tensor square and the invariants read off from it.

mod invariants;
mod maps;
mod presentation;
mod properties;
mod square;

pub use invariants::{homotopy_invariants, homotopy_invariants_with, HomotopyInvariants, Method};
pub use maps::InducedMap;
pub use presentation::{
    relators_from_table, tensor_square_presentation, tensor_square_presentation_capped, SymbolIndex,
    DEFAULT_ORDER_CAP,
};
pub use properties::{property_suite, property_suite_seeded, PropertyReport, Tally, PROPERTY_SAMPLES};
pub(crate) use square::element_map;
pub use square::{canonical_subgroups, commutator_map, tensor_square, ElementSet, TensorOptions, TensorSquare};
