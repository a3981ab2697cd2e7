//! Finite presentations and Todd–Coxeter coset enumeration.

pub mod enumerate;
pub mod fp;
pub mod regular;
pub mod word;

pub use enumerate::{
    todd_coxeter, CosetTable, EnumerationOptions, EnumerationStats, Strategy, DEFAULT_MAX_CELLS,
};
pub use fp::FpGroup;
pub use regular::{regular_permutation_rep, RegularGroup, WordEvaluator};
pub use word::Word;
