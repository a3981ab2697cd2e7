//! Nonabelian tensor squares of finite groups and the homotopy invariants
//! derived from them.

pub mod abelian;
pub mod catalog;
pub mod cli;
pub mod coset;
pub mod error;
pub mod group;
pub mod report;
pub mod tensor;
pub mod theorems;

pub use error::{Error, Result};
