//! Level-2 Fock space combinatorics and the classification of unitary
//! finite-dimensional simple modules for type B rational Cherednik algebras.

pub mod abacus;
pub mod classify;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod partitions;
pub mod rational;

pub use error::{Error, Result};
