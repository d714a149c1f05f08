//! Garside groups, Dehornoy structures and the left orders they induce on
//! braid groups and dihedral Artin groups.
//!
//! The [`garside`] module holds the generic machinery; [`braid`] and
//! [`dihedral`] are the two concrete models; [`order`] decides signs and
//! comparisons; [`verifier`] checks the structural hypotheses exhaustively
//! against independent oracles such as [`handle`] reduction.

pub mod braid;
pub mod cli;
pub mod context;
pub mod dihedral;
pub mod error;
pub mod garside;
pub mod handle;
pub mod order;
pub mod verifier;
pub mod word;

pub use context::GroupContext;
pub use error::{Error, Result};
