//! Exact-arithmetic workbench for cubic Jordan algebras.
//!
//! The crate builds cubic Jordan algebras from degree-3 associative algebras
//! by the first Tits construction, derives their quadratic Jordan structure,
//! and checks the defining identities, isotopy and structure-group moves,
//! and Springer-form constructions exactly over `Q` and odd prime fields.

pub mod cli;
pub mod config;
pub mod deg3;
pub mod error;
pub mod isotopy;
pub mod jordan;
pub mod linalg;
pub mod quadforms;
pub mod report;
pub mod scalars;
pub mod springer;
pub mod tits;

pub use error::{Error, Result};
