//! Argumentation frameworks with collective attacks (SETAFs).
//!
//! The crate provides the framework model and its structural operations
//! ([`framework`]), a brute-force reference engine for all extension
//! semantics ([`semantics`]), SCC-recursive evaluation ([`scc`]),
//! reduct-based algorithms ([`modular`]), principle checking
//! ([`principles`]), and the instance format, generators and task dispatch
//! used by the command line tool ([`io`], [`generate`], [`task`]).

pub mod argset;
pub mod framework;
pub mod generate;
pub mod io;
pub mod modular;
pub mod principles;
pub mod scc;
pub mod semantics;
pub mod task;


pub use argset::{canonicalize, ArgId, ArgSet};
pub use framework::{Attack, FrameworkError, PrimalGraph, Setaf, Subframework};
pub use semantics::{LocalContext, Semantics, SemanticsError};
