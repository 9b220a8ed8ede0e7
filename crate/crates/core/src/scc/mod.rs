//! SCC-recursive evaluation: decomposition of the primal graph, the
//! defeated / provisionally defeated / undefeated partition of a component,
//! local frameworks with mitigated attacks, and the engines built on them.

mod decomposition;
mod gf;
mod incremental;
mod local;
mod verify;

use thiserror::Error;

use crate::argset::ArgSet;
use crate::semantics::SemanticsError;

pub use decomposition::{sccs, SccDecomposition};
pub use gf::{gf_evaluate, gf_evaluate_with, gf_stable, is_gf_member};
pub use incremental::Incremental;
pub use local::{local_framework, partition_dpu, DpuPartition, Inheritance, LocalFramework};
pub use verify::verify_preferred;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SccError {
    #[error("{0} is not a strongly connected component")]
    NotAnScc(ArgSet),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}
