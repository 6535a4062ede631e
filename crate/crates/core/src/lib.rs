//! Exact-arithmetic toolkit for quantitative domain theory on finite
//! carriers: generalized relations valued in `[0, ∞]` under min-plus
//! composition, their hemimetric reflexivizations, directed-set and net
//! machinery, way-below distances, Hausdorff distances with the predomain
//! completion, and formal balls — together with a check registry that turns
//! each supported proposition into a pass / counterexample / not-applicable
//! verdict on concrete instances.
//!
//! Everything is computed with exact rationals (plus an explicit `∞`), so
//! predicates such as directedness or membership in a zero-relation are
//! decided soundly, never up to an epsilon.

pub mod balls;
pub mod carrier;
pub mod gallery;
pub mod grel;
pub mod hausdorff;
pub mod json;
pub mod metric;
pub mod nets;
pub mod oracle;
pub mod order;
pub mod report;
pub mod wbd;
pub mod xreal;

pub use carrier::{Carrier, Subset, SubsetFamily};
pub use grel::{GRel, UnaryFn};
pub use report::{Clause, ClauseStatus, Report};
pub use xreal::ExtReal;

/// Errors shared by every module.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("relation is not square: {0}")]
    NotSquare(String),
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("negative value `{0}` (values live in [0, ∞])")]
    NegativeValue(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown gallery instance `{0}`")]
    UnknownGallery(String),
    #[error("carrier too large: {size} > cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("generator gave up: {0}")]
    GeneratorBudget(String),
}
