//! The form catalogs in six variables, their transformation laws under S
//! and T, the invariants Φⱼ, and the binary icosahedral forms.

mod catalog;
mod export;
mod icosa;
mod invariants;
mod laws;
mod tables;

pub use catalog::*;
pub use export::{export_catalog, parse_catalog, ParsedCatalog, ParsedForm};
pub use icosa::*;
pub use invariants::*;
pub use laws::*;
pub use tables::*;

use crate::exact::ExactError;
use crate::group::GroupError;
use crate::polynomial::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Law(String),
    #[error("degree {0} is too large to expand")]
    TooLarge(u32),
    #[error("catalog text, line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
