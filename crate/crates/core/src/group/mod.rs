//! Exact 6×6 matrices over Q(ζ₁₃): the generators S and T, the derived
//! elements P, Q, H, and breadth-first closure of matrix groups.

mod cache;
mod closure;
mod generators;
mod matrix;

pub use cache::{cache_key, load_or_build, parse_group, write_group, CacheStatus, GroupDump, CACHE_HEADER};
pub use closure::{closure, closure_with, ClosureMode, MatrixGroup, DEFAULT_BOUND};
pub use generators::{
    build_h, gen_p, gen_q, gen_s, gen_t, h_display, h_word, minus_identity, s_from_pattern,
    s_t_power, t_inverse, H_SIGNED_PERM, H_WORD, S_PATTERN, T_EXPONENTS,
};
pub use matrix::CycloMatrix;

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("closure exceeded the bound of {0} elements")]
    BoundExceeded(usize),
    #[error("group cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
