//! Truncated Puiseux series in q^(1/M) with exact coefficients, the theta
//! and Eisenstein expansions, and evaluation of forms at series points.

mod dump;
mod evaluate;
mod generators;
mod named;
mod roots;
mod series;
mod translate;

pub use dump::{dump_series, parse_dump, MAX_DUMP_GRID};
pub use evaluate::{
    eval_cyclotomic, eval_form_at_series, eval_rational, eval_rational_at_series,
    times_eta_power, to_rational_series, MonomialCache,
};
pub use generators::{
    delta_series, eisenstein_series, eta_series, theta13_series, theta13_vector, theta5_series,
    theta5_vector, QSeries, SeriesVector, ETA_GRID, THETA13_GRID, THETA13_OFFSETS, THETA13_SIGNS,
    THETA5_GRID,
};
pub use named::{named_series, SERIES_NAMES};
pub use roots::{
    agree_through, graded_power_sum, invariant_target, leading_exponent, root_parts,
    root_power_sum, twisted_power_sum, Extraction, GradedPart, InvariantAtTheta, Level,
    ThetaPoint,
};
pub use series::{is_integral, PuiseuxSeries, EXACT};
pub use translate::{
    expected_shift_factor, inversion_defect, numeric_theta_eval, numeric_theta_vector,
    shift_z_plus_1, terms_for, to_cyclo104, SHIFT_ORDER, TAIL_TOLERANCE,
};

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeriesError {
    #[error("series grids differ: 1/{0} vs 1/{1}")]
    GridMismatch(u32, u32),
    #[error("series vector components have different truncations")]
    TruncationMismatch,
    #[error("empty series vector")]
    EmptyVector,
    #[error("polynomial has {nvars} variables but the point has {components} components")]
    ArityMismatch { nvars: usize, components: usize },
    #[error("eta scaling needs a homogeneous form")]
    NotHomogeneous,
    #[error("form has irrational coefficients")]
    NotRational,
    #[error("no Eisenstein series of weight {0}")]
    UnsupportedWeight(u32),
    #[error("no component {0}")]
    BadComponent(usize),
    #[error("no invariant of degree {0}")]
    UnknownInvariant(u32),
    #[error("no expansion named {0:?}")]
    UnknownName(String),
    #[error("grid 1/{0} does not divide 1/104")]
    GridNotDividing(u32),
    #[error("point is not in the upper half plane")]
    NotInUpperHalfPlane,
    #[error("theta tail bound {0:e} exceeds tolerance")]
    TailBound(f64),
    #[error("needed coefficients through q^{needed}, only q^{known} are known")]
    Truncation { needed: i64, known: i64 },
    #[error("series dump, line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
}
