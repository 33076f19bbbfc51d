//! Exact arithmetic: rationals, cyclotomic fields Q(ζₙ), embeddings into C
//! and the algebraic constants used by the six-dimensional representation.

mod constants;
mod cyclotomic;
mod embed;
mod ring;

pub use constants::{
    eval_int_poly, legendre, periods, quadratic_gauss_sum, sqrt13, sqrt5, PeriodSet,
    PERIOD_COSETS,
};
pub use cyclotomic::{cyclotomic_polynomial, CycloField, CyclotomicNumber};
pub use embed::{
    bigint_to_ibig, embed, embed_c64, float_from_f64, rational_to_float, root_of_unity,
    ComplexApprox, Float, DEFAULT_PRECISION,
};
pub use ring::{format_rational, int, parse_rational, rat, Field, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("cyclotomic order must be at least 1")]
    ZeroOrder,
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("twist exponent {k} is not coprime to {order}")]
    NotCoprime { k: i64, order: u32 },
    #[error("Q(ζ{from}) is not a subfield of Q(ζ{to})")]
    NotASubfield { from: u32, to: u32 },
    #[error("expected {expected} basis coefficients, got {got}")]
    BasisLength { expected: usize, got: usize },
    #[error("precision {0} bits is below the 53-bit minimum")]
    Precision(usize),
    #[error("malformed cyclotomic text: {0:?}")]
    Parse(String),
}
