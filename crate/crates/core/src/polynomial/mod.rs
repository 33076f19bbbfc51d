//! Sparse multivariate polynomials over exact rings, linear substitutions,
//! symmetric functions and evaluation over prime fields.

mod monomial;
mod multipoly;
mod prime_field;
mod symmetric;

pub use monomial::{Monomial, MAX_DEGREE, MAX_VARS};
pub use multipoly::MultiPoly;
pub use prime_field::{
    default_prime, is_prime, mul_mod, pow_mod, PrimeField, PrimeFieldPoint, ReduceModP, ROOT_LCM,
};
pub use symmetric::{elementary_symmetric, express_in_span, power_sum, rank};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("matrix with {rows} rows does not act on {nvars} variables")]
    DimensionMismatch { nvars: usize, rows: usize },
    #[error("total degree exceeds the supported maximum")]
    DegreeOverflow,
    #[error("empty sequence of forms")]
    EmptySequence,
    #[error("index {k} out of range for {len} forms")]
    OutOfRange { k: u32, len: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {modulus} has no element of multiplicative order {order}")]
    ModulusOrder { modulus: u64, order: u32 },
    #[error("a coefficient denominator vanishes modulo {0}")]
    DenominatorVanishes(u64),
    #[error("basis is linearly dependent (no pivot in column {0})")]
    Dependent(usize),
    #[error("target is not in the span of the basis")]
    Inconsistent,
}
