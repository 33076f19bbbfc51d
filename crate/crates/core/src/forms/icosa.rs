//! The binary icosahedral invariants f, H, T.

use crate::exact::{rat, Rational};
use crate::polynomial::MultiPoly;

pub type BinaryForm = MultiPoly<Rational>;

fn binary(terms: &[(i64, u32, u32)]) -> BinaryForm {
    MultiPoly::from_exponents(2, terms.iter().map(|&(c, a, b)| (vec![a, b], rat(c, 1))).collect())
        .expect("two variables")
}

/// z₁z₂(z₁¹⁰ + 11z₁⁵z₂⁵ − z₂¹⁰).
pub fn icosa_f() -> BinaryForm {
    binary(&[(1, 11, 1), (11, 6, 6), (-1, 1, 11)])
}

/// det of the second derivatives of f, divided by 121.
pub fn icosa_hessian(f: &BinaryForm) -> BinaryForm {
    let f1 = f.derivative(0);
    let f2 = f.derivative(1);
    let det = f1
        .derivative(0)
        .try_mul(&f2.derivative(1))
        .and_then(|a| a.try_sub(&f1.derivative(1).try_mul(&f2.derivative(0))?))
        .expect("two variables");
    det.scale(&rat(1, 121))
}

/// −(1/20)·det of the gradients of f and H.
pub fn icosa_jacobian_cov(f: &BinaryForm, h: &BinaryForm) -> BinaryForm {
    let det = f
        .derivative(0)
        .try_mul(&h.derivative(1))
        .and_then(|a| a.try_sub(&f.derivative(1).try_mul(&h.derivative(0))?))
        .expect("two variables");
    det.scale(&rat(-1, 20))
}

/// The closed forms of H and T, for comparison with the covariant formulas.
pub fn expected_hessian() -> BinaryForm {
    binary(&[(-1, 20, 0), (-1, 0, 20), (228, 15, 5), (-228, 5, 15), (-494, 10, 10)])
}

pub fn expected_jacobian_cov() -> BinaryForm {
    binary(&[
        (1, 30, 0),
        (1, 0, 30),
        (522, 25, 5),
        (-522, 5, 25),
        (-10005, 20, 10),
        (-10005, 10, 20),
    ])
}

/// T² + H³ − 1728f⁵.
pub fn icosa_relation(f: &BinaryForm, h: &BinaryForm, t: &BinaryForm) -> BinaryForm {
    let lhs = t
        .try_pow(2)
        .and_then(|a| a.try_add(&h.try_pow(3)?))
        .expect("two variables");
    lhs.try_sub(&f.try_pow(5).expect("two variables").scale(&rat(1728, 1)))
        .expect("two variables")
}
