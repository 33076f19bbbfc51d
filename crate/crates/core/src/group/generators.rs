use num_traits::Zero;

use crate::exact::{int, sqrt13, CyclotomicNumber, Rational, Ring};

use super::matrix::CycloMatrix;

/// Exponent pairs (a, b) of the entries ζᵃ − ζᵇ of the bracketed matrix in S.
pub const S_PATTERN: [[(i64, i64); 6]; 6] = [
    [(12, 1), (10, 3), (4, 9), (5, 8), (2, 11), (6, 7)],
    [(10, 3), (4, 9), (12, 1), (2, 11), (6, 7), (5, 8)],
    [(4, 9), (12, 1), (10, 3), (6, 7), (5, 8), (2, 11)],
    [(5, 8), (2, 11), (6, 7), (1, 12), (3, 10), (9, 4)],
    [(2, 11), (6, 7), (5, 8), (3, 10), (9, 4), (1, 12)],
    [(6, 7), (5, 8), (2, 11), (9, 4), (1, 12), (3, 10)],
];

/// Exponents of the diagonal of T.
pub const T_EXPONENTS: [i64; 6] = [7, 11, 8, 6, 2, 5];

/// The order-6 element of the index-14 subgroup, as a signed permutation:
/// row i has `H_SIGNED_PERM[i].1` in column `H_SIGNED_PERM[i].0`.
pub const H_SIGNED_PERM: [(usize, i64); 6] = [(5, 1), (3, 1), (4, 1), (2, -1), (0, -1), (1, -1)];

/// The word for H in P = S·T⁻¹·S and Q = S·T³, as (letter, power) pairs.
pub const H_WORD: [(char, u32); 9] = [
    ('Q', 5),
    ('P', 2),
    ('P', 2),
    ('Q', 6),
    ('P', 8),
    ('Q', 5),
    ('P', 2),
    ('P', 3),
    ('Q', 1),
];

fn zeta(k: i64) -> CyclotomicNumber {
    CyclotomicNumber::zeta(13, k).expect("order 13")
}

/// Builds S from an exponent pattern; exposed so tests can perturb it.
pub fn s_from_pattern(pattern: &[[(i64, i64); 6]; 6]) -> CycloMatrix {
    // −1/√13 = −√13/13
    let factor = sqrt13().scale(&Rational::new((-1).into(), 13.into()));
    let rows = pattern
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(a, b)| {
                    let raw = [(a, int(1)), (b, int(-1))];
                    CyclotomicNumber::make(13, &raw).unwrap().times(&factor)
                })
                .collect()
        })
        .collect();
    CycloMatrix::from_rows(rows).expect("square")
}

pub fn gen_s() -> CycloMatrix {
    s_from_pattern(&S_PATTERN)
}

pub fn gen_t() -> CycloMatrix {
    CycloMatrix::diagonal(T_EXPONENTS.iter().map(|&k| zeta(k)).collect())
}

pub fn t_inverse(t: &CycloMatrix) -> CycloMatrix {
    t.inverse().expect("T is invertible")
}

pub fn gen_p(s: &CycloMatrix, t: &CycloMatrix) -> CycloMatrix {
    s.mul(&t_inverse(t)).mul(s)
}

pub fn gen_q(s: &CycloMatrix, t: &CycloMatrix) -> CycloMatrix {
    s.mul(&t.pow(3))
}

/// Evaluates the H word for given S and T.
pub fn h_word(s: &CycloMatrix, t: &CycloMatrix) -> CycloMatrix {
    let p = gen_p(s, t);
    let q = gen_q(s, t);
    H_WORD.iter().fold(CycloMatrix::identity(s.size()), |acc, &(l, e)| {
        let base = if l == 'P' { &p } else { &q };
        acc.mul(&base.pow(e))
    })
}

pub fn build_h() -> CycloMatrix {
    h_word(&gen_s(), &gen_t())
}

/// The explicit signed permutation matrix H.
pub fn h_display() -> CycloMatrix {
    let rows = H_SIGNED_PERM
        .iter()
        .map(|&(col, sign)| {
            (0..6)
                .map(|j| {
                    if j == col {
                        CyclotomicNumber::from_int(sign)
                    } else {
                        CyclotomicNumber::zero()
                    }
                })
                .collect()
        })
        .collect();
    CycloMatrix::from_rows(rows).expect("square")
}

/// S·T^ν.
pub fn s_t_power(s: &CycloMatrix, t: &CycloMatrix, nu: u32) -> CycloMatrix {
    s.mul(&t.pow(nu))
}

pub fn minus_identity(n: usize) -> CycloMatrix {
    CycloMatrix::identity(n).scale(&CyclotomicNumber::from_int(-1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_entry() {
        assert_eq!(*gen_t().get(3, 3), zeta(6));
    }

    #[test]
    fn s_first_entry() {
        let expect = zeta(12)
            .minus(&zeta(1))
            .times(&sqrt13().try_inv().unwrap())
            .negate();
        assert_eq!(*gen_s().get(0, 0), expect);
    }
}
