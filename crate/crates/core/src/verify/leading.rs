//! Leading terms q^(num/den)·(c + O(q)) of the quadratics, cubics, sextics
//! and the quadratic combinations at the theta point (a₁, …, a₆).

/// (index, numerator, denominator, coefficient); index 13 is D_∞.
pub type Lead = (usize, i64, i64, i64);

pub const A_LEADING: [Lead; 7] = [
    (0, 1, 4, 1),
    (1, 17, 52, 2),
    (2, 29, 52, 2),
    (3, 49, 52, 1),
    (4, 25, 52, -1),
    (5, 9, 52, -1),
    (6, 1, 52, -1),
];

pub const D_LEADING: [Lead; 14] = [
    (0, 15, 8, 1),
    (13, 7, 8, -1),
    (1, 99, 104, 2),
    (2, 3, 104, -1),
    (3, 11, 104, 1),
    (4, 19, 104, -2),
    (5, 27, 104, -1),
    (6, 35, 104, -1),
    (7, 43, 104, 1),
    (8, 51, 104, 3),
    (9, 59, 104, -2),
    (10, 67, 104, 1),
    (11, 75, 104, -4),
    (12, 83, 104, -1),
];

pub const G_LEADING: [Lead; 13] = [
    (0, 7, 4, 1),
    (1, 43, 52, 13),
    (2, 47, 52, -22),
    (3, 51, 52, -21),
    (4, 3, 52, -1),
    (5, 7, 52, 2),
    (6, 11, 52, 2),
    (7, 15, 52, -2),
    (8, 19, 52, -8),
    (9, 23, 52, 6),
    (10, 27, 52, 1),
    (11, 31, 52, -8),
    (12, 35, 52, 17),
];

/// Σ c·A_i·A_j together with its leading exponent and coefficient.
pub struct QuadraticCombination {
    pub products: &'static [(i64, usize, usize)],
    pub num: i64,
    pub den: i64,
    pub coeff: i64,
}

const fn qc(products: &'static [(i64, usize, usize)], num: i64, den: i64, coeff: i64) -> QuadraticCombination {
    QuadraticCombination { products, num, den, coeff }
}

pub const W_COMBINATIONS: [QuadraticCombination; 13] = [
    qc(&[(1, 0, 0), (2, 1, 5), (2, 2, 3), (2, 4, 6)], 1, 2, -1),
    qc(&[(1, 0, 1), (1, 2, 6)], 41, 26, -3),
    qc(&[(1, 0, 4), (1, 2, 5)], 19, 26, -3),
    qc(&[(1, 0, 3), (1, 5, 6)], 5, 26, 1),
    qc(&[(1, 0, 5), (1, 3, 4)], 11, 26, -1),
    qc(&[(1, 0, 6), (1, 1, 3)], 7, 26, -1),
    qc(&[(1, 0, 2), (1, 1, 4)], 47, 26, -1),
    qc(&[(1, 1, 1), (2, 4, 5)], 17, 26, 6),
    qc(&[(1, 3, 3), (2, 1, 2)], 23, 26, 8),
    qc(&[(1, 4, 4), (2, 3, 6)], 25, 26, -1),
    qc(&[(1, 5, 5), (2, 1, 6)], 9, 26, -3),
    qc(&[(1, 2, 2), (2, 3, 5)], 29, 26, 2),
    qc(&[(1, 6, 6), (2, 4, 2)], 1, 26, 1),
];
