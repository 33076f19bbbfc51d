//! Coefficient tables for the quadratic, cubic and sextic families.
//!
//! Kept as plain data so tests can corrupt single entries and watch the
//! downstream checks fail.

/// One monomial term: coefficient and exponents of z1..z6.
pub type Term = (i64, [u32; 6]);

/// One product term of a sextic: coefficient and two cubic indices, where
/// index 13 stands for the form at infinity.
pub type CubicProduct = (i64, usize, usize);

pub const INF: usize = 13;

const A_TABLE: [&[Term]; 7] = [
    &[(1, [1, 0, 0, 1, 0, 0]), (1, [0, 1, 0, 0, 1, 0]), (1, [0, 0, 1, 0, 0, 1])],
    &[(1, [2, 0, 0, 0, 0, 0]), (-2, [0, 0, 1, 1, 0, 0])],
    &[(-1, [0, 0, 0, 0, 2, 0]), (-2, [0, 1, 0, 1, 0, 0])],
    &[(1, [0, 2, 0, 0, 0, 0]), (-2, [1, 0, 0, 0, 1, 0])],
    &[(1, [0, 0, 2, 0, 0, 0]), (-2, [0, 1, 0, 0, 0, 1])],
    &[(-1, [0, 0, 0, 2, 0, 0]), (-2, [1, 0, 0, 0, 0, 1])],
    &[(-1, [0, 0, 0, 0, 0, 2]), (-2, [0, 0, 1, 0, 1, 0])],
];

// D0..D12, then the form at infinity
const D_TABLE: [&[Term]; 14] = [
    &[(1, [1, 1, 1, 0, 0, 0])],
    &[(2, [0, 1, 2, 0, 0, 0]), (1, [0, 2, 0, 0, 0, 1]), (-1, [0, 0, 0, 2, 1, 0]), (1, [1, 0, 0, 0, 1, 1])],
    &[(-1, [0, 0, 0, 0, 0, 3]), (1, [0, 2, 0, 1, 0, 0]), (-2, [0, 1, 0, 0, 2, 0]), (1, [1, 0, 0, 1, 1, 0]), (3, [0, 0, 1, 0, 1, 1])],
    &[(2, [1, 2, 0, 0, 0, 0]), (1, [2, 0, 0, 0, 1, 0]), (-1, [0, 0, 0, 1, 0, 2]), (1, [0, 0, 1, 1, 1, 0])],
    &[(-1, [0, 2, 1, 0, 0, 0]), (1, [1, 0, 0, 0, 0, 2]), (-2, [0, 0, 0, 2, 0, 1]), (-1, [1, 0, 1, 0, 1, 0])],
    &[(-1, [0, 0, 0, 3, 0, 0]), (1, [0, 0, 2, 0, 1, 0]), (-2, [0, 0, 1, 0, 0, 2]), (1, [0, 1, 0, 0, 1, 1]), (3, [1, 0, 0, 1, 0, 1])],
    &[(-1, [0, 0, 0, 0, 3, 0]), (1, [2, 0, 0, 0, 0, 1]), (-2, [1, 0, 0, 2, 0, 0]), (1, [0, 0, 1, 1, 0, 1]), (3, [0, 1, 0, 1, 1, 0])],
    &[(-1, [0, 3, 0, 0, 0, 0]), (1, [0, 0, 1, 2, 0, 0]), (-1, [1, 0, 1, 0, 0, 1]), (-3, [1, 1, 0, 0, 1, 0]), (2, [2, 0, 0, 1, 0, 0])],
    &[(-1, [3, 0, 0, 0, 0, 0]), (1, [0, 1, 0, 0, 0, 2]), (-1, [0, 1, 1, 0, 1, 0]), (-3, [1, 0, 1, 1, 0, 0]), (2, [0, 0, 2, 0, 0, 1])],
    &[(2, [2, 0, 1, 0, 0, 0]), (1, [0, 0, 2, 1, 0, 0]), (-1, [0, 0, 0, 0, 2, 1]), (1, [0, 1, 0, 1, 0, 1])],
    &[(-1, [1, 0, 2, 0, 0, 0]), (1, [0, 1, 0, 2, 0, 0]), (-2, [0, 0, 0, 1, 2, 0]), (-1, [1, 1, 0, 0, 0, 1])],
    &[(-1, [0, 0, 3, 0, 0, 0]), (1, [1, 0, 0, 0, 2, 0]), (-1, [1, 1, 0, 1, 0, 0]), (-3, [0, 1, 1, 0, 0, 1]), (2, [0, 2, 0, 0, 1, 0])],
    &[(-1, [2, 1, 0, 0, 0, 0]), (1, [0, 0, 1, 0, 2, 0]), (-2, [0, 0, 0, 0, 1, 2]), (-1, [0, 1, 1, 1, 0, 0])],
    &[(1, [0, 0, 0, 1, 1, 1])],
];

const G_TABLE: [&[CubicProduct]; 13] = [
    &[(1, 0, 0), (1, 13, 13)],
    &[(-1, 7, 7), (2, 0, 1), (10, 13, 1), (2, 2, 12), (-2, 3, 11), (-4, 4, 10), (-2, 9, 5)],
    &[(-2, 1, 1), (-4, 0, 2), (6, 13, 2), (-2, 4, 11), (2, 5, 10), (-2, 6, 9), (-2, 7, 8)],
    &[(-1, 8, 8), (2, 0, 3), (10, 13, 3), (2, 6, 10), (-2, 9, 7), (-4, 12, 4), (-2, 1, 2)],
    &[(-1, 2, 2), (10, 0, 4), (-2, 13, 4), (2, 5, 12), (-2, 9, 8), (-4, 1, 3), (-2, 10, 7)],
    &[(-2, 9, 9), (-4, 0, 5), (6, 13, 5), (-2, 10, 8), (2, 6, 12), (-2, 2, 3), (-2, 11, 7)],
    &[(-2, 3, 3), (-4, 0, 6), (6, 13, 6), (-2, 12, 7), (2, 2, 4), (-2, 5, 1), (-2, 8, 11)],
    &[(-2, 10, 10), (6, 0, 7), (4, 13, 7), (-2, 1, 6), (-2, 2, 5), (-2, 8, 12), (-2, 9, 11)],
    &[(-2, 4, 4), (6, 0, 8), (4, 13, 8), (-2, 3, 5), (-2, 6, 2), (-2, 11, 10), (-2, 1, 7)],
    &[(-1, 11, 11), (2, 0, 9), (10, 13, 9), (2, 5, 4), (-2, 1, 8), (-4, 10, 12), (-2, 3, 6)],
    &[(-1, 5, 5), (10, 0, 10), (-2, 13, 10), (2, 6, 4), (-2, 3, 7), (-4, 9, 1), (-2, 12, 11)],
    &[(-2, 12, 12), (6, 0, 11), (4, 13, 11), (-2, 9, 2), (-2, 5, 6), (-2, 7, 4), (-2, 3, 8)],
    &[(-1, 6, 6), (10, 0, 12), (-2, 13, 12), (2, 2, 10), (-2, 1, 11), (-4, 3, 9), (-2, 4, 8)],
];

/// Exponents e_j with φ_ν = Σ_j ζ^(e_j ν) A_j.
pub const PHI_TWIST: [i64; 7] = [0, 1, 4, 9, 3, 12, 10];

/// Coefficient pattern of the cubic law at D0, for D1..D12: entry k means r_k.
pub const D0_LAW_PATTERN: [usize; 12] = [1, 2, 1, 3, 2, 2, 4, 4, 1, 3, 4, 3];

/// Signed pattern of the cubic law at infinity, for D1..D12.
pub const DINF_LAW_PATTERN: [(i64, usize); 12] = [
    (-1, 3),
    (-1, 4),
    (-1, 3),
    (1, 1),
    (-1, 4),
    (-1, 4),
    (1, 2),
    (1, 2),
    (-1, 3),
    (1, 1),
    (1, 2),
    (1, 1),
];

/// Mutable copy of the three tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTables {
    pub a: Vec<Vec<Term>>,
    pub d: Vec<Vec<Term>>,
    pub g: Vec<Vec<CubicProduct>>,
}

impl FormTables {
    pub fn standard() -> Self {
        FormTables {
            a: A_TABLE.iter().map(|t| t.to_vec()).collect(),
            d: D_TABLE.iter().map(|t| t.to_vec()).collect(),
            g: G_TABLE.iter().map(|t| t.to_vec()).collect(),
        }
    }

    /// Negates one coefficient of a cubic; `form` 13 is the form at infinity.
    pub fn flip_d_sign(mut self, form: usize, term: usize) -> Self {
        self.d[form][term].0 = -self.d[form][term].0;
        self
    }

    pub fn flip_a_sign(mut self, form: usize, term: usize) -> Self {
        self.a[form][term].0 = -self.a[form][term].0;
        self
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::standard()
    }
}

impl Default for FormTables {
    fn default() -> Self {
        Self::standard()
    }
}
