//! The basic q-expansions: η, the order-13 and order-5 theta constants,
//! E₄, E₆ and Δ.

use num_bigint::BigInt;

use crate::exact::{int, Rational};

use super::series::PuiseuxSeries;
use super::SeriesError;

pub type QSeries = PuiseuxSeries<Rational>;

/// Exponent offsets c of the six order-13 theta constants; aᵢ starts at
/// q^(c²/104).
pub const THETA13_OFFSETS: [i64; 6] = [11, 7, 5, 3, 9, 1];
/// Only a₄ carries a global minus sign.
pub const THETA13_SIGNS: [i64; 6] = [1, 1, 1, -1, 1, 1];

pub const THETA13_GRID: u32 = 104;
pub const THETA5_GRID: u32 = 40;
pub const ETA_GRID: u32 = 24;

/// Coefficients of Π_{n≤N}(1 − qⁿ) through q^N.
fn euler_product(n: usize) -> Vec<i128> {
    let mut c = vec![0i128; n + 1];
    c[0] = 1;
    for k in 1..=n {
        for e in (k..=n).rev() {
            c[e] -= c[e - k];
        }
    }
    c
}

/// q^(1/24)·Π_{n≤N}(1 − qⁿ), with every coefficient through q^N known.
pub fn eta_series(n: i64) -> QSeries {
    let n = n.max(0);
    let prod = euler_product(n as usize);
    let terms = prod
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(e, c)| (24 * e as i64 + 1, Rational::from_integer(BigInt::from(*c))));
    PuiseuxSeries::from_terms(ETA_GRID, terms, 24 * (n + 1) + 1)
}

/// Δ = η²⁴ on the integer grid.
pub fn delta_series(n: i64) -> QSeries {
    eta_series(n).pow(24).reduce_grid().through(n)
}

fn divisor_power_sum(n: i64, k: u32) -> BigInt {
    let mut s = BigInt::from(0);
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            s += BigInt::from(d).pow(k);
            if d * d != n {
                s += BigInt::from(n / d).pow(k);
            }
        }
        d += 1;
    }
    s
}

/// E₄ = 1 + 240Σσ₃(n)qⁿ or E₆ = 1 − 504Σσ₅(n)qⁿ.
pub fn eisenstein_series(weight: u32, n: i64) -> Result<QSeries, SeriesError> {
    let (scale, k) = match weight {
        4 => (240, 3),
        6 => (-504, 5),
        w => return Err(SeriesError::UnsupportedWeight(w)),
    };
    let n = n.max(0);
    let terms = std::iter::once((0, int(1)))
        .chain((1..=n).map(|m| (m, Rational::from_integer(divisor_power_sum(m, k) * scale))));
    Ok(PuiseuxSeries::from_terms(1, terms, n + 1))
}

/// s·q^(c²/M')·Σ(−1)ⁿ q^((Ln² + cn)/2) on grid `grid`, where the prefactor
/// exponent is `lead` grid steps and each summand sits `grid·(Ln²+cn)/2`
/// further out.
fn theta_sum(grid: u32, level: i64, c: i64, lead: i64, sign: i64, n: i64) -> QSeries {
    let g = grid as i64;
    let trunc = g * (n + 1);
    let mut terms = Vec::new();
    let mut m = 0i64;
    loop {
        let mut any = false;
        for k in if m == 0 { vec![0] } else { vec![m, -m] } {
            let idx = lead + g * (level * k * k + c * k) / 2;
            if idx < trunc {
                any = true;
                let s = if k.rem_euclid(2) == 0 { sign } else { -sign };
                terms.push((idx, int(s)));
            }
        }
        if !any && m > 0 {
            break;
        }
        m += 1;
    }
    PuiseuxSeries::from_terms(grid, terms, trunc)
}

/// aᵢ for i in 1..=6, known through q^N.
pub fn theta13_series(i: usize, n: i64) -> Result<QSeries, SeriesError> {
    if !(1..=6).contains(&i) {
        return Err(SeriesError::BadComponent(i));
    }
    let c = THETA13_OFFSETS[i - 1];
    Ok(theta_sum(THETA13_GRID, 13, c, c * c, THETA13_SIGNS[i - 1], n.max(0)))
}

/// The order-5 pair: a = q^(9/40)Σ(−1)ⁿq^((5n²+3n)/2) and
/// b = q^(1/40)Σ(−1)ⁿq^((5n²+n)/2).
pub fn theta5_series(which: char, n: i64) -> Result<QSeries, SeriesError> {
    let c = match which {
        'a' => 3,
        'b' => 1,
        _ => return Err(SeriesError::BadComponent(which as usize)),
    };
    Ok(theta_sum(THETA5_GRID, 5, c, c * c, 1, n.max(0)))
}

/// Equal-length tuple of series on one grid with one truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesVector {
    components: Vec<QSeries>,
}

impl SeriesVector {
    pub fn new(components: Vec<QSeries>) -> Result<Self, SeriesError> {
        let first = components.first().ok_or(SeriesError::EmptyVector)?;
        let (d, t) = (first.denom(), first.trunc());
        if let Some(bad) = components.iter().find(|c| c.denom() != d) {
            return Err(SeriesError::GridMismatch(d, bad.denom()));
        }
        if components.iter().any(|c| c.trunc() != t) {
            return Err(SeriesError::TruncationMismatch);
        }
        Ok(SeriesVector { components })
    }

    pub fn components(&self) -> &[QSeries] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn denom(&self) -> u32 {
        self.components[0].denom()
    }
}

/// (a₁, …, a₆) known through q^N.
pub fn theta13_vector(n: i64) -> SeriesVector {
    SeriesVector::new((1..=6).map(|i| theta13_series(i, n).expect("valid index")).collect())
        .expect("common grid")
}

/// (a, b) known through q^N.
pub fn theta5_vector(n: i64) -> SeriesVector {
    SeriesVector::new(vec![
        theta5_series('a', n).expect("a"),
        theta5_series('b', n).expect("b"),
    ])
    .expect("common grid")
}
