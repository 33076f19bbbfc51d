use num_traits::{One, Zero};

use super::cyclotomic::CyclotomicNumber;
use super::embed::embed_c64;
use super::ring::{int, Rational, Ring};

/// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
pub fn legendre(a: i64, p: i64) -> i64 {
    let a = a.rem_euclid(p);
    if a == 0 {
        return 0;
    }
    let mut result = 1i64;
    let mut base = a;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

/// Σ (k|p) ζₚᵏ, with its sign chosen so the complex embedding is the positive
/// root (for p ≡ 1 mod 4 the sum is real and squares to p).
pub fn quadratic_gauss_sum(p: u32) -> CyclotomicNumber {
    let raw: Vec<(i64, Rational)> = (1..p as i64).map(|k| (k, int(legendre(k, p as i64)))).collect();
    let g = CyclotomicNumber::make(p, &raw).expect("prime order");
    if embed_c64(&g).re < 0.0 {
        g.negate()
    } else {
        g
    }
}

pub fn sqrt13() -> CyclotomicNumber {
    quadratic_gauss_sum(13)
}

pub fn sqrt5() -> CyclotomicNumber {
    quadratic_gauss_sum(5)
}

/// The four cubic Gauss periods of Q(ζ₁₃): sums of ζ over the cosets of the
/// cubic residues {1, 3, 9}.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodSet {
    pub theta: [CyclotomicNumber; 4],
}

pub const PERIOD_COSETS: [[i64; 3]; 4] = [[1, 3, 9], [2, 6, 5], [4, 12, 10], [8, 11, 7]];

pub fn periods() -> PeriodSet {
    let theta = PERIOD_COSETS.map(|coset| {
        let raw: Vec<(i64, Rational)> = coset.iter().map(|&k| (k, int(1))).collect();
        CyclotomicNumber::make(13, &raw).expect("order 13")
    });
    PeriodSet { theta }
}

impl PeriodSet {
    pub fn get(&self, i: usize) -> &CyclotomicNumber {
        &self.theta[i - 1]
    }

    /// Elementary symmetric functions e1..e4 of the four periods.
    pub fn elementary(&self) -> [CyclotomicNumber; 4] {
        let t = &self.theta;
        let mut e = [
            CyclotomicNumber::zero(),
            CyclotomicNumber::zero(),
            CyclotomicNumber::zero(),
            CyclotomicNumber::zero(),
        ];
        for mask in 1u32..16 {
            let k = mask.count_ones() as usize;
            let mut prod = CyclotomicNumber::one();
            for (i, ti) in t.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    prod = prod.times(ti);
                }
            }
            e[k - 1] = e[k - 1].plus(&prod);
        }
        e
    }
}

/// Evaluates an integer polynomial (constant term first) at a cyclotomic number.
pub fn eval_int_poly(coeffs: &[i64], x: &CyclotomicNumber) -> CyclotomicNumber {
    let mut acc = CyclotomicNumber::zero();
    for c in coeffs.iter().rev() {
        acc = acc.times(x).plus(&CyclotomicNumber::from_int(*c));
    }
    if acc.is_zero() {
        CyclotomicNumber::from(Rational::zero())
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_mod_13() {
        let residues: Vec<i64> = (1..13).filter(|k| legendre(*k, 13) == 1).collect();
        assert_eq!(residues, vec![1, 3, 4, 9, 10, 12]);
    }
}
