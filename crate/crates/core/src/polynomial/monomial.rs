use std::cmp::Ordering;
use std::fmt;

/// Maximum number of variables a packed monomial can carry.
pub const MAX_VARS: usize = 8;
/// Maximum total degree; keeping every exponent below 256 lets products be a
/// plain integer addition of the packed words.
pub const MAX_DEGREE: u32 = 255;

/// Exponent vector packed one byte per variable, z₁ in the most significant
/// byte, so comparing the packed word is lexicographic comparison.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    packed: u64,
    degree: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        packed: 0,
        degree: 0,
    };

    pub fn new(exps: &[u32]) -> Option<Monomial> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut packed = 0u64;
        let mut degree = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            if e > 255 {
                return None;
            }
            degree += e;
            packed |= (e as u64) << (8 * (MAX_VARS - 1 - i));
        }
        if degree > MAX_DEGREE {
            return None;
        }
        Some(Monomial {
            packed,
            degree: degree as u16,
        })
    }

    /// z_i (zero-based).
    pub fn var(i: usize) -> Monomial {
        let mut e = [0u32; MAX_VARS];
        e[i] = 1;
        Monomial::new(&e[..=i]).expect("single variable")
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    pub fn exponent(&self, i: usize) -> u32 {
        ((self.packed >> (8 * (MAX_VARS - 1 - i))) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    /// Product; `None` when the total degree would exceed `MAX_DEGREE`.
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        let degree = self.degree as u32 + other.degree as u32;
        if degree > MAX_DEGREE {
            return None;
        }
        Some(Monomial {
            packed: self.packed + other.packed,
            degree: degree as u16,
        })
    }

    /// Divides out one power of z_i, if present.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exponent(i) == 0 {
            return None;
        }
        Some(Monomial {
            packed: self.packed - (1u64 << (8 * (MAX_VARS - 1 - i))),
            degree: self.degree - 1,
        })
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn span(&self) -> usize {
        (0..MAX_VARS).rev().find(|&i| self.exponent(i) > 0).map_or(0, |i| i + 1)
    }
}

/// Graded lexicographic: total degree first, then z₁'s exponent, z₂'s, …
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.packed.cmp(&other.packed))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents(self.span().max(1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trip() {
        let m = Monomial::new(&[3, 0, 2, 0, 0, 7]).unwrap();
        assert_eq!(m.exponents(6), vec![3, 0, 2, 0, 0, 7]);
        assert_eq!(m.degree(), 12);
        assert_eq!(m.span(), 6);
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::new(&[1, 0, 0]).unwrap();
        let b = Monomial::new(&[0, 1, 0]).unwrap();
        let c = Monomial::new(&[0, 0, 2]).unwrap();
        assert!(b < a);
        assert!(a < c);
    }

    #[test]
    fn degree_cap() {
        let m = Monomial::new(&[200]).unwrap();
        assert!(m.mul(&m).is_none());
        assert!(Monomial::new(&[256]).is_none());
        assert!(Monomial::new(&[0; 9]).is_none());
    }
}
