use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{embed_c64, CyclotomicNumber, Field, Ring};
use num_complex::Complex64;

use super::GroupError;

/// Square matrix over a cyclotomic field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloMatrix {
    n: usize,
    entries: Vec<CyclotomicNumber>,
}

impl CycloMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![CyclotomicNumber::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = CyclotomicNumber::one();
        }
        CycloMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<CyclotomicNumber>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotSquare);
        }
        Ok(CycloMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(d: Vec<CyclotomicNumber>) -> Self {
        let n = d.len();
        let mut m = Self::identity(n);
        for (i, x) in d.into_iter().enumerate() {
            m.entries[i * n + i] = x;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[CyclotomicNumber] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<CyclotomicNumber>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, GroupError> {
        if self.n != other.n {
            return Err(GroupError::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CyclotomicNumber::zero();
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    let b = &other.entries[k * n + j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.try_add(&a.try_mul(b)?)?;
                }
                entries.push(acc);
            }
        }
        Ok(CycloMatrix { n, entries })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        CycloMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x.times(c)).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        CycloMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x.negate()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                entries.push(self.entries[i * n + j].clone());
            }
        }
        CycloMatrix { n, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// λ with self = λ·other, if one exists.
    pub fn projective_scalar(&self, other: &Self) -> Option<CyclotomicNumber> {
        if self.n != other.n {
            return None;
        }
        let k = other.entries.iter().position(|x| !x.is_zero())?;
        let lambda = self.entries[k].try_mul(&other.entries[k].try_inv().ok()?).ok()?;
        (other.scale(&lambda) == *self).then_some(lambda)
    }

    /// Representative of ±self: the first nonzero basis coefficient of the
    /// first nonzero entry is made positive.
    pub fn sign_normalized(&self) -> Self {
        let lead = self
            .entries
            .iter()
            .find(|x| !x.is_zero())
            .and_then(|x| x.coeffs().into_iter().find(|c| !c.is_zero()));
        match lead {
            Some(c) if c.is_negative() => self.negate(),
            _ => self.clone(),
        }
    }

    /// Gauss–Jordan inverse over the field.
    pub fn inverse(&self) -> Result<Self, GroupError> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = Self::identity(n).rows();
        for col in 0..n {
            let pr = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(GroupError::Singular)?;
            a.swap(col, pr);
            inv.swap(col, pr);
            let p = a[col][col].inv().ok_or(GroupError::Singular)?;
            for c in 0..n {
                a[col][c] = a[col][c].times(&p);
                inv[col][c] = inv[col][c].times(&p);
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..n {
                        let t = a[col][c].times(&f);
                        a[r][c] = a[r][c].minus(&t);
                        let t = inv[col][c].times(&f);
                        inv[r][c] = inv[r][c].minus(&t);
                    }
                }
            }
        }
        Self::from_rows(inv)
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> CyclotomicNumber {
        let n = self.n;
        let mut a = self.rows();
        let mut det = CyclotomicNumber::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return CyclotomicNumber::zero();
            };
            if pr != col {
                a.swap(col, pr);
                det = det.negate();
            }
            det = det.times(&a[col][col]);
            let p = a[col][col].inv().expect("nonzero pivot");
            for r in col + 1..n {
                if !a[r][col].is_zero() {
                    let f = a[r][col].times(&p);
                    for c in col..n {
                        let t = a[col][c].times(&f);
                        a[r][c] = a[r][c].minus(&t);
                    }
                }
            }
        }
        det
    }

    /// Entrywise complex embedding.
    pub fn embed(&self) -> Vec<Vec<Complex64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(embed_c64).collect())
            .collect()
    }

    /// One line per row, entries in the cyclotomic text form.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|e| e.to_text())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::CyclotomicNumber as C;

    #[test]
    fn inverse_and_det_of_diagonal() {
        let d = CycloMatrix::diagonal(vec![C::zeta(13, 2).unwrap(), C::from_int_in(13, 3).unwrap()]);
        let inv = d.inverse().unwrap();
        assert!(d.mul(&inv).is_identity());
        assert_eq!(d.det(), C::zeta(13, 2).unwrap().scale(&crate::exact::int(3)));
    }

    #[test]
    fn projective_scalar_found() {
        let d = CycloMatrix::diagonal(vec![C::zeta(13, 1).unwrap(), C::zeta(13, 1).unwrap()]);
        let lam = d.projective_scalar(&CycloMatrix::identity(2)).unwrap();
        assert_eq!(lam, C::zeta(13, 1).unwrap());
        let e = CycloMatrix::diagonal(vec![C::zeta(13, 1).unwrap(), C::zeta(13, 2).unwrap()]);
        assert!(e.projective_scalar(&CycloMatrix::identity(2)).is_none());
    }

    #[test]
    fn sign_normalization_identifies_negatives() {
        let m = CycloMatrix::diagonal(vec![C::zeta(13, 3).unwrap(), C::zeta(13, 5).unwrap()]);
        assert_eq!(m.sign_normalized(), m.negate().sign_normalized());
    }
}
