use std::collections::HashMap;
use std::fmt;

use crate::exact::{CyclotomicNumber, Rational, Ring};

use super::monomial::{Monomial, MAX_VARS};
use super::PolyError;

/// Sparse polynomial with terms sorted by graded-lex monomial order and no
/// zero coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<C: Ring> {
    nvars: usize,
    terms: Vec<(Monomial, C)>,
}

impl<C: Ring> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        MultiPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::from_terms(nvars, vec![(Monomial::ONE, c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// z_i (zero-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::from_terms(nvars, vec![(Monomial::var(i), C::one())])
    }

    /// Collects arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, C)>) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut map: HashMap<Monomial, C> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert!(m.span() <= nvars);
            match map.get_mut(&m) {
                Some(acc) => acc.plus_assign(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(nvars, map)
    }

    fn from_map(nvars: usize, map: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MultiPoly { nvars, terms }
    }

    /// Terms given as (exponent vector, coefficient).
    pub fn from_exponents(nvars: usize, terms: Vec<(Vec<u32>, C)>) -> Result<Self, PolyError> {
        let mut out = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::VarMismatch(nvars, e.len()));
            }
            out.push((Monomial::new(&e).ok_or(PolyError::DegreeOverflow)?, c));
        }
        Ok(Self::from_terms(nvars, out))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn coeff_of(&self, exps: &[u32]) -> C {
        match Monomial::new(exps) {
            Some(m) => self.coeff(&m),
            None => C::zero(),
        }
    }

    /// Total degree of the leading term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0.degree())
    }

    /// The common degree when all terms share it (zero counts as homogeneous).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.terms.iter().all(|t| t.0.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(PolyError::VarMismatch(self.nvars, other.nvars))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.plus(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: out,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c.negated())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.times(k)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let mut map: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * other.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb).ok_or(PolyError::DegreeOverflow)?;
                let c = ca.times(cb);
                match map.get_mut(&m) {
                    Some(acc) => acc.plus_assign(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.nvars, map))
    }

    pub fn try_pow(&self, k: u32) -> Result<Self, PolyError> {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// ∂/∂z_i.
    pub fn derivative(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(i);
                m.lower(i).map(|lm| (lm, c.times(&C::from_int(e as i64))))
            })
            .collect();
        Self::from_terms(self.nvars, terms)
    }

    /// Exact evaluation at a point of the coefficient ring.
    pub fn eval(&self, point: &[C]) -> Result<C, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::VarMismatch(self.nvars, point.len()));
        }
        let maxdeg = self.degree().unwrap_or(0) as usize;
        let powers: Vec<Vec<C>> = point
            .iter()
            .map(|x| {
                let mut p = vec![C::one()];
                for k in 1..=maxdeg {
                    let next = p[k - 1].times(x);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t = t.times(&pw[e]);
                }
            }
            acc.plus_assign(&t);
        }
        Ok(acc)
    }

    /// Substitutes z ↦ Mz: the i-th variable becomes Σⱼ M[i][j]·zⱼ.
    ///
    /// Powers of each linear form are memoized, so the cost tracks the size
    /// of the output rather than the number of monomial products.
    pub fn compose_linear(&self, m: &[Vec<C>]) -> Result<Self, PolyError> {
        let n = self.nvars;
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(PolyError::DimensionMismatch {
                nvars: n,
                rows: m.len(),
            });
        }
        let maxdeg = self.degree().unwrap_or(0) as usize;
        let linear: Vec<Self> = m
            .iter()
            .map(|row| {
                Self::from_terms(
                    n,
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| (Monomial::var(j), c.clone()))
                        .collect(),
                )
            })
            .collect();
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(n);
        for (i, l) in linear.iter().enumerate() {
            let need = self.terms.iter().map(|(mo, _)| mo.exponent(i)).max().unwrap_or(0) as usize;
            let mut p = vec![Self::one(n)];
            for k in 1..=need.min(maxdeg) {
                let next = p[k - 1].try_mul(l)?;
                p.push(next);
            }
            powers.push(p);
        }
        let mut map: HashMap<Monomial, C> = HashMap::new();
        for (mo, c) in &self.terms {
            let mut t = Self::constant(n, c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = mo.exponent(i) as usize;
                if e > 0 {
                    t = t.try_mul(&pw[e])?;
                }
            }
            for (tm, tc) in t.terms {
                match map.get_mut(&tm) {
                    Some(acc) => acc.plus_assign(&tc),
                    None => {
                        map.insert(tm, tc);
                    }
                }
            }
        }
        Ok(Self::from_map(n, map))
    }
}

impl MultiPoly<Rational> {
    pub fn to_cyclotomic(&self) -> MultiPoly<CyclotomicNumber> {
        self.map_coeffs(|c| CyclotomicNumber::from(c.clone()))
    }
}

impl MultiPoly<CyclotomicNumber> {
    /// `Some` when every coefficient is rational.
    pub fn to_rational(&self) -> Option<MultiPoly<Rational>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, c.as_rational()?));
        }
        Some(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }
}

impl<C: Ring + fmt::Display> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for i in 0..self.nvars {
                match m.exponent(i) {
                    0 => {}
                    1 => write!(f, "·z{}", i + 1)?,
                    e => write!(f, "·z{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiPoly")
            .field("nvars", &self.nvars)
            .field("terms", &self.terms)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn z(i: usize) -> MultiPoly<Rational> {
        MultiPoly::var(6, i)
    }

    #[test]
    fn binomial_cube() {
        let p = z(0).try_add(&z(1)).unwrap().try_pow(3).unwrap();
        let coeffs: Vec<Rational> = (0..=3).map(|k| p.coeff_of(&[3 - k, k, 0, 0, 0, 0])).collect();
        assert_eq!(coeffs, vec![int(1), int(3), int(3), int(1)]);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn mul_by_zero() {
        let p = z(0).try_add(&z(3)).unwrap();
        assert!(p.try_mul(&MultiPoly::zero(6)).unwrap().is_zero());
    }

    #[test]
    fn var_mismatch() {
        let p: MultiPoly<Rational> = MultiPoly::var(2, 0);
        assert!(matches!(p.try_add(&z(0)), Err(PolyError::VarMismatch(2, 6))));
    }

    #[test]
    fn derivative_and_eval() {
        let p = z(0).try_pow(3).unwrap().try_mul(&z(1)).unwrap();
        let d = p.derivative(0);
        assert_eq!(d.coeff_of(&[2, 1, 0, 0, 0, 0]), int(3));
        let v = d.eval(&[int(2), int(5), int(0), int(0), int(0), int(0)]).unwrap();
        assert_eq!(v, int(60));
    }

    #[test]
    fn compose_swaps_variables() {
        let p: MultiPoly<Rational> = MultiPoly::var(2, 0).try_pow(2).unwrap();
        let swap = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        let q = p.compose_linear(&swap).unwrap();
        assert_eq!(q, MultiPoly::var(2, 1).try_pow(2).unwrap());
        assert!(p.compose_linear(&swap[..1].to_vec()).is_err());
    }
}
