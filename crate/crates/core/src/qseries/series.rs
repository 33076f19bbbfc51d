use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::exact::{Rational, Ring};

use super::SeriesError;

/// Σ c_k q^(k/M) with every coefficient at k < `trunc` known; `trunc` of
/// `i64::MAX` marks an exact (finite) series.
#[derive(Clone, PartialEq)]
pub struct PuiseuxSeries<C: Ring> {
    denom: u32,
    coeffs: BTreeMap<i64, C>,
    trunc: i64,
}

pub const EXACT: i64 = i64::MAX;

impl<C: Ring> PuiseuxSeries<C> {
    pub fn zero(denom: u32, trunc: i64) -> Self {
        assert!(denom > 0, "grid denominator must be positive");
        PuiseuxSeries {
            denom,
            coeffs: BTreeMap::new(),
            trunc,
        }
    }

    pub fn one(denom: u32) -> Self {
        Self::monomial(denom, 0, C::one(), EXACT)
    }

    /// c·q^(k/M).
    pub fn monomial(denom: u32, k: i64, c: C, trunc: i64) -> Self {
        Self::from_terms(denom, [(k, c)], trunc)
    }

    pub fn from_terms(denom: u32, terms: impl IntoIterator<Item = (i64, C)>, trunc: i64) -> Self {
        let mut s = Self::zero(denom, trunc);
        for (k, c) in terms {
            s.add_term(k, &c);
        }
        s
    }

    fn add_term(&mut self, k: i64, c: &C) {
        if k >= self.trunc || c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&k) {
            Some(acc) => {
                acc.plus_assign(c);
                if acc.is_zero() {
                    self.coeffs.remove(&k);
                }
            }
            None => {
                self.coeffs.insert(k, c.clone());
            }
        }
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.trunc == EXACT
    }

    pub fn coeff(&self, k: i64) -> C {
        self.coeffs.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Grid index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Leading exponent (as a fraction) and coefficient.
    pub fn leading(&self) -> Option<(Rational, C)> {
        self.coeffs
            .iter()
            .next()
            .map(|(k, c)| (Rational::new((*k).into(), self.denom.into()), c.clone()))
    }

    /// Largest integer N such that every coefficient up to q^N is known.
    pub fn known_through(&self) -> i64 {
        if self.is_exact() {
            return i64::MAX;
        }
        Integer::div_floor(&(self.trunc - 1), &(self.denom as i64))
    }

    /// Drops everything at or beyond grid index `trunc`.
    pub fn truncated(&self, trunc: i64) -> Self {
        let t = trunc.min(self.trunc);
        PuiseuxSeries {
            denom: self.denom,
            coeffs: self.coeffs.range(..t).map(|(k, c)| (*k, c.clone())).collect(),
            trunc: t,
        }
    }

    /// Keeps only exponents up to and including q^n (integer n).
    pub fn through(&self, n: i64) -> Self {
        self.truncated(n.saturating_mul(self.denom as i64).saturating_add(1))
    }

    /// The same series on the grid 1/(M·r).
    pub fn regrid(&self, r: u32) -> Self {
        assert!(r > 0);
        let r64 = r as i64;
        PuiseuxSeries {
            denom: self.denom * r,
            coeffs: self.coeffs.iter().map(|(k, c)| (k * r64, c.clone())).collect(),
            trunc: if self.is_exact() { EXACT } else { self.trunc.saturating_mul(r64) },
        }
    }

    /// Coarsest grid carrying all stored exponents and the truncation.
    pub fn reduce_grid(&self) -> Self {
        let mut g = self.denom as i64;
        for k in self.coeffs.keys() {
            g = g.gcd(k);
        }
        if g <= 1 {
            return self.clone();
        }
        PuiseuxSeries {
            denom: (self.denom as i64 / g) as u32,
            coeffs: self.coeffs.iter().map(|(k, c)| (k / g, c.clone())).collect(),
            // known for k < trunc becomes known for k' < ceil(trunc / g)
            trunc: if self.is_exact() { EXACT } else { Integer::div_ceil(&self.trunc, &g) },
        }
    }

    fn check_grid(&self, other: &Self) -> Result<(), SeriesError> {
        if self.denom != other.denom {
            return Err(SeriesError::GridMismatch(self.denom, other.denom));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_grid(other)?;
        let mut out = self.truncated(other.trunc);
        for (k, c) in other.coeffs.range(..out.trunc) {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.try_add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.denom, self.trunc);
        for (e, c) in &self.coeffs {
            out.add_term(*e, &c.times(k));
        }
        out
    }

    /// Product, known below min(trunc_a + v_b, trunc_b + v_a).
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_grid(other)?;
        let va = self.valuation().unwrap_or(self.trunc);
        let vb = other.valuation().unwrap_or(other.trunc);
        let trunc = self.trunc.saturating_add(vb).min(other.trunc.saturating_add(va));
        let mut acc: BTreeMap<i64, C> = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in other.coeffs.range(..trunc.saturating_sub(*ka)) {
                let k = ka + kb;
                let p = ca.times(cb);
                match acc.get_mut(&k) {
                    Some(x) => x.plus_assign(&p),
                    None => {
                        acc.insert(k, p);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(PuiseuxSeries {
            denom: self.denom,
            coeffs: acc,
            trunc,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.denom);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base).expect("same grid");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same grid");
            }
        }
        result
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> PuiseuxSeries<D> {
        let mut out = PuiseuxSeries::zero(self.denom, self.trunc);
        for (k, c) in &self.coeffs {
            out.add_term(*k, &f(c));
        }
        out
    }

    /// Brings both series to the grid lcm(M₁, M₂).
    pub fn align(&self, other: &Self) -> (Self, Self) {
        let l = (self.denom as u64).lcm(&(other.denom as u64)) as u32;
        (self.regrid(l / self.denom), other.regrid(l / other.denom))
    }

    pub fn mul_aligned(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        a.try_mul(&b).expect("aligned")
    }

    pub fn add_aligned(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        a.try_add(&b).expect("aligned")
    }

    pub fn sub_aligned(&self, other: &Self) -> Self {
        let (a, b) = self.align(other);
        a.try_sub(&b).expect("aligned")
    }

    /// Whether every coefficient up to q^n is known and zero.
    pub fn vanishes_through(&self, n: i64) -> bool {
        self.known_through() >= n && self.through(n).is_empty()
    }

    /// The part of the series whose exponents are ≡ r/M modulo 1.
    pub fn class_part(&self, r: i64) -> Self {
        let m = self.denom as i64;
        let mut out = Self::zero(self.denom, self.trunc);
        for (k, c) in &self.coeffs {
            if (k - r).rem_euclid(m) == 0 {
                out.add_term(*k, c);
            }
        }
        out
    }

    /// The common residue of all exponents modulo the grid, if there is one.
    pub fn single_class(&self) -> Option<i64> {
        let m = self.denom as i64;
        let mut it = self.coeffs.keys().map(|k| k.rem_euclid(m));
        let first = it.next()?;
        it.all(|r| r == first).then_some(first)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for PuiseuxSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) q^({k}/{})", self.denom)?;
        }
        if first {
            write!(f, "0")?;
        }
        if !self.is_exact() {
            write!(f, " + O(q^({}/{}))", self.trunc, self.denom)?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for PuiseuxSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PuiseuxSeries")
            .field("denom", &self.denom)
            .field("trunc", &self.trunc)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

/// Rational series with every coefficient an integer, as a sanity check on
/// products of integral inputs.
pub fn is_integral(s: &PuiseuxSeries<Rational>) -> bool {
    s.terms().all(|(_, c)| c.is_integer())
}
