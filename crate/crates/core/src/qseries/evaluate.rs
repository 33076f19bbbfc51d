use std::collections::HashMap;

use crate::exact::{CyclotomicNumber, Rational};
use crate::polynomial::{Monomial, MultiPoly};

use super::generators::{eta_series, QSeries, SeriesVector};
use super::series::PuiseuxSeries;
use super::SeriesError;

/// Memoized monomial values at a fixed series vector. Each monomial is the
/// product of a lower one and a single component, so a whole catalog of
/// same-degree forms shares its intermediate products.
pub struct MonomialCache<'a> {
    point: &'a SeriesVector,
    values: HashMap<Monomial, QSeries>,
}

impl<'a> MonomialCache<'a> {
    pub fn new(point: &'a SeriesVector) -> Self {
        let mut values = HashMap::new();
        values.insert(Monomial::ONE, PuiseuxSeries::one(point.denom()));
        MonomialCache { point, values }
    }

    pub fn value(&mut self, m: Monomial) -> QSeries {
        if let Some(v) = self.values.get(&m) {
            return v.clone();
        }
        let i = (0..self.point.len()).find(|&i| m.exponent(i) > 0).expect("nonconstant monomial");
        let lower = self.value(m.lower(i).expect("positive exponent"));
        let v = lower.try_mul(&self.point.components()[i]).expect("common grid");
        self.values.insert(m, v.clone());
        v
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_arity(nvars: usize, v: &SeriesVector) -> Result<(), SeriesError> {
    if nvars != v.len() {
        return Err(SeriesError::ArityMismatch {
            nvars,
            components: v.len(),
        });
    }
    Ok(())
}

/// Rational polynomial at a rational series vector.
pub fn eval_rational(p: &MultiPoly<Rational>, cache: &mut MonomialCache) -> Result<QSeries, SeriesError> {
    check_arity(p.nvars(), cache.point)?;
    let mut acc: Option<QSeries> = None;
    for (m, c) in p.terms() {
        let t = cache.value(*m).scale(c);
        acc = Some(match acc {
            None => t,
            Some(a) => a.try_add(&t)?,
        });
    }
    Ok(acc.unwrap_or_else(|| PuiseuxSeries::zero(cache.point.denom(), cache.point.components()[0].trunc())))
}

/// Cyclotomic polynomial at a rational series vector.
pub fn eval_cyclotomic(
    p: &MultiPoly<CyclotomicNumber>,
    cache: &mut MonomialCache,
) -> Result<PuiseuxSeries<CyclotomicNumber>, SeriesError> {
    if let Some(r) = p.to_rational() {
        return Ok(eval_rational(&r, cache)?.map_coeffs(|c| CyclotomicNumber::from(c.clone())));
    }
    check_arity(p.nvars(), cache.point)?;
    let trunc = cache.point.components()[0].trunc();
    let mut acc = PuiseuxSeries::zero(cache.point.denom(), trunc);
    for (m, c) in p.terms() {
        let t = cache.value(*m).map_coeffs(|r| c.scale(r));
        acc = acc.try_add(&t)?;
    }
    Ok(acc)
}

/// Multiplies by η^k, bringing both onto the common grid.
pub fn times_eta_power<C: crate::exact::Ring>(s: &PuiseuxSeries<C>, k: u32) -> PuiseuxSeries<C> {
    if k == 0 {
        return s.clone();
    }
    let n = s.known_through().saturating_add(1).min(i64::MAX / 64);
    let eta = eta_series(n).pow(k).map_coeffs(|c| C::from_rational(c));
    s.mul_aligned(&eta)
}

/// p at v, then multiplied by η^eta_power. A nonzero eta power needs a
/// homogeneous p, since the scaling is only meaningful degree by degree.
pub fn eval_form_at_series(
    p: &MultiPoly<CyclotomicNumber>,
    v: &SeriesVector,
    eta_power: u32,
) -> Result<PuiseuxSeries<CyclotomicNumber>, SeriesError> {
    if eta_power > 0 && !p.is_homogeneous() {
        return Err(SeriesError::NotHomogeneous);
    }
    let mut cache = MonomialCache::new(v);
    let s = eval_cyclotomic(p, &mut cache)?;
    Ok(times_eta_power(&s, eta_power).reduce_grid())
}

/// Rational counterpart of [`eval_form_at_series`].
pub fn eval_rational_at_series(
    p: &MultiPoly<Rational>,
    v: &SeriesVector,
    eta_power: u32,
) -> Result<QSeries, SeriesError> {
    if eta_power > 0 && !p.is_homogeneous() {
        return Err(SeriesError::NotHomogeneous);
    }
    let mut cache = MonomialCache::new(v);
    let s = eval_rational(p, &mut cache)?;
    Ok(times_eta_power(&s, eta_power).reduce_grid())
}

/// Rational series of a cyclotomic series whose coefficients all turned out
/// rational.
pub fn to_rational_series(s: &PuiseuxSeries<CyclotomicNumber>) -> Option<QSeries> {
    let mut terms = Vec::with_capacity(s.len());
    for (k, c) in s.terms() {
        terms.push((k, c.as_rational()?));
    }
    Some(PuiseuxSeries::from_terms(s.denom(), terms, s.trunc()))
}
