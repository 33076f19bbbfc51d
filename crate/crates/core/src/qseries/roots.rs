//! Power sums of the fourteen roots at the theta point.
//!
//! Every finite root is a ζ-twist Σⱼ ζ^(gⱼν) Sⱼ of rational series Sⱼ, so
//! Σ_ν (Σⱼ ζ^(gⱼν) Sⱼ)^m = 13·(grade-0 part of (Σⱼ Sⱼ)^m), where grades
//! add under multiplication. When the exponent class of each Sⱼ modulo 1
//! is an affine function of its grade, the grade-0 part is read off from
//! exponents alone; otherwise the grades are carried explicitly.

use num_integer::Integer;

use crate::exact::{int, Rational};
use crate::forms::{FormSet, InvariantForm, RootFamily, PHI_TWIST};

use super::evaluate::{eval_rational, times_eta_power, MonomialCache};
use super::generators::{eisenstein_series, eta_series, theta13_vector, QSeries, SeriesVector};
use super::series::PuiseuxSeries;
use super::SeriesError;

/// One ζ-graded summand of a root: grade g contributes ζ^(gν).
#[derive(Clone, Debug)]
pub struct GradedPart {
    pub grade: i64,
    pub series: QSeries,
}

/// How the grade-0 part was extracted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extraction {
    ExponentClass,
    GradedProduct,
}

/// The affine map grade ↦ exponent class, if there is one.
fn class_map(parts: &[GradedPart]) -> Option<(i64, i64)> {
    let d = parts.first()?.series.denom() as i64;
    if d % 13 != 0 {
        return None;
    }
    let u = d / 13;
    let classes: Vec<(i64, i64)> = parts
        .iter()
        .filter(|p| !p.series.is_empty())
        .map(|p| Some((p.grade.rem_euclid(13), p.series.single_class()?)))
        .collect::<Option<_>>()?;
    let base = classes.iter().find(|(g, _)| *g == 0)?.1;
    let mut slope: Option<i64> = None;
    for &(g, r) in &classes {
        let diff = (r - base).rem_euclid(d);
        if diff % u != 0 {
            return None;
        }
        if g == 0 {
            if diff != 0 {
                return None;
            }
            continue;
        }
        // diff/u ≡ s·g (mod 13)
        let ginv = (1..13).find(|x| (x * g) % 13 == 1)?;
        let s = ((diff / u) * ginv).rem_euclid(13);
        if s == 0 || slope.is_some_and(|t| t != s) {
            return None;
        }
        slope = Some(s);
    }
    Some((base, slope.unwrap_or(1)))
}

/// Σ_ν (Σⱼ ζ^(gⱼν) Sⱼ)^m over ν = 0..12.
pub fn twisted_power_sum(parts: &[GradedPart], m: u32) -> Result<(QSeries, Extraction), SeriesError> {
    let first = parts.first().ok_or(SeriesError::EmptyVector)?;
    let d = first.series.denom();
    if let Some((base, _)) = class_map(parts) {
        let mut total = PuiseuxSeries::zero(d, i64::MAX);
        for p in parts {
            total = total.try_add(&p.series)?;
        }
        let r = (base * m as i64).rem_euclid(d as i64);
        let s = total.pow(m).class_part(r).scale(&int(13));
        return Ok((s, Extraction::ExponentClass));
    }
    Ok((graded_power_sum(parts, m)?, Extraction::GradedProduct))
}

/// Slow path: multiply 13-vectors of series indexed by grade.
pub fn graded_power_sum(parts: &[GradedPart], m: u32) -> Result<QSeries, SeriesError> {
    let first = parts.first().ok_or(SeriesError::EmptyVector)?;
    let d = first.series.denom();
    let zero = PuiseuxSeries::zero(d, i64::MAX);
    let mut base: Vec<QSeries> = vec![zero.clone(); 13];
    for p in parts {
        let g = p.grade.rem_euclid(13) as usize;
        base[g] = base[g].try_add(&p.series)?;
    }
    let mut acc: Vec<QSeries> = vec![zero.clone(); 13];
    acc[0] = PuiseuxSeries::one(d);
    for _ in 0..m {
        let mut next = vec![zero.clone(); 13];
        for (i, x) in acc.iter().enumerate() {
            if x.is_empty() && x.is_exact() {
                continue;
            }
            for (j, y) in base.iter().enumerate() {
                if y.is_empty() && y.is_exact() {
                    continue;
                }
                let k = (i + j) % 13;
                next[k] = next[k].try_add(&x.try_mul(y)?)?;
            }
        }
        acc = next;
    }
    Ok(acc[0].scale(&int(13)))
}

/// Graded parts of the finite roots at a point, plus the root at infinity.
pub fn root_parts(
    fs: &FormSet,
    family: RootFamily,
    cache: &mut MonomialCache,
) -> Result<(Vec<GradedPart>, QSeries), SeriesError> {
    let rational = |f: &crate::forms::Form| f.to_rational().ok_or(SeriesError::NotRational);
    match family {
        RootFamily::Delta => {
            let mut parts = Vec::with_capacity(13);
            let g0 = eval_rational(&rational(fs.g.get(0).expect("G0"))?, cache)?;
            parts.push(GradedPart {
                grade: 0,
                series: g0.scale(&int(-13)),
            });
            for j in 1..13 {
                let gj = eval_rational(&rational(fs.g.get(j).expect("sextic"))?, cache)?;
                parts.push(GradedPart {
                    grade: j as i64,
                    series: gj,
                });
            }
            Ok((parts, g0.scale(&int(169))))
        }
        RootFamily::W => {
            let mut parts = Vec::with_capacity(7);
            for (j, &e) in PHI_TWIST.iter().enumerate() {
                let aj = eval_rational(&rational(fs.a.get(j).expect("quadratic"))?, cache)?;
                parts.push(GradedPart { grade: e, series: aj });
            }
            let a0 = parts[0].series.clone();
            // w_∞ = 13·A₀²
            Ok((parts, a0.pow(2).scale(&int(13))))
        }
    }
}

/// Σ over all fourteen roots of root^k, as a series in the point.
pub fn root_power_sum(
    fs: &FormSet,
    family: RootFamily,
    k: u32,
    cache: &mut MonomialCache,
) -> Result<(QSeries, Extraction), SeriesError> {
    let (parts, inf) = root_parts(fs, family, cache)?;
    let m = match family {
        RootFamily::Delta => k,
        RootFamily::W => 2 * k,
    };
    let (finite, how) = twisted_power_sum(&parts, m)?;
    Ok((finite.try_add(&inf.pow(k))?, how))
}

/// η-scaling level at which a series identity is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// xᵢ = η·aᵢ
    X,
    /// yᵢ = η³·aᵢ
    Y,
}

impl Level {
    pub fn eta_power(self, degree: u32) -> u32 {
        match self {
            Level::X => degree,
            Level::Y => 3 * degree,
        }
    }
}

/// Unnormalized power sum and normalized invariant of one Φ at the theta point.
#[derive(Clone, Debug)]
pub struct InvariantAtTheta {
    pub form: InvariantForm,
    /// Σ root^power at the a-point.
    pub raw_a: QSeries,
    /// Φ(x₁, …, x₆).
    pub normalized_x: QSeries,
    pub extraction: Extraction,
}

impl InvariantAtTheta {
    /// The unnormalized sum read at level x or y.
    pub fn raw_at(&self, level: Level) -> QSeries {
        times_eta_power(&self.raw_a, level.eta_power(self.form.degree)).reduce_grid()
    }
}

/// The theta point (a₁, …, a₆) with enough slack that products of η-scaled
/// values are known through q^N.
pub struct ThetaPoint {
    pub order: i64,
    pub a: SeriesVector,
}

impl ThetaPoint {
    pub fn new(order: i64) -> Self {
        ThetaPoint {
            order,
            a: theta13_vector(order + 1),
        }
    }

    pub fn invariant(&self, fs: &FormSet, form: &InvariantForm, cache: &mut MonomialCache) -> Result<InvariantAtTheta, SeriesError> {
        let (raw_a, extraction) = root_power_sum(fs, form.family, form.power, cache)?;
        let x = times_eta_power(&raw_a, form.degree).reduce_grid();
        let normalized_x = x.scale(&Rational::new(1.into(), form.divisor.into()));
        if normalized_x.known_through() < self.order {
            return Err(SeriesError::Truncation {
                needed: self.order,
                known: normalized_x.known_through(),
            });
        }
        Ok(InvariantAtTheta {
            form: *form,
            raw_a,
            normalized_x: normalized_x.through(self.order),
            extraction,
        })
    }
}

/// The classical modular form each Φ is identified with at the x-level.
pub fn invariant_target(degree: u32, n: i64) -> Result<QSeries, SeriesError> {
    let delta = super::generators::delta_series(n);
    let e4 = eisenstein_series(4, n)?;
    let e6 = eisenstein_series(6, n)?;
    let eta8 = eta_series(n).pow(8).reduce_grid();
    let t = match degree {
        12 => delta,
        18 => delta.try_mul(&e6)?,
        20 => eta8.mul_aligned(&delta.try_mul(&e4)?),
        30 => delta.pow(2).try_mul(&e6)?,
        32 => eta8.mul_aligned(&delta.pow(2).try_mul(&e4)?),
        42 => delta.pow(3).try_mul(&e6)?,
        44 => eta8.mul_aligned(&delta.pow(3).try_mul(&e4)?),
        d => return Err(SeriesError::UnknownInvariant(d)),
    };
    Ok(t.reduce_grid().through(n))
}

/// Whether a − b vanishes through q^n, on the common grid.
pub fn agree_through(a: &QSeries, b: &QSeries, n: i64) -> bool {
    a.sub_aligned(b).vanishes_through(n)
}

/// Leading exponent as a reduced fraction (numerator, denominator).
pub fn leading_exponent(s: &QSeries) -> Option<(i64, i64)> {
    let (k, _) = s.terms().next()?;
    let d = s.denom() as i64;
    let g = k.gcd(&d);
    Some((k / g, d / g))
}
