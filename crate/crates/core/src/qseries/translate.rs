//! The two generator laws for the theta vector A = (a₁, …, a₆):
//! z ↦ z+1 exactly over Q(ζ₁₀₄), and z ↦ −1/z numerically.

use num_complex::Complex64;

use crate::exact::{embed_c64, ComplexApprox, CyclotomicNumber};
use crate::group::CycloMatrix;

use super::generators::{QSeries, THETA13_OFFSETS, THETA13_SIGNS};
use super::series::PuiseuxSeries;
use super::SeriesError;

pub const SHIFT_ORDER: u32 = 104;

/// Largest tail bound accepted from a numeric theta evaluation.
pub const TAIL_TOLERANCE: f64 = 1e-12;

pub fn to_cyclo104(s: &QSeries) -> PuiseuxSeries<CyclotomicNumber> {
    s.map_coeffs(|c| CyclotomicNumber::rational(SHIFT_ORDER, c).expect("order 104"))
}

/// z ↦ z+1 sends q^(k/M) to ζ₁₀₄^(104k/M)·q^(k/M).
pub fn shift_z_plus_1(
    s: &PuiseuxSeries<CyclotomicNumber>,
) -> Result<PuiseuxSeries<CyclotomicNumber>, SeriesError> {
    let m = s.denom();
    if SHIFT_ORDER % m != 0 {
        return Err(SeriesError::GridNotDividing(m));
    }
    let step = (SHIFT_ORDER / m) as i64;
    let terms: Result<Vec<_>, SeriesError> = s
        .terms()
        .map(|(k, c)| {
            let z = CyclotomicNumber::zeta(SHIFT_ORDER, step * k)?;
            Ok((k, c.lift(SHIFT_ORDER)?.try_mul(&z)?))
        })
        .collect();
    Ok(PuiseuxSeries::from_terms(m, terms?, s.trunc()))
}

/// The factor e^(−3πi/4)·ζ₁₃^t predicted for component i under z ↦ z+1, as
/// ζ₁₀₄^(65 + 8t).
pub fn expected_shift_factor(t_exponent: i64) -> CyclotomicNumber {
    CyclotomicNumber::zeta(SHIFT_ORDER, 65 + 8 * t_exponent).expect("order 104")
}

/// aᵢ(z) by direct summation over |n| ≤ terms, with the neglected tail
/// bounded by Gaussian decay and folded into the error bound.
pub fn numeric_theta_eval(i: usize, z: Complex64, terms: i64) -> Result<ComplexApprox, SeriesError> {
    if !(1..=6).contains(&i) {
        return Err(SeriesError::BadComponent(i));
    }
    if z.im <= 0.0 {
        return Err(SeriesError::NotInUpperHalfPlane);
    }
    let c = THETA13_OFFSETS[i - 1] as f64;
    let two_pi_i_z = Complex64::new(0.0, 2.0 * std::f64::consts::PI) * z;
    let exponent = |n: f64| c * c / 104.0 + (13.0 * n * n + c * n) / 2.0;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for n in -terms..=terms {
        let t = (two_pi_i_z * exponent(n as f64)).exp();
        scale = scale.max(t.norm());
        sum += if n.rem_euclid(2) == 0 { t } else { -t };
    }
    // beyond |n| = K the exponents are at least e(K+1) and grow by ≥ 1 per step
    let x = (-2.0 * std::f64::consts::PI * z.im).exp();
    let k = (terms + 1) as f64;
    let emin = exponent(-k).min(exponent(k));
    let tail = 2.0 * x.powf(emin) / (1.0 - x);
    if tail > TAIL_TOLERANCE {
        return Err(SeriesError::TailBound(tail));
    }
    let rounding = (2 * terms + 1) as f64 * scale.max(1.0) * 4.0 * f64::EPSILON;
    Ok(ComplexApprox::from_c64(sum * THETA13_SIGNS[i - 1] as f64, tail + rounding))
}

/// The whole vector A(z), choosing the number of terms from the tail bound.
pub fn numeric_theta_vector(z: Complex64) -> Result<Vec<ComplexApprox>, SeriesError> {
    let terms = terms_for(z.im);
    (1..=6).map(|i| numeric_theta_eval(i, z, terms)).collect()
}

/// Smallest summation range whose tail bound is below the tolerance.
pub fn terms_for(im: f64) -> i64 {
    let x = (-2.0 * std::f64::consts::PI * im).exp();
    (0..200)
        .find(|&k| {
            let k1 = (k + 1) as f64;
            let e = 13.0 * k1 * k1 / 2.0 - 11.0 * k1 / 2.0;
            2.0 * x.powf(e) / (1.0 - x) < TAIL_TOLERANCE / 10.0
        })
        .unwrap_or(200)
}

/// Largest componentwise distance between A(−1/z) and e^(πi/4)·√z·S·A(z).
pub fn inversion_defect(s: &CycloMatrix, z: Complex64) -> Result<f64, SeriesError> {
    let lhs = numeric_theta_vector(-1.0 / z)?;
    let rhs_in = numeric_theta_vector(z)?;
    let factor = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4) * z.sqrt();
    let mut worst = 0.0f64;
    for (r, l) in lhs.iter().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, v) in rhs_in.iter().enumerate() {
            acc += embed_c64(s.get(r, c)) * v.to_c64();
        }
        worst = worst.max(l.distance_c64(factor * acc));
    }
    Ok(worst)
}
