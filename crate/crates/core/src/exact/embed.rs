use std::fmt;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use super::cyclotomic::CyclotomicNumber;
use super::ring::Rational;
use super::ExactError;

pub type Float = FBig<HalfEven, 2>;

pub const DEFAULT_PRECISION: usize = 128;

/// Complex value at a chosen binary precision with an absolute error bound
/// covering rounding in its computation.
#[derive(Clone, Debug)]
pub struct ComplexApprox {
    pub re: Float,
    pub im: Float,
    pub error_bound: f64,
    precision: usize,
}

impl ComplexApprox {
    pub fn new(re: Float, im: Float, error_bound: f64, precision: usize) -> Self {
        ComplexApprox {
            re,
            im,
            error_bound,
            precision,
        }
    }

    pub fn from_c64(z: Complex64, error_bound: f64) -> Self {
        ComplexApprox {
            re: float_from_f64(z.re, 53),
            im: float_from_f64(z.im, 53),
            error_bound,
            precision: 53,
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn re_f64(&self) -> f64 {
        self.re.to_f64().value()
    }

    pub fn im_f64(&self) -> f64 {
        self.im.to_f64().value()
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re_f64(), self.im_f64())
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.precision.min(o.precision);
        ComplexApprox {
            re: with_prec(&self.re + &o.re, p),
            im: with_prec(&self.im + &o.im, p),
            error_bound: self.error_bound + o.error_bound + ulp_bound(self.magnitude() + o.magnitude(), p),
            precision: p,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.precision.min(o.precision);
        let re = with_prec(&self.re * &o.re - &self.im * &o.im, p);
        let im = with_prec(&self.re * &o.im + &self.im * &o.re, p);
        let (ma, mb) = (self.magnitude(), o.magnitude());
        let err = ma * o.error_bound
            + mb * self.error_bound
            + self.error_bound * o.error_bound
            + ulp_bound(4.0 * ma * mb, p);
        ComplexApprox {
            re,
            im,
            error_bound: err,
            precision: p,
        }
    }

    /// Upper estimate of |z| in f64; only used to size error bounds.
    pub fn magnitude(&self) -> f64 {
        self.re_f64().abs() + self.im_f64().abs()
    }

    /// |self − other| computed in f64 after subtracting at full precision.
    pub fn distance(&self, o: &Self) -> f64 {
        let dr: f64 = (&self.re - &o.re).to_f64().value();
        let di: f64 = (&self.im - &o.im).to_f64().value();
        dr.hypot(di)
    }

    pub fn distance_c64(&self, z: Complex64) -> f64 {
        (self.to_c64() - z).norm()
    }
}

impl fmt::Display for ComplexApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:.15} {:+.15}i (±{:.1e})",
            self.re_f64(),
            self.im_f64(),
            self.error_bound
        )
    }
}

fn ulp_bound(mag: f64, precision: usize) -> f64 {
    (mag + 1.0) * 2f64.powi(-(precision as i32) + 2)
}

fn with_prec(x: Float, p: usize) -> Float {
    x.with_precision(p).value()
}

pub fn float_from_f64(x: f64, precision: usize) -> Float {
    let f = Float::try_from(x).unwrap_or(Float::ZERO);
    f.with_precision(precision.max(53)).value()
}

pub fn bigint_to_ibig(x: &BigInt) -> IBig {
    // decimal round trip keeps this independent of limb layouts
    x.to_string().parse().expect("decimal integer")
}

pub fn rational_to_float(q: &Rational, precision: usize) -> Float {
    let n = Float::from(bigint_to_ibig(q.numer())).with_precision(precision).value();
    let d = Float::from(bigint_to_ibig(q.denom())).with_precision(precision).value();
    n / d
}

/// cos and sin of 2πk/n at the given precision.
pub fn root_of_unity(k: i64, n: u32, precision: usize) -> (Float, Float) {
    let work = precision + 16;
    let k = k.rem_euclid(n as i64);
    let pi = Float::pi(work);
    let x = pi * Float::from(2 * k) / Float::from(n as i64);
    let (s, c) = x.with_precision(work).value().sin_cos();
    (with_prec(c, precision), with_prec(s, precision))
}

/// Evaluates the power basis at exp(2πi/n).
pub fn embed(a: &CyclotomicNumber, precision: usize) -> Result<ComplexApprox, ExactError> {
    if precision < 53 {
        return Err(ExactError::Precision(precision));
    }
    let n = a.order();
    let mut re = Float::ZERO.with_precision(precision).value();
    let mut im = re.clone();
    let mut weight = 0.0f64;
    let mut terms = 0usize;
    for (i, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cf = rational_to_float(c, precision + 16);
        let (cr, ci) = root_of_unity(i as i64, n, precision + 16);
        re = with_prec(&re + &cf * cr, precision + 16);
        im = with_prec(&im + &cf * ci, precision + 16);
        weight += cf.to_f64().value().abs();
        terms += 1;
    }
    let err = (weight + 1.0) * (terms as f64 + 1.0) * 2f64.powi(-(precision as i32) + 2);
    Ok(ComplexApprox {
        re: with_prec(re, precision),
        im: with_prec(im, precision),
        error_bound: err,
        precision,
    })
}

pub fn embed_c64(a: &CyclotomicNumber) -> Complex64 {
    embed(a, DEFAULT_PRECISION).expect("default precision").to_c64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_one_and_zeta() {
        let one = CyclotomicNumber::from_int_in(13, 1).unwrap();
        let e = embed(&one, 128).unwrap();
        assert_eq!(e.re_f64(), 1.0);
        assert_eq!(e.im_f64(), 0.0);
        let z = embed(&CyclotomicNumber::zeta(13, 1).unwrap(), 128).unwrap();
        let t = 2.0 * std::f64::consts::PI / 13.0;
        assert!((z.re_f64() - t.cos()).abs() < 1e-15);
        assert!((z.im_f64() - t.sin()).abs() < 1e-15);
        assert!(z.error_bound < 1e-30);
    }

    #[test]
    fn low_precision_rejected() {
        assert!(embed(&CyclotomicNumber::zeta(13, 1).unwrap(), 52).is_err());
    }
}
