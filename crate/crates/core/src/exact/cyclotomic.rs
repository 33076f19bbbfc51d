use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{format_rational, parse_rational, Field, Rational, Ring};
use super::ExactError;

/// Per-order reduction data, built once and leaked so elements can hold a
/// `&'static` to it.
pub struct CycloField {
    order: u32,
    degree: usize,
    /// Coefficients of the n-th cyclotomic polynomial, constant term first.
    phi: Vec<i64>,
    /// `high[k - degree]` is x^k mod Φₙ as sparse (index, coeff) pairs.
    high: Vec<Vec<(usize, i64)>>,
}

impl CycloField {
    pub fn get(order: u32) -> Result<&'static CycloField, ExactError> {
        if order == 0 {
            return Err(ExactError::ZeroOrder);
        }
        static FIELDS: OnceLock<RwLock<HashMap<u32, &'static CycloField>>> = OnceLock::new();
        let fields = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(f) = fields.read().unwrap().get(&order) {
            return Ok(f);
        }
        let mut w = fields.write().unwrap();
        let f = *w
            .entry(order)
            .or_insert_with(|| Box::leak(Box::new(CycloField::build(order))));
        Ok(f)
    }

    fn build(order: u32) -> CycloField {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let limit = (order as usize).max(2 * degree);
        let mut high = Vec::new();
        // x^degree = -(phi - x^degree)
        let mut cur: Vec<i64> = phi[..degree].iter().map(|c| -c).collect();
        for _ in degree..limit {
            high.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| (i, *c))
                    .collect(),
            );
            // multiply by x and fold the overflow back in
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..degree {
                    cur[i] -= top * phi[i];
                }
            }
        }
        CycloField {
            order,
            degree,
            phi,
            high,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.phi
    }

    /// Reduces a dense integer vector of any length (indices taken mod n) in place
    /// and returns the `degree`-long canonical numerator.
    fn reduce(&self, mut acc: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.order as usize;
        if acc.len() > n {
            for k in n..acc.len() {
                if !acc[k].is_zero() {
                    let v = std::mem::take(&mut acc[k]);
                    acc[k % n] += v;
                }
            }
            acc.truncate(n);
        }
        for k in (self.degree..acc.len()).rev() {
            if acc[k].is_zero() {
                continue;
            }
            let v = std::mem::take(&mut acc[k]);
            for &(i, c) in &self.high[k - self.degree] {
                acc[i] += &v * c;
            }
        }
        acc.resize(self.degree, BigInt::zero());
        acc
    }
}

/// Φₙ by exact division of xⁿ − 1 by the proper-divisor cyclotomic polynomials.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn divide_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = a.len() - b.len();
    let mut q = vec![0i64; dq + 1];
    for i in (0..=dq).rev() {
        let c = rem[i + db];
        q[i] = c;
        if c != 0 {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= c * bj;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    q
}

/// Exact element of Q(ζₙ) in the power basis 1, ζ, …, ζ^(deg−1).
///
/// Stored as an integer numerator vector over a common positive denominator,
/// kept in lowest terms, so equal elements have identical representations.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: &'static CycloField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    /// Canonical representative of Σ c·ζₙ^e for arbitrary integer exponents.
    pub fn make(order: u32, raw: &[(i64, Rational)]) -> Result<Self, ExactError> {
        let field = CycloField::get(order)?;
        let n = order as i64;
        let den = raw
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut acc = vec![BigInt::zero(); n as usize];
        for (e, c) in raw {
            let k = e.rem_euclid(n) as usize;
            acc[k] += c.numer() * (&den / c.denom());
        }
        let acc = if field.degree < acc.len() {
            field.reduce(acc)
        } else {
            acc
        };
        Ok(Self::normalized(field, acc, den))
    }

    pub fn zeta(order: u32, k: i64) -> Result<Self, ExactError> {
        Self::make(order, &[(k, Rational::one())])
    }

    pub fn rational(order: u32, q: &Rational) -> Result<Self, ExactError> {
        Self::make(order, &[(0, q.clone())])
    }

    pub fn from_int_in(order: u32, n: i64) -> Result<Self, ExactError> {
        Self::rational(order, &Rational::from_integer(n.into()))
    }

    /// Builds from power-basis coefficients; the slice must be exactly `degree` long.
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Result<Self, ExactError> {
        let field = CycloField::get(order)?;
        if coeffs.len() != field.degree {
            return Err(ExactError::BasisLength {
                expected: field.degree,
                got: coeffs.len(),
            });
        }
        let raw: Vec<(i64, Rational)> = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (i as i64, c.clone()))
            .collect();
        Self::make(order, &raw)
    }

    fn normalized(field: &'static CycloField, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for x in num.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        if !den.is_one() {
            if num.iter().all(|x| x.is_zero()) {
                den = BigInt::one();
            } else {
                let mut g = den.clone();
                for x in num.iter() {
                    if !x.is_zero() {
                        g = g.gcd(x);
                        if g.is_one() {
                            break;
                        }
                    }
                }
                if !g.is_one() {
                    for x in num.iter_mut() {
                        if !x.is_zero() {
                            *x /= &g;
                        }
                    }
                    den /= &g;
                }
            }
        }
        CyclotomicNumber { field, num, den }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn degree(&self) -> usize {
        self.field.degree
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    /// Power-basis coefficients as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|x| Rational::new(x.clone(), self.den.clone()))
            .collect()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.is_rational()
    }

    /// The value as a rational if it lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(|x| x.is_zero()) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|x| x.is_zero())
    }

    /// Number of nonzero basis coefficients.
    pub fn support_len(&self) -> usize {
        self.num.iter().filter(|x| !x.is_zero()).count()
    }

    /// Re-expresses the element in Q(ζₘ) for a multiple m of the current order.
    pub fn lift(&self, target: u32) -> Result<Self, ExactError> {
        let n = self.order();
        if target == n {
            return Ok(self.clone());
        }
        if target == 0 || target % n != 0 {
            return Err(ExactError::NotASubfield {
                from: n,
                to: target,
            });
        }
        let step = (target / n) as i64;
        let raw: Vec<(i64, Rational)> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i as i64 * step, Rational::new(x.clone(), self.den.clone())))
            .collect();
        Self::make(target, &raw)
    }

    /// Brings two operands into a common field; order-1 elements act as
    /// scalars in any field.
    fn common_field(&self, other: &Self) -> Result<&'static CycloField, ExactError> {
        let (a, b) = (self.order(), other.order());
        if a == b || b == 1 {
            Ok(self.field)
        } else if a == 1 {
            Ok(other.field)
        } else {
            Err(ExactError::OrderMismatch(a, b))
        }
    }

    fn widen(&self, field: &'static CycloField) -> std::borrow::Cow<'_, Self> {
        if std::ptr::eq(self.field, field) {
            std::borrow::Cow::Borrowed(self)
        } else {
            // order 1 -> anything: the constant coefficient carries over
            debug_assert_eq!(self.order(), 1);
            let mut num = vec![BigInt::zero(); field.degree];
            num[0] = self.num[0].clone();
            std::borrow::Cow::Owned(CyclotomicNumber {
                field,
                num,
                den: self.den.clone(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let f = self.common_field(other)?;
        let (a, b) = (self.widen(f), other.widen(f));
        if a.den == b.den {
            let num = a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect();
            Ok(Self::normalized(f, num, a.den.clone()))
        } else {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| x * &b.den + y * &a.den)
                .collect();
            Ok(Self::normalized(f, num, &a.den * &b.den))
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        CyclotomicNumber {
            field: self.field,
            num: self.num.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let f = self.common_field(other)?;
        if self.order() == 1 || other.order() == 1 {
            let (s, x) = if self.order() == 1 {
                (self, other.widen(f))
            } else {
                (other, self.widen(f))
            };
            let c = &s.num[0];
            let num = x.num.iter().map(|v| v * c).collect();
            return Ok(Self::normalized(f, num, &x.den * &s.den));
        }
        let d = f.degree;
        let lhs: Vec<(usize, &BigInt)> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        let rhs: Vec<(usize, &BigInt)> = other
            .num
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        let mut acc = vec![BigInt::zero(); 2 * d];
        for (i, x) in &lhs {
            for (j, y) in &rhs {
                acc[i + j] += *x * *y;
            }
        }
        let num = f.reduce(acc);
        Ok(Self::normalized(f, num, &self.den * &other.den))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|x| x * q.numer()).collect();
        Self::normalized(self.field, num, &self.den * q.denom())
    }

    /// Ring automorphism ζ → ζᵏ.
    pub fn galois_twist(&self, k: i64) -> Result<Self, ExactError> {
        let n = self.order() as i64;
        if k.gcd(&n) != 1 {
            return Err(ExactError::NotCoprime { k, order: n as u32 });
        }
        let raw: Vec<(i64, Rational)> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i as i64 * k, Rational::new(x.clone(), self.den.clone())))
            .collect();
        Self::make(n as u32, &raw)
    }

    /// Field norm down to Q: the product of all Galois conjugates.
    pub fn norm(&self) -> Rational {
        if let Some(q) = self.as_rational() {
            return num_traits::pow(q, self.degree());
        }
        let conj = self.conjugate_product();
        self.try_mul(&conj)
            .expect("same order")
            .as_rational()
            .expect("norm is rational")
    }

    fn conjugate_product(&self) -> Self {
        let n = self.order() as i64;
        let mut acc = Self::one_in(self.field);
        for k in 2..n {
            if k.gcd(&n) == 1 {
                let t = self.galois_twist(k).expect("coprime");
                acc = acc.try_mul(&t).expect("same order");
            }
        }
        acc
    }

    fn one_in(field: &'static CycloField) -> Self {
        let mut num = vec![BigInt::zero(); field.degree];
        num[0] = BigInt::one();
        CyclotomicNumber {
            field,
            num,
            den: BigInt::one(),
        }
    }

    pub fn try_inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            let r = q.recip();
            let mut num = vec![BigInt::zero(); self.degree()];
            num[0] = r.numer().clone();
            return Ok(Self::normalized(self.field, num, r.denom().clone()));
        }
        let conj = self.conjugate_product();
        let norm = self
            .try_mul(&conj)?
            .as_rational()
            .expect("norm is rational");
        Ok(conj.scale(&norm.recip()))
    }

    pub fn pow_i(&self, e: i64) -> Result<Self, ExactError> {
        if e >= 0 {
            Ok(Ring::pow(self, e as u32))
        } else {
            Ok(Ring::pow(&self.try_inv()?, (-e) as u32))
        }
    }

    /// Machine text form `n|i:c,i:c` listing nonzero basis coefficients.
    pub fn to_text(&self) -> String {
        let body: Vec<String> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| {
                format!(
                    "{}:{}",
                    i,
                    format_rational(&Rational::new(x.clone(), self.den.clone()))
                )
            })
            .collect();
        format!("{}|{}", self.order(), body.join(","))
    }

    /// Parses the `to_text` form. Exponents may be any value below the order;
    /// they are reduced, so non-canonical input is accepted and canonicalized.
    pub fn parse_text(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::Parse(s.chars().take(80).collect());
        let (order, body) = s.trim().split_once('|').ok_or_else(bad)?;
        let order: u32 = order.parse().map_err(|_| bad())?;
        if order == 0 || order > 10_000 {
            return Err(bad());
        }
        let mut raw = Vec::new();
        if !body.is_empty() {
            for item in body.split(',') {
                let (e, c) = item.split_once(':').ok_or_else(bad)?;
                let e: u32 = e.parse().map_err(|_| bad())?;
                if e >= order {
                    return Err(bad());
                }
                raw.push((e as i64, parse_rational(c).ok_or_else(bad)?));
            }
        }
        Self::make(order, &raw)
    }
}

impl Zero for CyclotomicNumber {
    fn zero() -> Self {
        Self::rational(1, &Rational::zero()).unwrap()
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
}

impl One for CyclotomicNumber {
    fn one() -> Self {
        Self::rational(1, &Rational::one()).unwrap()
    }
    fn is_one(&self) -> bool {
        CyclotomicNumber::is_one(self)
    }
}

impl Ring for CyclotomicNumber {
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn negated(&self) -> Self {
        self.negate()
    }
    fn minus(&self, other: &Self) -> Self {
        self.try_sub(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::rational(1, q).unwrap()
    }
}

impl Field for CyclotomicNumber {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

impl From<Rational> for CyclotomicNumber {
    fn from(q: Rational) -> Self {
        Self::rational(1, &q).unwrap()
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if std::ptr::eq(self.field, other.field) {
            return self.den == other.den && self.num == other.num;
        }
        if self.order() == 1 || other.order() == 1 {
            return match (self.as_rational(), other.as_rational()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            };
        }
        let m = self.order().lcm(&other.order());
        match (self.lift(m), other.lift(m)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for CyclotomicNumber {}

impl Hash for CyclotomicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Rational values hash identically in every field, matching `eq`.
        if self.is_rational() {
            0u32.hash(state);
            self.num[0].hash(state);
        } else {
            self.order().hash(state);
            self.num.hash(state);
        }
        self.den.hash(state);
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let c = Rational::new(x.clone(), self.den.clone());
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{}", format_rational(&mag))?,
                (_, true) => write!(f, "ζ{}^{}", self.order(), i)?,
                _ => write!(f, "{}·ζ{}^{}", format_rational(&mag), self.order(), i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                Ring::$inner(self, rhs)
            }
        }
        impl std::ops::$tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                Ring::$inner(&self, &rhs)
            }
        }
        impl std::ops::$tr<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                Ring::$inner(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl std::ops::Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.negate()
    }
}

impl std::ops::Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::int;

    fn z(k: i64) -> CyclotomicNumber {
        CyclotomicNumber::zeta(13, k).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        let p104 = cyclotomic_polynomial(104);
        assert_eq!(p104.len(), 49);
        for (i, c) in p104.iter().enumerate() {
            let expect = if i % 4 == 0 {
                if (i / 4) % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            assert_eq!(*c, expect, "coefficient {i}");
        }
    }

    #[test]
    fn zeta_to_the_order_is_one() {
        for n in [5u32, 8, 13, 104] {
            let one = CyclotomicNumber::make(n, &[(n as i64, int(1))]).unwrap();
            assert!(one.is_one());
            assert!(CyclotomicNumber::make(n, &[(-3 * n as i64, int(1))])
                .unwrap()
                .is_one());
        }
    }

    #[test]
    fn full_sum_vanishes() {
        let raw: Vec<_> = (0..13).map(|k| (k, int(1))).collect();
        assert!(CyclotomicNumber::make(13, &raw).unwrap().is_zero());
    }

    #[test]
    fn hand_square() {
        let a = &z(1) - &z(12);
        let expect = &(&z(2) + &z(11)) - &CyclotomicNumber::from_int_in(13, 2).unwrap();
        assert_eq!(&a * &a, expect);
    }

    #[test]
    fn repeated_squaring_tracks_exponent() {
        let mut a = z(1);
        for _ in 0..12 {
            a = &a * &a;
        }
        assert_eq!(a, z(4096 % 13));
    }

    #[test]
    fn zero_order_rejected() {
        assert!(matches!(
            CyclotomicNumber::make(0, &[]),
            Err(ExactError::ZeroOrder)
        ));
    }

    #[test]
    fn mixed_orders() {
        assert!(z(1).try_mul(&CyclotomicNumber::zeta(5, 1).unwrap()).is_err());
        let half = CyclotomicNumber::from(crate::exact::rat(1, 2));
        let p = &half * &z(3);
        assert_eq!(p.order(), 13);
        assert_eq!(p.coeff(3), crate::exact::rat(1, 2));
    }

    #[test]
    fn inverse_of_nonrational() {
        let a = &(&z(1) + &z(5)) + &CyclotomicNumber::from_int_in(13, 3).unwrap();
        let inv = a.try_inv().unwrap();
        assert!((&a * &inv).is_one());
        assert!(CyclotomicNumber::zero().try_inv().is_err());
    }

    #[test]
    fn lift_matches_subfield() {
        let a = z(1);
        let b = a.lift(104).unwrap();
        assert_eq!(b, CyclotomicNumber::zeta(104, 8).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn text_round_trip() {
        let a = &z(3).scale(&crate::exact::rat(-2, 3)) + &z(0);
        let t = a.to_text();
        assert_eq!(t, "13|0:1,3:-2/3");
        assert_eq!(CyclotomicNumber::parse_text(&t).unwrap(), a);
        assert!(CyclotomicNumber::parse_text("13|13:1").is_err());
        assert!(CyclotomicNumber::parse_text("0|").is_err());
    }
}
