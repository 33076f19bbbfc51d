use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::exact::{CyclotomicNumber, Rational, Ring};

use super::multipoly::MultiPoly;
use super::PolyError;

/// lcm(120, 312): covers roots of unity of orders 5, 8, 13, 104 and 120.
pub const ROOT_LCM: u64 = 1560;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Smallest prime above 2⁶⁰ that is 1 mod 1560.
pub fn default_prime() -> u64 {
    static P: OnceLock<u64> = OnceLock::new();
    *P.get_or_init(|| {
        let start = (1u64 << 60) / ROOT_LCM + 1;
        (start..)
            .map(|k| k * ROOT_LCM + 1)
            .find(|&p| is_prime(p))
            .expect("a prime exists")
    })
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// F_p together with a fixed root of unity ω of order L = gcd(p−1, 1560).
/// The image of ζₙ is ω^(L/n), so the images for different n are mutually
/// consistent (ζ₁₀₄⁸ maps to the image of ζ₁₃).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    root_order: u64,
    omega: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, PolyError> {
        if !is_prime(p) {
            return Err(PolyError::NotPrime(p));
        }
        let l = gcd(p - 1, ROOT_LCM);
        let factors = prime_factors(l);
        let omega = (2..p)
            .map(|x| pow_mod(x, (p - 1) / l, p))
            .find(|&y| factors.iter().all(|q| pow_mod(y, l / q, p) != 1))
            .expect("a generator of the order-L subgroup exists");
        Ok(PrimeField {
            p,
            root_order: l,
            omega,
        })
    }

    pub fn default_field() -> Self {
        Self::new(default_prime()).expect("default prime")
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.p - b % self.p)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(pow_mod(a, self.p - 2, self.p))
        }
    }

    /// Image of ζₙ: an element of exact multiplicative order n.
    pub fn zeta_image(&self, n: u32) -> Result<u64, PolyError> {
        let n = n as u64;
        if n == 0 || self.root_order % n != 0 {
            return Err(PolyError::ModulusOrder {
                modulus: self.p,
                order: n as u32,
            });
        }
        Ok(self.pow(self.omega, self.root_order / n))
    }

    pub fn reduce_bigint(&self, x: &BigInt) -> u64 {
        let r = x % BigInt::from(self.p);
        let r = if r < BigInt::zero() { r + BigInt::from(self.p) } else { r };
        r.to_u64().expect("reduced below p")
    }

    pub fn reduce_rational(&self, q: &Rational) -> Result<u64, PolyError> {
        let n = self.reduce_bigint(q.numer());
        let d = self.reduce_bigint(q.denom());
        let di = self.inv(d).ok_or(PolyError::DenominatorVanishes(self.p))?;
        Ok(self.mul(n, di))
    }

    pub fn reduce_cyclotomic(&self, a: &CyclotomicNumber) -> Result<u64, PolyError> {
        let z = if a.order() == 1 { 1 } else { self.zeta_image(a.order())? };
        let mut acc = 0u64;
        let mut zp = 1u64;
        for c in a.coeffs() {
            if !c.is_zero() {
                acc = self.add(acc, self.mul(self.reduce_rational(&c)?, zp));
            }
            zp = self.mul(zp, z);
        }
        Ok(acc)
    }

    pub fn random_point(&self, nvars: usize, rng: &mut ChaCha20Rng) -> PrimeFieldPoint {
        PrimeFieldPoint {
            field: self.clone(),
            values: (0..nvars).map(|_| rng.gen_range(0..self.p)).collect(),
        }
    }

    /// Points drawn from a generator seeded with `seed`.
    pub fn random_points(&self, nvars: usize, count: usize, seed: u64) -> Vec<PrimeFieldPoint> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        (0..count).map(|_| self.random_point(nvars, &mut rng)).collect()
    }

    /// M·v for a matrix with cyclotomic entries.
    pub fn apply_matrix(
        &self,
        m: &[Vec<CyclotomicNumber>],
        v: &[u64],
    ) -> Result<Vec<u64>, PolyError> {
        let mut out = Vec::with_capacity(m.len());
        for row in m {
            if row.len() != v.len() {
                return Err(PolyError::DimensionMismatch {
                    nvars: v.len(),
                    rows: row.len(),
                });
            }
            let mut acc = 0;
            for (c, x) in row.iter().zip(v) {
                acc = self.add(acc, self.mul(self.reduce_cyclotomic(c)?, *x));
            }
            out.push(acc);
        }
        Ok(out)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coefficient rings that map into F_p.
pub trait ReduceModP: Ring {
    fn reduce_mod_p(&self, field: &PrimeField) -> Result<u64, PolyError>;
}

impl ReduceModP for Rational {
    fn reduce_mod_p(&self, field: &PrimeField) -> Result<u64, PolyError> {
        field.reduce_rational(self)
    }
}

impl ReduceModP for CyclotomicNumber {
    fn reduce_mod_p(&self, field: &PrimeField) -> Result<u64, PolyError> {
        field.reduce_cyclotomic(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldPoint {
    pub field: PrimeField,
    pub values: Vec<u64>,
}

impl PrimeFieldPoint {
    pub fn new(field: PrimeField, values: Vec<u64>) -> Self {
        let p = field.modulus();
        PrimeFieldPoint {
            values: values.into_iter().map(|v| v % p).collect(),
            field,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn zeta_image(&self, n: u32) -> Result<u64, PolyError> {
        self.field.zeta_image(n)
    }
}

impl<C: ReduceModP> MultiPoly<C> {
    pub fn eval_mod_p(&self, point: &PrimeFieldPoint) -> Result<u64, PolyError> {
        self.eval_values_mod_p(&point.field, &point.values)
    }

    pub fn eval_values_mod_p(&self, f: &PrimeField, values: &[u64]) -> Result<u64, PolyError> {
        if values.len() != self.nvars() {
            return Err(PolyError::VarMismatch(self.nvars(), values.len()));
        }
        let maxdeg = self.degree().unwrap_or(0) as usize;
        let powers: Vec<Vec<u64>> = values
            .iter()
            .map(|&x| {
                let mut p = vec![1u64];
                for k in 1..=maxdeg {
                    p.push(f.mul(p[k - 1], x));
                }
                p
            })
            .collect();
        let mut acc = 0u64;
        for (m, c) in self.terms() {
            let mut t = c.reduce_mod_p(f)?;
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t = f.mul(t, pw[e]);
                }
            }
            acc = f.add(acc, t);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_prime_shape() {
        let p = default_prime();
        assert!(p > 1 << 60);
        assert_eq!(p % ROOT_LCM, 1);
        assert!(is_prime(p));
        // nothing smaller qualifies
        let mut q = p - ROOT_LCM;
        while q > 1 << 60 {
            assert!(!is_prime(q));
            q -= ROOT_LCM;
        }
    }

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..40).filter(|n| is_prime(*n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn zeta_images_have_exact_order() {
        let f = PrimeField::default_field();
        for n in [5u32, 8, 13, 104, 120] {
            let z = f.zeta_image(n).unwrap();
            assert_eq!(f.pow(z, n as u64), 1);
            for d in 1..n {
                if n % d == 0 {
                    assert_ne!(f.pow(z, d as u64), 1, "order {n} divisor {d}");
                }
            }
        }
        let z13 = f.zeta_image(13).unwrap();
        assert_eq!(f.pow(f.zeta_image(104).unwrap(), 8), z13);
        assert!(f.zeta_image(7).is_err());
    }

    #[test]
    fn small_modulus_without_roots() {
        let f = PrimeField::new(7).unwrap();
        assert!(matches!(f.zeta_image(13), Err(PolyError::ModulusOrder { .. })));
        assert!(PrimeField::new(15).is_err());
    }
}
