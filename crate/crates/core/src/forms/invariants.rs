//! The seven invariants Φⱼ as normalized power sums of the fourteen roots.
//!
//! Only Φ₁₂ is small enough to expand (6188 possible monomials); the others
//! are handled through evaluation, either at prime-field points or at
//! q-series.

use crate::exact::{rat, CyclotomicNumber, Rational};
use crate::polynomial::{PolyError, PrimeField};

use super::catalog::{Form, FormSet};
use super::FormError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootFamily {
    /// The sextics δ.
    Delta,
    /// The quartics w = φ².
    W,
}

/// Φⱼ = (Σ over the 14 roots of root^power) / divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantForm {
    pub degree: u32,
    pub family: RootFamily,
    pub power: u32,
    pub divisor: i64,
}

pub const INVARIANTS: [InvariantForm; 7] = [
    InvariantForm { degree: 12, family: RootFamily::Delta, power: 2, divisor: -13 * 52 },
    InvariantForm { degree: 18, family: RootFamily::Delta, power: 3, divisor: 13 * 6 },
    InvariantForm { degree: 20, family: RootFamily::W, power: 5, divisor: 13 * 25 },
    InvariantForm { degree: 30, family: RootFamily::Delta, power: 5, divisor: -13 * 1315 },
    InvariantForm { degree: 32, family: RootFamily::W, power: 8, divisor: -13 * 1840 },
    InvariantForm { degree: 42, family: RootFamily::Delta, power: 7, divisor: 13 * 226842 },
    InvariantForm { degree: 44, family: RootFamily::W, power: 11, divisor: 13 * 146905 },
];

pub fn invariant(degree: u32) -> Option<InvariantForm> {
    INVARIANTS.iter().copied().find(|f| f.degree == degree)
}

impl InvariantForm {
    pub fn name(&self) -> String {
        format!("Phi{}", self.degree)
    }

    pub fn normalizer(&self) -> Rational {
        rat(1, self.divisor)
    }

    /// Value at a point of F_p⁶.
    pub fn eval_mod_p(&self, fs: &FormSet, field: &PrimeField, values: &[u64]) -> Result<u64, PolyError> {
        let vals = root_values_mod_p(fs, self.family, field, values)?;
        let sum = vals.iter().fold(0, |acc, &v| field.add(acc, field.pow(v, self.power as u64)));
        let n = field.reduce_rational(&self.normalizer())?;
        Ok(field.mul(sum, n))
    }

    /// The expanded polynomial; only Φ₁₂ is supported.
    pub fn expand(&self, fs: &FormSet) -> Result<Form, FormError> {
        if self.degree != 12 {
            return Err(FormError::TooLarge(self.degree));
        }
        Ok(delta_square_sum(fs).scale(&CyclotomicNumber::from(self.normalizer())))
    }

    /// The fourteen roots whose power sum this is, ∞ first.
    pub fn root_forms<'a>(&self, fs: &'a FormSet) -> Vec<&'a Form> {
        let cat = match self.family {
            RootFamily::Delta => &fs.delta,
            RootFamily::W => &fs.w,
        };
        cat.forms.iter().map(|(_, f)| f).collect()
    }
}

/// Values of the 14 roots of a family at a point, ∞ first.
pub fn root_values_mod_p(
    fs: &FormSet,
    family: RootFamily,
    field: &PrimeField,
    values: &[u64],
) -> Result<Vec<u64>, PolyError> {
    let cat = match family {
        RootFamily::Delta => &fs.delta,
        RootFamily::W => &fs.w,
    };
    cat.forms.iter().map(|(_, f)| f.eval_values_mod_p(field, values)).collect()
}

/// Σ δ² over all roots. With δ_ν = Σⱼ ζ^(jν) G'ⱼ (G'₀ = −13G₀) the sum over ν
/// only keeps products with j + k ≡ 0 mod 13, so the whole computation stays
/// rational: 13·(G'₀² + 2Σ_{j=1..6} Gⱼ G₁₃₋ⱼ) + (169G₀)².
pub fn delta_square_sum(fs: &FormSet) -> Form {
    let g = |j: usize| fs.g.get(j).expect("sextic").to_rational().expect("rational sextic");
    let g0 = g(0);
    let mut acc = g0.try_mul(&g0).expect("same arity").scale(&rat(169, 1));
    for j in 1..=6 {
        let p = g(j).try_mul(&g(13 - j)).expect("same arity");
        acc = acc.try_add(&p.scale(&rat(2, 1))).expect("same arity");
    }
    let acc = acc.scale(&rat(13, 1));
    let dinf = g0.scale(&rat(169, 1));
    acc.try_add(&dinf.try_mul(&dinf).expect("same arity"))
        .expect("same arity")
        .to_cyclotomic()
}

/// Elementary symmetric values e₁..e_k of a list of residues.
pub fn elementary_mod_p(field: &PrimeField, vals: &[u64], k: usize) -> Vec<u64> {
    let mut e = vec![0u64; k + 1];
    e[0] = 1;
    for &v in vals {
        for j in (1..=k).rev() {
            e[j] = field.add(e[j], field.mul(e[j - 1], v));
        }
    }
    e
}

/// Newton's identities k·e_k = Σ_{i=1..k} (−1)^(i−1) e_(k−i) p_i at the
/// given root values, for k = 1..=kmax.
pub fn newton_holds_mod_p(field: &PrimeField, vals: &[u64], kmax: usize) -> bool {
    let e = elementary_mod_p(field, vals, kmax);
    let p: Vec<u64> = (0..=kmax)
        .map(|i| vals.iter().fold(0, |acc, &v| field.add(acc, field.pow(v, i as u64))))
        .collect();
    (1..=kmax).all(|k| {
        let mut rhs = 0u64;
        for i in 1..=k {
            let t = field.mul(e[k - i], p[i]);
            rhs = if i % 2 == 1 { field.add(rhs, t) } else { field.sub(rhs, t) };
        }
        field.mul(k as u64 % field.modulus(), e[k]) == rhs
    })
}
