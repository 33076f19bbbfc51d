//! The nine relations among the Φⱼ, each of the shape
//! Φ_a³·Φ₁₂^k − Φ₁₂^m·Φ_b² = 1728·Φ₁₂^n, and their reduction to
//! E₄³ − E₆² = 1728Δ through the modular identifications.

use crate::exact::{int, Rational, Ring};
use crate::polynomial::{Monomial, MultiPoly, PrimeField};

/// Φ degrees in the order used for exponent vectors.
pub const PHI_DEGREES: [u32; 7] = [12, 18, 20, 30, 32, 42, 44];

/// Σ c·Π Φ^e = 0 with exponents indexed like [`PHI_DEGREES`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub slug: &'static str,
    pub terms: Vec<(i64, [u32; 7])>,
}

fn phi_index(degree: u32) -> usize {
    PHI_DEGREES.iter().position(|&d| d == degree).expect("known degree")
}

/// Φ_cube³·Φ₁₂^k − Φ₁₂^m·Φ_square² − 1728·Φ₁₂^n.
fn relation(slug: &'static str, cube: u32, k: u32, m: u32, square: u32, n: u32) -> Relation {
    let mono = |parts: &[(u32, u32)]| {
        let mut e = [0u32; 7];
        for &(d, p) in parts {
            e[phi_index(d)] += p;
        }
        e
    };
    Relation {
        slug,
        terms: vec![
            (1, mono(&[(cube, 3), (12, k)])),
            (-1, mono(&[(12, m), (square, 2)])),
            (-1728, mono(&[(12, n)])),
        ],
    }
}

pub fn relations() -> Vec<Relation> {
    vec![
        relation("phi20-phi30", 20, 0, 0, 30, 5),
        relation("phi20-phi18", 20, 0, 2, 18, 5),
        relation("phi20-phi42", 20, 2, 0, 42, 7),
        relation("phi32-phi18", 32, 0, 5, 18, 8),
        relation("phi32-phi30", 32, 0, 3, 30, 8),
        relation("phi32-phi42", 32, 0, 1, 42, 8),
        relation("phi44-phi18", 44, 0, 8, 18, 11),
        relation("phi44-phi30", 44, 0, 6, 30, 11),
        relation("phi44-phi42", 44, 0, 4, 42, 11),
    ]
}

impl Relation {
    /// Human-readable form, e.g. "Phi20^3 - Phi30^2 - 1728 Phi12^5 = 0".
    pub fn display(&self) -> String {
        let mono = |e: &[u32; 7]| {
            PHI_DEGREES
                .iter()
                .zip(e)
                .filter(|(_, p)| **p > 0)
                .map(|(d, p)| if *p == 1 { format!("Phi{d}") } else { format!("Phi{d}^{p}") })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut s = String::new();
        for (i, (c, e)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            let coef = if mag == 1 { String::new() } else { format!("{mag} ") };
            match (i, *c < 0) {
                (0, false) => {}
                (0, true) => s.push('-'),
                (_, false) => s.push_str(" + "),
                (_, true) => s.push_str(" - "),
            }
            s.push_str(&format!("{coef}{}", mono(e)));
        }
        s.push_str(" = 0");
        s
    }

    /// Total weight of every term; a relation is homogeneous by construction.
    pub fn weight(&self) -> Option<u32> {
        let w: Vec<u32> = self
            .terms
            .iter()
            .map(|(_, e)| e.iter().zip(PHI_DEGREES).map(|(p, d)| p * d).sum())
            .collect();
        w.windows(2).all(|x| x[0] == x[1]).then(|| w[0])
    }

    /// The relation at residues of the seven invariants.
    pub fn evaluate_mod_p(&self, field: &PrimeField, values: &[u64]) -> u64 {
        let p = field.modulus();
        let mut acc = 0u64;
        for (c, e) in &self.terms {
            let mut t = field.reduce_rational(&int(*c)).expect("integer");
            for (v, k) in values.iter().zip(e) {
                t = field.mul(t, field.pow(*v % p, *k as u64));
            }
            acc = field.add(acc, t);
        }
        acc
    }

    /// Evaluates the relation on values of the seven invariants.
    pub fn evaluate<C: Ring>(&self, values: &[C; 7]) -> C {
        let mut acc = C::zero();
        for (c, e) in &self.terms {
            let mut t = C::from_int(*c);
            for (v, p) in values.iter().zip(e) {
                t = t.times(&v.pow(*p));
            }
            acc.plus_assign(&t);
        }
        acc
    }
}

/// Variables of the reduction ring: u = η⁸, Δ, E₄, E₆.
pub const U: usize = 0;
pub const DELTA: usize = 1;
pub const E4: usize = 2;
pub const E6: usize = 3;

/// Exponents of (u, Δ, E₄, E₆) in the modular form identified with Φ_d.
pub fn identification(degree: u32) -> [u32; 4] {
    match degree {
        12 => [0, 1, 0, 0],
        18 => [0, 1, 0, 1],
        20 => [1, 1, 1, 0],
        30 => [0, 2, 0, 1],
        32 => [1, 2, 1, 0],
        42 => [0, 3, 0, 1],
        44 => [1, 3, 1, 0],
        d => panic!("no invariant of degree {d}"),
    }
}

type Quad = MultiPoly<Rational>;

fn mono(e: [u32; 4]) -> Monomial {
    Monomial::new(&e).expect("small exponents")
}

/// Rewrites with u³ → Δ and E₆² → E₄³ − 1728Δ until neither applies.
pub fn reduce(p: &Quad) -> Quad {
    let mut cur = p.clone();
    loop {
        let mut changed = false;
        let mut next = Quad::zero(4);
        for (m, c) in cur.terms() {
            let mut e = m.exponents(4);
            let replacement = if e[U] >= 3 {
                e[U] -= 3;
                e[DELTA] += 1;
                Quad::from_terms(4, vec![(mono([e[0], e[1], e[2], e[3]]), c.clone())])
            } else if e[E6] >= 2 {
                e[E6] -= 2;
                let mut a = e.clone();
                a[E4] += 3;
                let mut b = e.clone();
                b[DELTA] += 1;
                Quad::from_terms(
                    4,
                    vec![
                        (mono([a[0], a[1], a[2], a[3]]), c.clone()),
                        (mono([b[0], b[1], b[2], b[3]]), c.times(&int(-1728))),
                    ],
                )
            } else {
                Quad::from_terms(4, vec![(*m, c.clone())])
            };
            if replacement.terms().len() != 1 || replacement.terms()[0].0 != *m {
                changed = true;
            }
            next = next.try_add(&replacement).expect("four variables");
        }
        cur = next;
        if !changed {
            return cur;
        }
    }
}

/// The relation with each Φ replaced by its identified modular form.
pub fn substitute(rel: &Relation) -> Quad {
    let mut acc = Quad::zero(4);
    for (c, e) in &rel.terms {
        let mut x = [0u32; 4];
        for (d, p) in PHI_DEGREES.iter().zip(e) {
            let id = identification(*d);
            for k in 0..4 {
                x[k] += id[k] * p;
            }
        }
        acc = acc
            .try_add(&Quad::from_terms(4, vec![(mono(x), int(*c))]))
            .expect("four variables");
    }
    acc
}
