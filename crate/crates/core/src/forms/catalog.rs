use std::fmt;

use crate::exact::{sqrt13, CyclotomicNumber, Ring};
use crate::group::{gen_s, gen_t, CycloMatrix};
use crate::polynomial::MultiPoly;

use super::icosa::{expected_hessian, expected_jacobian_cov, icosa_f};
use super::invariants::invariant;
use super::tables::{FormTables, Term, INF, PHI_TWIST};
use super::FormError;

pub type Form = MultiPoly<CyclotomicNumber>;

pub const NVARS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    G,
    Phi,
    W,
    Delta,
    CapitalPhi,
    Icosahedral,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::A,
        Family::D,
        Family::G,
        Family::Phi,
        Family::W,
        Family::Delta,
        Family::CapitalPhi,
        Family::Icosahedral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::D => "D",
            Family::G => "G",
            Family::Phi => "phi",
            Family::W => "w",
            Family::Delta => "delta",
            Family::CapitalPhi => "Phi",
            Family::Icosahedral => "icosahedral",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Label for a root index, with 13 printed as "inf".
pub fn index_label(i: usize) -> String {
    if i == INF {
        "inf".to_string()
    } else {
        i.to_string()
    }
}

pub fn parse_index_label(s: &str) -> Option<usize> {
    if s == "inf" {
        Some(INF)
    } else {
        s.parse().ok()
    }
}

/// An indexed family of forms in a common number of variables.
#[derive(Clone, Debug, PartialEq)]
pub struct FormCatalog {
    pub family: Family,
    pub nvars: usize,
    pub forms: Vec<(usize, Form)>,
}

impl FormCatalog {
    pub fn get(&self, index: usize) -> Option<&Form> {
        self.forms.iter().find(|(i, _)| *i == index).map(|(_, f)| f)
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn polys(&self) -> Vec<Form> {
        self.forms.iter().map(|(_, f)| f.clone()).collect()
    }

    /// Degrees of the members, or `None` if some member is not homogeneous.
    pub fn degrees(&self) -> Option<Vec<u32>> {
        self.forms.iter().map(|(_, f)| f.homogeneous_degree()).collect()
    }
}

fn zeta(k: i64) -> CyclotomicNumber {
    CyclotomicNumber::zeta(13, k).expect("order 13")
}

fn from_table(terms: &[Term]) -> Form {
    MultiPoly::from_exponents(
        NVARS,
        terms
            .iter()
            .map(|(c, e)| (e.to_vec(), CyclotomicNumber::from_int(*c)))
            .collect(),
    )
    .expect("six variables")
}

/// Σ cᵢ·pᵢ.
pub fn combine(parts: &[(CyclotomicNumber, &Form)]) -> Form {
    let mut acc = Form::zero(NVARS);
    for (c, p) in parts {
        if !c.is_zero() {
            acc = acc.try_add(&p.scale(c)).expect("same arity");
        }
    }
    acc
}

/// Product of the linear forms given by the selected rows of `m`.
pub fn linear_product(m: &CycloMatrix, rows: &[usize]) -> Form {
    rows.iter().fold(Form::one(NVARS), |acc, &r| {
        let l = Form::from_exponents(
            NVARS,
            (0..NVARS)
                .map(|j| {
                    let mut e = vec![0; NVARS];
                    e[j] = 1;
                    (e, m.get(r, j).clone())
                })
                .collect(),
        )
        .expect("six variables");
        acc.try_mul(&l).expect("same arity")
    })
}

/// Every catalog, built once from a set of tables, together with S, T and
/// the products S·T^ν.
#[derive(Clone, Debug)]
pub struct FormSet {
    pub tables: FormTables,
    pub s: CycloMatrix,
    pub t: CycloMatrix,
    pub st: Vec<CycloMatrix>,
    pub a: FormCatalog,
    pub d: FormCatalog,
    pub g: FormCatalog,
    pub phi: FormCatalog,
    pub w: FormCatalog,
    pub delta: FormCatalog,
}

impl FormSet {
    pub fn standard() -> Self {
        Self::build(FormTables::standard())
    }

    pub fn build(tables: FormTables) -> Self {
        let (s, t) = (gen_s(), gen_t());
        let mut st = Vec::with_capacity(13);
        let mut tp = CycloMatrix::identity(NVARS);
        for _ in 0..13 {
            st.push(s.mul(&tp));
            tp = tp.mul(&t);
        }
        let a = catalog_a(&tables);
        let d = catalog_d(&tables);
        let g = catalog_g(&tables, &d);
        let phi = catalog_phi(&a);
        let w = catalog_w(&phi);
        let delta = catalog_delta(&g);
        FormSet {
            tables,
            s,
            t,
            st,
            a,
            d,
            g,
            phi,
            w,
            delta,
        }
    }

    /// M with p_ν = p_∞∘M for the root ν: S·T^ν, or the identity at ∞.
    pub fn root_matrix(&self, nu: usize) -> CycloMatrix {
        if nu == INF {
            CycloMatrix::identity(NVARS)
        } else {
            self.st[nu].clone()
        }
    }

    pub fn catalog(&self, family: Family) -> Option<&FormCatalog> {
        match family {
            Family::A => Some(&self.a),
            Family::D => Some(&self.d),
            Family::G => Some(&self.g),
            Family::Phi => Some(&self.phi),
            Family::W => Some(&self.w),
            Family::Delta => Some(&self.delta),
            _ => None,
        }
    }

    /// The catalog printed for a family. The invariant family holds Φ₁₂
    /// alone, since larger degrees are never expanded; the icosahedral family
    /// is the binary forms f, H, T under indices 0, 1, 2.
    pub fn export_family(&self, family: Family) -> Result<FormCatalog, FormError> {
        if let Some(c) = self.catalog(family) {
            return Ok(c.clone());
        }
        Ok(match family {
            Family::CapitalPhi => {
                let phi12 = invariant(12).expect("degree 12").expand(self)?;
                FormCatalog {
                    family,
                    nvars: NVARS,
                    forms: vec![(12, phi12)],
                }
            }
            _ => FormCatalog {
                family,
                nvars: 2,
                forms: [icosa_f(), expected_hessian(), expected_jacobian_cov()]
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (i, p.to_cyclotomic()))
                    .collect(),
            },
        })
    }
}

pub fn catalog_a(tables: &FormTables) -> FormCatalog {
    FormCatalog {
        family: Family::A,
        nvars: NVARS,
        forms: tables.a.iter().enumerate().map(|(i, t)| (i, from_table(t))).collect(),
    }
}

pub fn catalog_d(tables: &FormTables) -> FormCatalog {
    FormCatalog {
        family: Family::D,
        nvars: NVARS,
        forms: tables.d.iter().enumerate().map(|(i, t)| (i, from_table(t))).collect(),
    }
}

/// Sextics as quadratic expressions in the cubics.
pub fn catalog_g(tables: &FormTables, d: &FormCatalog) -> FormCatalog {
    let forms = tables
        .g
        .iter()
        .enumerate()
        .map(|(k, prods)| {
            let mut acc = Form::zero(NVARS);
            for &(c, i, j) in prods {
                let (di, dj) = (d.get(i).expect("cubic"), d.get(j).expect("cubic"));
                let p = di.try_mul(dj).expect("same arity").scale(&CyclotomicNumber::from_int(c));
                acc = acc.try_add(&p).expect("same arity");
            }
            (k, acc)
        })
        .collect();
    FormCatalog {
        family: Family::G,
        nvars: NVARS,
        forms,
    }
}

/// φ_ν = Σⱼ ζ^(eⱼν) Aⱼ and φ_∞ = √13·A₀.
pub fn phi_by_twist(a: &FormCatalog, nu: usize) -> Form {
    if nu == INF {
        return a.get(0).expect("A0").scale(&sqrt13());
    }
    let parts: Vec<(CyclotomicNumber, &Form)> = PHI_TWIST
        .iter()
        .enumerate()
        .map(|(j, &e)| (zeta(e * nu as i64), a.get(j).expect("quadratic")))
        .collect();
    combine(&parts)
}

/// φ_∞ composed with S·T^ν.
pub fn phi_by_composition(a: &FormCatalog, st: &CycloMatrix) -> Result<Form, FormError> {
    let phi_inf = phi_by_twist(a, INF);
    Ok(phi_inf.compose_linear(&st.rows())?)
}

fn roots() -> impl Iterator<Item = usize> {
    std::iter::once(INF).chain(0..13)
}

pub fn catalog_phi(a: &FormCatalog) -> FormCatalog {
    FormCatalog {
        family: Family::Phi,
        nvars: NVARS,
        forms: roots().map(|nu| (nu, phi_by_twist(a, nu))).collect(),
    }
}

pub fn catalog_w(phi: &FormCatalog) -> FormCatalog {
    FormCatalog {
        family: Family::W,
        nvars: NVARS,
        forms: phi
            .forms
            .iter()
            .map(|(i, p)| (*i, p.try_mul(p).expect("same arity")))
            .collect(),
    }
}

/// δ_∞ = 169·G₀ and δ_ν = −13G₀ + Σⱼ ζ^(jν) Gⱼ.
pub fn delta_by_twist(g: &FormCatalog, nu: usize) -> Form {
    let g0 = g.get(0).expect("G0");
    if nu == INF {
        return g0.scale(&CyclotomicNumber::from_int(169));
    }
    let mut parts = vec![(CyclotomicNumber::from_int(-13), g0)];
    for j in 1..13 {
        parts.push((zeta((j * nu) as i64), g.get(j).expect("sextic")));
    }
    combine(&parts)
}

/// 169·(z₁²z₂²z₃² + z₄²z₅²z₆²), the root at infinity from its definition.
pub fn delta_infinity() -> Form {
    let c = CyclotomicNumber::from_int(169);
    Form::from_exponents(
        NVARS,
        vec![(vec![2, 2, 2, 0, 0, 0], c.clone()), (vec![0, 0, 0, 2, 2, 2], c)],
    )
    .expect("six variables")
}

/// δ_∞∘M through its factors: 169·((z₁z₂z₃)∘M)² + 169·((z₄z₅z₆)∘M)².
pub fn delta_inf_composed_factored(m: &CycloMatrix) -> Form {
    let d0 = linear_product(m, &[0, 1, 2]);
    let dinf = linear_product(m, &[3, 4, 5]);
    d0.try_mul(&d0)
        .and_then(|x| x.try_add(&dinf.try_mul(&dinf)?))
        .expect("same arity")
        .scale(&CyclotomicNumber::from_int(169))
}

/// φ_∞∘M through its factors: √13·Σᵢ (zᵢ∘M)(z_{i+3}∘M).
pub fn phi_inf_composed_factored(m: &CycloMatrix) -> Form {
    let mut acc = Form::zero(NVARS);
    for i in 0..3 {
        acc = acc.try_add(&linear_product(m, &[i, i + 3])).expect("same arity");
    }
    acc.scale(&sqrt13())
}

pub fn catalog_delta(g: &FormCatalog) -> FormCatalog {
    FormCatalog {
        family: Family::Delta,
        nvars: NVARS,
        forms: roots().map(|nu| (nu, delta_by_twist(g, nu))).collect(),
    }
}

