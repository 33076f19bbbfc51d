use num_complex::Complex64;

use crate::exact::{embed_c64, periods, rat, sqrt13, CyclotomicNumber, Ring};
use crate::group::{h_display, CycloMatrix};
use crate::polynomial::{express_in_span, rank};

use super::catalog::{
    combine, delta_by_twist, delta_inf_composed_factored, delta_infinity, phi_by_twist,
    phi_inf_composed_factored, Form, FormSet,
};
use super::tables::{D0_LAW_PATTERN, DINF_LAW_PATTERN, INF};
use super::FormError;

/// Pass/fail of one law together with a one-line explanation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub passed: bool,
    pub detail: String,
}

impl LawOutcome {
    fn from_failures(failing: &[usize], ok: String, what: &str) -> Self {
        if failing.is_empty() {
            LawOutcome { passed: true, detail: ok }
        } else {
            LawOutcome {
                passed: false,
                detail: format!("{what} fails at nu = {failing:?}"),
            }
        }
    }
}

fn zeta(k: i64) -> CyclotomicNumber {
    CyclotomicNumber::zeta(13, k).expect("order 13")
}

fn compose(p: &Form, m: &CycloMatrix) -> Form {
    p.compose_linear(&m.rows()).expect("six variables")
}

/// √13·(A₀∘S·T^ν) against the ζ-twisted sum of the quadratics, every ν.
pub fn verify_a_transform(fs: &FormSet) -> LawOutcome {
    let a0 = fs.a.get(0).expect("A0");
    let r13 = sqrt13();
    let failing: Vec<usize> = (0..13)
        .filter(|&nu| compose(a0, &fs.st[nu]).scale(&r13) != phi_by_twist(&fs.a, nu))
        .collect();
    LawOutcome::from_failures(&failing, "13 of 13 nu agree".into(), "quadratic law")
}

/// φ_∞∘S·T^ν equals the catalog φ_ν, every ν.
pub fn verify_phi_dual(fs: &FormSet) -> LawOutcome {
    let phi_inf = fs.phi.get(INF).expect("phi_inf");
    let failing: Vec<usize> = (0..13)
        .filter(|&nu| compose(phi_inf, &fs.st[nu]) != *fs.phi.get(nu).expect("phi"))
        .collect();
    LawOutcome::from_failures(&failing, "composition and twist agree for 13 nu".into(), "phi dual")
}

/// δ_∞ from its definition, composed with S·T^ν, equals the twist
/// construction from the sextics.
pub fn verify_delta_dual(fs: &FormSet) -> LawOutcome {
    let dinf = delta_infinity();
    if *fs.delta.get(INF).expect("delta_inf") != dinf {
        return LawOutcome {
            passed: false,
            detail: "169·G0 differs from the defining sextic".into(),
        };
    }
    let failing: Vec<usize> = (0..13)
        .filter(|&nu| compose(&dinf, &fs.st[nu]) != delta_by_twist(&fs.g, nu))
        .collect();
    LawOutcome::from_failures(&failing, "composition and twist agree for 13 nu".into(), "delta dual")
}

/// 169·(G₀∘S·T^ν) = δ_∞∘S·T^ν = −13G₀ + Σⱼ ζ^(jν)Gⱼ, every ν.
pub fn verify_g_transform(fs: &FormSet) -> LawOutcome {
    let g0 = fs.g.get(0).expect("G0");
    let dinf = delta_infinity();
    let k169 = CyclotomicNumber::from_int(169);
    let failing: Vec<usize> = (0..13)
        .filter(|&nu| {
            let lhs = compose(g0, &fs.st[nu]).scale(&k169);
            lhs != compose(&dinf, &fs.st[nu]) || lhs != delta_by_twist(&fs.g, nu)
        })
        .collect();
    LawOutcome::from_failures(&failing, "both equalities hold for 13 nu".into(), "sextic law")
}

/// Invariance of G₀ and φ_∞² under H and T.
pub fn verify_subgroup_invariance(fs: &FormSet) -> LawOutcome {
    let g0 = fs.g.get(0).expect("G0");
    let w_inf = fs.w.get(INF).expect("w_inf");
    let h = h_display();
    let mut bad = Vec::new();
    for (name, m) in [("H", &h), ("T", &fs.t)] {
        if compose(g0, m) != *g0 {
            bad.push(format!("G0∘{name}"));
        }
        if compose(w_inf, m) != *w_inf {
            bad.push(format!("phi_inf^2∘{name}"));
        }
    }
    if bad.is_empty() {
        LawOutcome {
            passed: true,
            detail: "G0 and phi_inf^2 fixed by H and T".into(),
        }
    } else {
        LawOutcome {
            passed: false,
            detail: format!("not invariant: {}", bad.join(", ")),
        }
    }
}

/// Σ of all fourteen δ's.
pub fn delta_sum(fs: &FormSet) -> Form {
    let parts: Vec<(CyclotomicNumber, &Form)> = fs
        .delta
        .forms
        .iter()
        .map(|(_, f)| (CyclotomicNumber::from_int(1), f))
        .collect();
    combine(&parts)
}

pub fn verify_delta_sum(fs: &FormSet) -> LawOutcome {
    let s = delta_sum(fs);
    if s.is_zero() {
        LawOutcome {
            passed: true,
            detail: "sum of the 14 sextic roots is 0".into(),
        }
    } else {
        LawOutcome {
            passed: false,
            detail: format!("sum has {} nonzero terms", s.len()),
        }
    }
}

/// Σ of all fourteen w's; not expected to vanish.
pub fn w_sum(fs: &FormSet) -> Form {
    let parts: Vec<(CyclotomicNumber, &Form)> = fs
        .w
        .forms
        .iter()
        .map(|(_, f)| (CyclotomicNumber::from_int(1), f))
        .collect();
    combine(&parts)
}

/// The six constants of the cubic laws.
#[derive(Clone, Debug, PartialEq)]
pub struct RConstants {
    pub r0: CyclotomicNumber,
    pub r_inf: CyclotomicNumber,
    /// r₁..r₄ at positions 0..3.
    pub r: [CyclotomicNumber; 4],
}

impl RConstants {
    /// r_k for k in 1..=4.
    pub fn get(&self, k: usize) -> &CyclotomicNumber {
        &self.r[k - 1]
    }
}

/// −13√13 as a cyclotomic number.
fn minus_13_sqrt13() -> CyclotomicNumber {
    sqrt13().scale(&rat(-13, 1))
}

/// Solves −13√13·(D₀∘S) = Σ cⱼ Dⱼ over the fourteen cubics and reads the
/// constants off the solution.
pub fn derive_r_constants(fs: &FormSet) -> Result<RConstants, FormError> {
    let basis = fs.d.polys();
    if rank(&basis) != 14 {
        return Err(FormError::Law("the 14 cubics are linearly dependent".into()));
    }
    let d0 = fs.d.get(0).expect("D0");
    let target = compose(d0, &fs.s).scale(&minus_13_sqrt13());
    let c = express_in_span(&target, &basis)?;
    Ok(RConstants {
        r0: c[0].clone(),
        r_inf: c[INF].clone(),
        r: [c[1].clone(), c[2].clone(), c[4].clone(), c[7].clone()],
    })
}

/// Closed forms the constants must satisfy: period expressions for r₀ and
/// r_∞, and the squares of r₁..r₄.
pub fn check_r_constants(r: &RConstants) -> LawOutcome {
    let th = periods();
    let t = |i: usize| th.get(i).clone();
    let two = CyclotomicNumber::from_int(2);
    let three = CyclotomicNumber::from_int(3);
    let r0 = two.times(&t(1).minus(&t(3))).minus(&three.times(&t(2).minus(&t(4))));
    let r_inf = two.times(&t(4).minus(&t(2))).minus(&three.times(&t(1).minus(&t(3))));
    let s = sqrt13();
    let q = |a: i64, b: i64, d: i64| {
        CyclotomicNumber::from_int(a).plus(&s.scale(&rat(b, 1))).scale(&rat(1, d))
    };
    let squares = [q(-13, -2, 1), q(-13, 3, 2), q(-13, 2, 1), q(-13, -3, 2)];
    let mut bad = Vec::new();
    if r.r0 != r0 {
        bad.push("r0 period form".to_string());
    }
    if r.r_inf != r_inf {
        bad.push("r_inf period form".to_string());
    }
    let s13 = 13f64.sqrt();
    let radicands = [-13.0 - 2.0 * s13, (-13.0 + 3.0 * s13) / 2.0, -13.0 + 2.0 * s13, (-13.0 - 3.0 * s13) / 2.0];
    let mut worst = 0f64;
    for k in 0..4 {
        if r.r[k].times(&r.r[k]) != squares[k] {
            bad.push(format!("r{}^2", k + 1));
        }
        let principal = Complex64::new(radicands[k], 0.0).sqrt();
        let err = (embed_c64(&r.r[k]) - principal).norm();
        worst = worst.max(err);
        if err >= 1e-12 {
            bad.push(format!("r{} branch (off by {err:.3e})", k + 1));
        }
    }
    if bad.is_empty() {
        LawOutcome {
            passed: true,
            detail: format!("period forms and squares exact; branch error {worst:.1e}"),
        }
    } else {
        LawOutcome {
            passed: false,
            detail: format!("mismatch: {}", bad.join(", ")),
        }
    }
}

/// Right-hand side of the D₀ law at ν.
pub fn d0_law_rhs(fs: &FormSet, r: &RConstants, nu: usize) -> Form {
    let mut parts = vec![(r.r0.clone(), fs.d.get(0).expect("D0"))];
    for j in 1..13 {
        let c = r.get(D0_LAW_PATTERN[j - 1]).times(&zeta((j * nu) as i64));
        parts.push((c, fs.d.get(j).expect("cubic")));
    }
    parts.push((r.r_inf.clone(), fs.d.get(INF).expect("D_inf")));
    combine(&parts)
}

/// Right-hand side of the D_∞ law at ν.
pub fn dinf_law_rhs(fs: &FormSet, r: &RConstants, nu: usize) -> Form {
    let mut parts = vec![(r.r_inf.clone(), fs.d.get(0).expect("D0"))];
    for j in 1..13 {
        let (sign, k) = DINF_LAW_PATTERN[j - 1];
        let c = r.get(k).times(&zeta((j * nu) as i64)).scale(&rat(sign, 1));
        parts.push((c, fs.d.get(j).expect("cubic")));
    }
    parts.push((r.r0.negate(), fs.d.get(INF).expect("D_inf")));
    combine(&parts)
}

/// Both cubic laws for every ν.
pub fn verify_d_transform(fs: &FormSet, r: &RConstants) -> LawOutcome {
    let k = minus_13_sqrt13();
    let d0 = fs.d.get(0).expect("D0");
    let dinf = fs.d.get(INF).expect("D_inf");
    let mut failing = Vec::new();
    for nu in 0..13 {
        let ok0 = compose(d0, &fs.st[nu]).scale(&k) == d0_law_rhs(fs, r, nu);
        let ok_inf = compose(dinf, &fs.st[nu]).scale(&k) == dinf_law_rhs(fs, r, nu);
        if !(ok0 && ok_inf) {
            failing.push(nu);
        }
    }
    LawOutcome::from_failures(&failing, "both cubic laws hold for 13 nu".into(), "cubic law")
}

/// Induced action of a matrix on the fourteen roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPermutation {
    /// (root, image root) with δ_root∘g = δ_image.
    pub delta: Vec<(usize, usize)>,
    /// (root, image root, sign) with φ_root∘g = sign·φ_image.
    pub phi: Vec<(usize, usize, i8)>,
}

impl RootPermutation {
    pub fn is_identity(&self) -> bool {
        self.delta.iter().all(|(a, b)| a == b) && self.phi.iter().all(|(a, b, s)| a == b && *s == 1)
    }

    /// Whether applying the δ-permutation twice gives the identity.
    pub fn delta_is_involution(&self) -> bool {
        let image = |x: usize| self.delta.iter().find(|(a, _)| *a == x).map(|p| p.1);
        self.delta.iter().all(|&(a, b)| image(b) == Some(a))
    }
}

fn root_order() -> Vec<usize> {
    std::iter::once(INF).chain(0..13).collect()
}

/// Composes every δ_ν and φ_ν with `g` through their linear factors and
/// locates the results in the catalogs.
pub fn permutation_action(fs: &FormSet, g: &CycloMatrix) -> Result<RootPermutation, FormError> {
    let mut delta = Vec::with_capacity(14);
    let mut phi = Vec::with_capacity(14);
    let minus_one = CyclotomicNumber::from_int(-1);
    for nu in root_order() {
        let m = fs.root_matrix(nu).mul(g);
        let dg = delta_inf_composed_factored(&m);
        let mu = fs
            .delta
            .forms
            .iter()
            .find(|(_, f)| *f == dg)
            .map(|(i, _)| *i)
            .ok_or_else(|| FormError::Law(format!("delta_{} composed with g is not a root", label(nu))))?;
        delta.push((nu, mu));
        let pg = phi_inf_composed_factored(&m);
        let neg = pg.scale(&minus_one);
        let hit = fs.phi.forms.iter().find_map(|(i, f)| {
            if *f == pg {
                Some((*i, 1i8))
            } else if *f == neg {
                Some((*i, -1i8))
            } else {
                None
            }
        });
        let (mu, sign) = hit
            .ok_or_else(|| FormError::Law(format!("phi_{} composed with g is not ± a root", label(nu))))?;
        phi.push((nu, mu, sign));
    }
    let mut all = root_order();
    all.sort_unstable();
    let is_perm = |mut v: Vec<usize>| {
        v.sort_unstable();
        v == all
    };
    if !is_perm(delta.iter().map(|p| p.1).collect()) || !is_perm(phi.iter().map(|p| p.1).collect()) {
        return Err(FormError::Law("induced map on roots is not a bijection".into()));
    }
    Ok(RootPermutation { delta, phi })
}

fn label(nu: usize) -> String {
    super::catalog::index_label(nu)
}

/// The cubics are linearly independent.
pub fn d_rank(fs: &FormSet) -> usize {
    rank(&fs.d.polys())
}
