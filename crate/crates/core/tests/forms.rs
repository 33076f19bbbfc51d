use std::time::Instant;

use num_complex::Complex64;
use psl13::exact::{embed_c64, rat, CyclotomicNumber, Ring};
use psl13::forms::*;
use psl13::group::{gen_s, gen_t, CycloMatrix};
use psl13::polynomial::{MultiPoly, PrimeField};

fn timed<T>(name: &str, f: impl FnOnce() -> T) -> T {
    let t = Instant::now();
    let r = f();
    eprintln!("{name}: {:?}", t.elapsed());
    r
}

#[test]
fn catalog_shapes() {
    let fs = timed("build", FormSet::standard);
    assert_eq!(fs.a.degrees().unwrap(), vec![2; 7]);
    assert_eq!(fs.d.degrees().unwrap(), vec![3; 14]);
    assert_eq!(fs.g.degrees().unwrap(), vec![6; 13]);
    assert_eq!(fs.phi.degrees().unwrap(), vec![2; 14]);
    assert_eq!(fs.w.degrees().unwrap(), vec![4; 14]);
    assert_eq!(fs.delta.degrees().unwrap(), vec![6; 14]);
    // G0 = z1²z2²z3² + z4²z5²z6²
    let g0 = fs.g.get(0).unwrap();
    assert_eq!(g0.len(), 2);
    assert_eq!(g0.coeff_of(&[2, 2, 2, 0, 0, 0]), CyclotomicNumber::from_int(1));
    // w_inf = 13·A0²
    let a0 = fs.a.get(0).unwrap();
    assert_eq!(*fs.w.get(INF).unwrap(), a0.try_mul(a0).unwrap().scale(&CyclotomicNumber::from_int(13)));
    assert_eq!(timed("rank", || d_rank(&fs)), 14);
}

#[test]
fn phi_zero_is_sum_of_quadratics() {
    let fs = FormSet::standard();
    let mut sum = MultiPoly::zero(6);
    for (_, f) in &fs.a.forms {
        sum = sum.try_add(f).unwrap();
    }
    assert_eq!(*fs.phi.get(0).unwrap(), sum);
}

#[test]
fn transformation_laws() {
    let fs = FormSet::standard();
    let a = timed("a", || verify_a_transform(&fs));
    assert!(a.passed, "{}", a.detail);
    let p = timed("phi dual", || verify_phi_dual(&fs));
    assert!(p.passed, "{}", p.detail);
    let d = timed("delta dual", || verify_delta_dual(&fs));
    assert!(d.passed, "{}", d.detail);
    let g = timed("g", || verify_g_transform(&fs));
    assert!(g.passed, "{}", g.detail);
    let h = timed("subgroup", || verify_subgroup_invariance(&fs));
    assert!(h.passed, "{}", h.detail);
    let s = timed("delta sum", || verify_delta_sum(&fs));
    assert!(s.passed, "{}", s.detail);
    assert!(!w_sum(&fs).is_zero());
}

#[test]
fn r_constants_and_cubic_laws() {
    let fs = FormSet::standard();
    let r = timed("derive r", || derive_r_constants(&fs)).unwrap();
    let c = check_r_constants(&r);
    assert!(c.passed, "{}", c.detail);
    // r2 embeds near i·√((13−3√13)/2)
    let s = 13f64.sqrt();
    let expect = Complex64::new(0.0, ((13.0 - 3.0 * s) / 2.0).sqrt());
    assert!((embed_c64(r.get(2)) - expect).norm() < 1e-12);
    let d = timed("d law", || verify_d_transform(&fs, &r));
    assert!(d.passed, "{}", d.detail);
}

#[test]
fn permutation_actions() {
    let fs = FormSet::standard();
    let id = timed("id", || permutation_action(&fs, &CycloMatrix::identity(6))).unwrap();
    assert!(id.is_identity());
    let t = timed("T", || permutation_action(&fs, &gen_t())).unwrap();
    assert!(t.delta.contains(&(INF, INF)));
    for nu in 0..13 {
        assert!(t.delta.contains(&(nu, (nu + 1) % 13)));
    }
    let s = timed("S", || permutation_action(&fs, &gen_s())).unwrap();
    assert!(s.delta_is_involution());
    assert!(!s.is_identity());
}

#[test]
fn corrupted_quadratic_fails_everywhere() {
    let fs = FormSet::build(FormTables::standard().flip_a_sign(3, 0));
    let out = verify_a_transform(&fs);
    assert!(!out.passed);
    assert!(out.detail.contains("[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]"), "{}", out.detail);
}

#[test]
fn phi12_expansion_agrees_with_direct_power_sum() {
    let fs = FormSet::standard();
    let inv = invariant(12).unwrap();
    let phi12 = timed("phi12", || inv.expand(&fs)).unwrap();
    assert_eq!(phi12.homogeneous_degree(), Some(12));
    let field = PrimeField::default_field();
    for pt in field.random_points(6, 3, 7) {
        let a = phi12.eval_mod_p(&pt).unwrap();
        // direct oracle: Σ δ² evaluated term by term, divided by −13·52
        let mut sum = 0;
        for (_, d) in &fs.delta.forms {
            let v = d.eval_mod_p(&pt).unwrap();
            sum = field.add(sum, field.mul(v, v));
        }
        let b = field.mul(sum, field.reduce_rational(&rat(-1, 676)).unwrap());
        assert_eq!(a, b);
        assert_eq!(inv.eval_mod_p(&fs, &field, &pt.values).unwrap(), b);
    }
    assert!(matches!(invariant(44).unwrap().expand(&fs), Err(FormError::TooLarge(44))));
}

#[test]
fn newton_identities_on_sextic_roots() {
    let fs = FormSet::standard();
    let field = PrimeField::default_field();
    for pt in field.random_points(6, 2, 11) {
        let vals = root_values_mod_p(&fs, RootFamily::Delta, &field, &pt.values).unwrap();
        assert!(newton_holds_mod_p(&field, &vals, 4));
    }
}

#[test]
fn icosahedral_forms() {
    let f = icosa_f();
    let h = icosa_hessian(&f);
    assert_eq!(h, expected_hessian());
    // the −1/20 covariant is the negative of the closed form
    let t = icosa_jacobian_cov(&f, &h);
    assert_eq!(t, expected_jacobian_cov().scale(&rat(-1, 1)));
    assert_eq!(t.coeff_of(&[25, 5]), rat(-522, 1));
    assert!(icosa_relation(&f, &h, &t).is_zero());
    assert!(icosa_relation(&f, &h, &expected_jacobian_cov()).is_zero());
}

#[test]
fn catalog_text_round_trip() {
    let fs = FormSet::standard();
    for fam in [Family::A, Family::D, Family::Delta] {
        let cat = fs.catalog(fam).unwrap();
        let text = export_catalog(cat);
        let parsed = parse_catalog(&text).unwrap().into_catalog();
        assert_eq!(&parsed, cat);
    }
    assert!(parse_catalog("# psl13 catalog v1\nfamily D\nnvars 6\nform 0\n1 1 ; 1|0:1\nend\n").is_err());
}
