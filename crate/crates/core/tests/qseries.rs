use num_complex::Complex64;
use psl13::exact::{int, rat, Rational};
use psl13::forms::{icosa_f, icosa_hessian, FormSet, RootFamily, INVARIANTS};
use psl13::group::{gen_s, T_EXPONENTS};
use psl13::qseries::*;

/// Π(1 − qⁿ) through q^n from Euler's pentagonal theorem.
fn pentagonal(n: usize) -> Vec<i128> {
    let mut c = vec![0i128; n + 1];
    for k in 0i64.. {
        let mut hit = false;
        for m in [k, -k] {
            let p = (m * (3 * m - 1) / 2) as usize;
            if p <= n {
                hit = true;
                c[p] = if k % 2 == 0 { 1 } else { -1 };
            }
        }
        if !hit {
            break;
        }
    }
    c
}

fn dense_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let n = a.len();
    let mut out = vec![0i128; n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

#[test]
fn eta_24th_power_matches_pentagonal_oracle() {
    let n = 12;
    let p = pentagonal(n);
    let mut d = vec![0i128; n + 1];
    d[0] = 1;
    for _ in 0..24 {
        d = dense_mul(&d, &p);
    }
    // Δ = q·Π(1−qⁿ)²⁴
    let delta = delta_series(n as i64);
    for k in 1..=n as i64 {
        assert_eq!(delta.coeff(k), int(d[k as usize - 1] as i64), "q^{k}");
    }
    assert_eq!(delta.coeff(4), int(-1472));
    let eta = eta_series(5);
    assert_eq!(eta.leading().unwrap().0, rat(1, 24));
    assert!(is_integral(&eta));
}

#[test]
fn truncation_is_coherent() {
    let short = eta_series(6);
    let long = eta_series(11);
    assert!(short.known_through() >= 6);
    assert!(agree_through(&short, &long, 6));
    let a = theta13_series(2, 4).unwrap();
    let b = theta13_series(2, 9).unwrap();
    assert!(agree_through(&a.pow(3), &b.pow(3), 4));
    // the tracked bound is honest: a product known through q^4 matches a
    // longer recomputation there and claims nothing beyond
    let p = a.pow(3);
    assert!(p.known_through() >= 4);
    let one = PuiseuxSeries::<Rational>::one(24);
    assert_eq!(short.try_mul(&one).unwrap(), short);
    let q24 = PuiseuxSeries::monomial(24, 1, int(1), EXACT).pow(24).reduce_grid();
    assert_eq!(q24, PuiseuxSeries::monomial(1, 1, int(1), EXACT));
}

#[test]
fn grid_mismatch_is_an_error() {
    let a = eta_series(3);
    let b = theta13_series(1, 3).unwrap();
    assert!(matches!(a.try_add(&b), Err(SeriesError::GridMismatch(24, 104))));
    assert!(a.add_aligned(&b).denom() == 312);
}

#[test]
fn eisenstein_relation_holds() {
    let n = 12;
    let e4 = eisenstein_series(4, n).unwrap();
    let e6 = eisenstein_series(6, n).unwrap();
    assert_eq!(e4.coeff(2), int(2160));
    assert_eq!(e6.coeff(2), int(-16632));
    let lhs = e4.pow(3).try_sub(&e6.pow(2)).unwrap();
    let rhs = delta_series(n).scale(&int(1728));
    assert!(agree_through(&lhs, &rhs, n));
    assert!(eisenstein_series(8, n).is_err());
}

#[test]
fn theta_leading_terms() {
    let lead = |i| theta13_series(i, 2).unwrap().leading().unwrap();
    assert_eq!(lead(6), (rat(1, 104), int(1)));
    assert_eq!(lead(4), (rat(9, 104), int(-1)));
    assert_eq!(lead(1), (rat(121, 104), int(1)));
    assert_eq!(theta5_series('a', 2).unwrap().leading().unwrap().0, rat(9, 40));
    assert_eq!(theta5_series('b', 2).unwrap().leading().unwrap().0, rat(1, 40));
}

#[test]
fn power_sum_fast_path_matches_graded_products() {
    let fs = FormSet::standard();
    let a = theta13_vector(4);
    let mut cache = MonomialCache::new(&a);
    for (family, m) in [(RootFamily::Delta, 3), (RootFamily::W, 4)] {
        let (parts, _) = root_parts(&fs, family, &mut cache).unwrap();
        let (fast, how) = twisted_power_sum(&parts, m).unwrap();
        assert_eq!(how, Extraction::ExponentClass);
        let slow = graded_power_sum(&parts, m).unwrap();
        assert!(agree_through(&fast, &slow, 3));
    }
}

#[test]
fn invariants_at_theta_point_match_modular_forms() {
    let fs = FormSet::standard();
    let n = 6;
    let tp = ThetaPoint::new(n);
    let mut cache = MonomialCache::new(&tp.a);
    for inv in INVARIANTS.iter() {
        let r = tp.invariant(&fs, inv, &mut cache).unwrap();
        let target = invariant_target(inv.degree, n).unwrap();
        assert!(agree_through(&r.normalized_x, &target, n), "Phi{}", inv.degree);
        let level = match inv.family {
            RootFamily::Delta => Level::X,
            RootFamily::W => Level::Y,
        };
        assert_eq!(r.raw_at(level).leading().unwrap().1, int(inv.divisor), "Phi{}", inv.degree);
    }
}

#[test]
fn order_five_point() {
    let n = 8;
    let v = theta5_vector(n + 1);
    let f = icosa_f();
    let fx = eval_rational_at_series(&f, &v, 12).unwrap();
    assert!(agree_through(&fx, &delta_series(n).negate(), n));
    let hx = eval_rational_at_series(&icosa_hessian(&f), &v, 20).unwrap();
    let target = eta_series(n)
        .pow(8)
        .mul_aligned(&delta_series(n).try_mul(&eisenstein_series(4, n).unwrap()).unwrap())
        .negate();
    assert!(agree_through(&hx, &target, n));
}

#[test]
fn translation_law_is_exact() {
    for i in 1..=6 {
        let a = to_cyclo104(&theta13_series(i, 6).unwrap());
        let shifted = shift_z_plus_1(&a).unwrap();
        assert_eq!(shifted, a.scale(&expected_shift_factor(T_EXPONENTS[i - 1])), "a{i}");
        let mut s = a.clone();
        for _ in 0..104 {
            s = shift_z_plus_1(&s).unwrap();
        }
        assert_eq!(s, a);
    }
    let bad = to_cyclo104(&eta_series(2));
    assert!(matches!(shift_z_plus_1(&bad), Err(SeriesError::GridNotDividing(24))));
}

#[test]
fn inversion_law_numerically() {
    let s = gen_s();
    for z in [Complex64::new(0.0, 1.0), Complex64::new(0.3, 0.7), Complex64::new(0.5, 2.0)] {
        assert!(inversion_defect(&s, z).unwrap() < 1e-9, "{z}");
    }
    // Gaussian decay: at z = 2i six terms each way are plenty
    let z = Complex64::new(0.0, 2.0);
    let a = numeric_theta_eval(6, z, 6).unwrap();
    let b = numeric_theta_eval(6, z, 12).unwrap();
    assert!(a.distance(&b) < 1e-15);
    assert!(matches!(numeric_theta_eval(1, Complex64::new(0.0, 0.01), 1), Err(SeriesError::TailBound(_))));
}

#[test]
fn dump_round_trip() {
    let d = delta_series(4);
    let text = dump_series(&d);
    assert_eq!(text.lines().next(), Some("1/1\t1"));
    assert_eq!(text.lines().nth(3), Some("4/1\t-1472"));
    let back = parse_dump(&text).unwrap();
    assert!(agree_through(&back, &d, 4));
    let eta = eta_series(3);
    assert!(agree_through(&parse_dump(&dump_series(&eta)).unwrap(), &eta, 3));
    assert!(parse_dump("2/4\t1\n").is_err());
    assert!(parse_dump("1/2\t1\n1/3\t1\n").is_err());
    assert!(parse_dump("1/0\t1\n").is_err());
}
