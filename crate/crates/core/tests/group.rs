use psl13::exact::{CyclotomicNumber, Ring};
use psl13::group::*;

fn minus_i() -> CycloMatrix {
    minus_identity(6)
}

#[test]
fn s_and_t_relations_hold_up_to_sign() {
    let (s, t) = (gen_s(), gen_t());
    assert_eq!(s.pow(2), minus_i());
    assert!(t.pow(13).is_identity());
    assert_eq!(s.mul(&t).pow(3), minus_i());
    assert_eq!(s.transpose(), s);
}

#[test]
fn h_word_matches_signed_permutation() {
    let h = build_h();
    let hd = h_display();
    let lam = h.projective_scalar(&hd).expect("proportional");
    assert!(lam == CyclotomicNumber::from_int(1) || lam == CyclotomicNumber::from_int(-1));
    assert!(hd.pow(6).is_identity() || hd.pow(6) == minus_i());
    let t = gen_t();
    let conj = hd.inverse().unwrap().mul(&t).mul(&hd);
    assert!(conj.projective_scalar(&t.pow(4)).is_some());
}

#[test]
fn group_orders() {
    let start = std::time::Instant::now();
    let g = closure(&[gen_s(), gen_t()], DEFAULT_BOUND).unwrap();
    assert_eq!(g.order(), 1092);
    let h = closure(&[h_display(), gen_t()], DEFAULT_BOUND).unwrap();
    assert_eq!(h.order(), 78);
    eprintln!("closures took {:?}", start.elapsed());
    assert!(g.contains(&gen_s().negate()));
}

#[test]
fn cache_round_trip() {
    let gens = [h_display(), gen_t()];
    let g = closure(&gens, DEFAULT_BOUND).unwrap();
    let text = write_group(&g);
    let dump = parse_group(&text).unwrap();
    assert_eq!(dump.elements, g.elements);
    assert_eq!(dump.key, cache_key(&gens, ClosureMode::Projective));
    let dir = std::env::temp_dir().join(format!("psl13-cache-test-{}", std::process::id()));
    let path = dir.join("h.txt");
    let (_, st) = load_or_build(&path, &gens, ClosureMode::Projective, false, || Ok(g.clone())).unwrap();
    assert_eq!(st, CacheStatus::Built);
    let (g2, st) = load_or_build(&path, &gens, ClosureMode::Projective, false, || unreachable!()).unwrap();
    assert_eq!(st, CacheStatus::Hit);
    assert_eq!(g2.order(), 78);
    // different generators invalidate
    let (_, st) = load_or_build(&path, &[gen_t()], ClosureMode::Projective, false, || {
        closure(&[gen_t()], 100)
    })
    .unwrap();
    assert_eq!(st, CacheStatus::Built);
    let _ = std::fs::remove_dir_all(dir);
}
