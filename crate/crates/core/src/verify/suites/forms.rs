use crate::forms::{
    check_r_constants, d_rank, derive_r_constants, elementary_mod_p, newton_holds_mod_p,
    root_values_mod_p, verify_a_transform, verify_d_transform, verify_delta_dual,
    verify_delta_sum, verify_g_transform, verify_phi_dual, verify_subgroup_invariance, w_sum,
    Family, LawOutcome, RootFamily, INVARIANTS,
};

use crate::verify::context::Context;
use crate::verify::report::{run_check, CheckResult, Outcome};

fn law(o: LawOutcome) -> Outcome {
    Outcome::new(o.passed, o.detail)
}

pub fn run(ctx: &Context) -> Vec<CheckResult> {
    let timing = ctx.config.timing;
    let fs = ctx.forms();
    let mut out = Vec::new();

    out.push(run_check("forms.catalog-shapes", timing, || {
        let expect = [
            (Family::A, 7, 2),
            (Family::D, 14, 3),
            (Family::G, 13, 6),
            (Family::Phi, 14, 2),
            (Family::W, 14, 4),
            (Family::Delta, 14, 6),
        ];
        let mut bad = Vec::new();
        for (fam, count, deg) in expect {
            let cat = fs.catalog(fam).expect("built family");
            let degs = cat.degrees();
            if cat.len() != count || degs.map_or(true, |d| d.iter().any(|&x| x != deg)) {
                bad.push(fam.name());
            }
        }
        let phi_degrees: Vec<u32> = INVARIANTS
            .iter()
            .map(|f| f.power * if f.family == RootFamily::Delta { 6 } else { 4 })
            .collect();
        let ok_phi = phi_degrees == INVARIANTS.iter().map(|f| f.degree).collect::<Vec<_>>();
        if !ok_phi {
            bad.push("Phi");
        }
        if bad.is_empty() {
            Outcome::new(true, format!("cardinalities and degrees as expected; Phi degrees {phi_degrees:?}"))
        } else {
            Outcome::new(false, format!("wrong shape: {}", bad.join(", ")))
        }
    }));
    out.push(run_check("forms.phi-dual", timing, || law(verify_phi_dual(fs))));
    out.push(run_check("forms.delta-dual", timing, || law(verify_delta_dual(fs))));
    out.push(run_check("forms.quadratic-law", timing, || law(verify_a_transform(fs))));
    out.push(run_check("forms.sextic-law", timing, || law(verify_g_transform(fs))));
    out.push(run_check("forms.delta-sum", timing, || law(verify_delta_sum(fs))));
    out.push(run_check("forms.subgroup-invariance", timing, || law(verify_subgroup_invariance(fs))));
    out.push(run_check("forms.cubic-rank", timing, || {
        let r = d_rank(fs);
        Outcome::new(r == 14, format!("rank {r} of 14 cubics"))
    }));

    let r = derive_r_constants(fs);
    out.push(run_check("forms.r-constants", timing, || match &r {
        Ok(r) => law(check_r_constants(r)),
        Err(e) => Outcome::new(false, e.to_string()),
    }));
    out.push(run_check("forms.cubic-law", timing, || match &r {
        Ok(r) => law(verify_d_transform(fs, r)),
        Err(e) => Outcome::new(false, format!("no constants: {e}")),
    }));

    let field = ctx.field();
    let points = field.random_points(6, ctx.config.trials, ctx.config.seed);
    out.push(run_check("forms.newton-identities", timing, || {
        let ok = points.iter().all(|p| {
            root_values_mod_p(fs, RootFamily::Delta, field, &p.values)
                .map(|v| newton_holds_mod_p(field, &v, 4))
                .unwrap_or(false)
        });
        Outcome::new(ok, format!("e1..e4 of the sextic roots match power sums at {} points", points.len()))
    }));
    out.push(run_check("forms.w-sum", timing, || {
        let s = w_sum(fs);
        Outcome::reported(format!("sum of the 14 quartic roots has {} terms", s.len()))
    }));
    out.push(run_check("forms.w-elementary", timing, || {
        let mut zero = Vec::new();
        for p in &points {
            if let Ok(v) = root_values_mod_p(fs, RootFamily::W, field, &p.values) {
                let e = elementary_mod_p(field, &v, 4);
                zero.push((1..=4).map(|k| e[k] == 0).collect::<Vec<_>>());
            }
        }
        Outcome::reported(format!("e1..e4 of the quartic roots vanish at sample points: {zero:?}"))
    }));
    out
}
