use std::path::Path;

use crate::exact::CyclotomicNumber;
use crate::group::{
    closure_with, gen_s, gen_t, h_display, h_word, load_or_build, CacheStatus, ClosureMode, CycloMatrix,
    GroupError, MatrixGroup, DEFAULT_BOUND,
};

use crate::verify::context::Context;
use crate::verify::report::{run_check, CheckResult, Outcome};

fn scalar_text(l: &CyclotomicNumber) -> String {
    match l.as_rational() {
        Some(q) => q.to_string(),
        None => l.to_text(),
    }
}

/// `m` equals λ·I; reports λ.
fn proportional_to_identity(m: &CycloMatrix) -> Option<CyclotomicNumber> {
    m.projective_scalar(&CycloMatrix::identity(m.size()))
}

fn closure_cached(ctx: &Context, gens: &[CycloMatrix], name: &str) -> Result<MatrixGroup, GroupError> {
    let bound = ctx.overrides.bound;
    let build = || closure_with(gens, bound, ClosureMode::Projective);
    match &ctx.config.cache_dir {
        Some(dir) => load_or_build(&dir.join(format!("{name}.txt")), gens, ClosureMode::Projective, false, build)
            .and_then(|(g, _)| {
                if g.order() > bound {
                    Err(GroupError::BoundExceeded(bound))
                } else {
                    Ok(g)
                }
            }),
        None => build(),
    }
}

/// Fills `dir` with the closures of ⟨S,T⟩ and ⟨H,T⟩ that the group suite
/// reads, returning file name, cache status and order for each.
pub fn build_store(dir: &Path, rebuild: bool) -> Result<Vec<(String, CacheStatus, usize)>, GroupError> {
    let (s, t) = (gen_s(), gen_t());
    let h = h_word(&s, &t);
    let mut out = Vec::new();
    for (name, gens) in [("st", [s.clone(), t.clone()]), ("ht", [h, t.clone()])] {
        let file = format!("{name}.txt");
        let (g, status) = load_or_build(&dir.join(&file), &gens, ClosureMode::Projective, rebuild, || {
            closure_with(&gens, DEFAULT_BOUND, ClosureMode::Projective)
        })?;
        out.push((file, status, g.order()));
    }
    Ok(out)
}

fn order_outcome(res: Result<MatrixGroup, GroupError>, expected: usize) -> Outcome {
    match res {
        Ok(g) => Outcome::new(
            g.order() == expected,
            format!("order {} modulo scalars (expected {expected})", g.order()),
        ),
        Err(e) => Outcome::new(false, e.to_string()),
    }
}

pub fn run(ctx: &Context) -> Vec<CheckResult> {
    let timing = ctx.config.timing;
    let s = &ctx.s;
    let t = &ctx.overrides.t;
    let st = s.mul(t);
    let h = h_word(s, t);
    let hd = h_display();
    let mut out = Vec::new();

    out.push(run_check("group.relations", timing, || {
        let s2 = proportional_to_identity(&s.pow(2));
        let t13 = t.pow(13);
        let st3 = proportional_to_identity(&st.pow(3));
        let ok = s2.is_some() && t13.is_identity() && st3.is_some();
        let show = |x: &Option<CyclotomicNumber>| x.as_ref().map_or("not scalar".to_string(), scalar_text);
        Outcome::new(
            ok,
            format!(
                "S^2 = {}*I, T^13 = I: {}, (ST)^3 = {}*I; relations hold modulo scalars",
                show(&s2),
                t13.is_identity(),
                show(&st3)
            ),
        )
    }));
    out.push(run_check("group.order", timing, || {
        order_outcome(closure_cached(ctx, &[s.clone(), t.clone()], "st"), 1092)
    }));
    out.push(run_check("group.subgroup-order", timing, || {
        order_outcome(closure_cached(ctx, &[h.clone(), t.clone()], "ht"), 78)
    }));
    out.push(run_check("group.h-word", timing, || match h.projective_scalar(&hd) {
        Some(l) => Outcome::new(true, format!("word = {} * signed permutation", scalar_text(&l))),
        None => Outcome::new(false, "word is not proportional to the signed permutation"),
    }));
    out.push(run_check("group.h-order", timing, || {
        let h6 = proportional_to_identity(&h.pow(6));
        let lower = (1..6).any(|k| proportional_to_identity(&h.pow(k)).is_some());
        match h6 {
            Some(l) if !lower => Outcome::new(true, format!("H^6 = {} * I, no smaller power is scalar", scalar_text(&l))),
            _ => Outcome::new(false, "H^6 is not scalar or H has smaller order"),
        }
    }));
    out.push(run_check("group.h-conjugation", timing, || {
        let conj = match h.inverse() {
            Ok(hi) => hi.mul(t).mul(&h),
            Err(e) => return Outcome::new(false, e.to_string()),
        };
        match conj.projective_scalar(&t.pow(4)) {
            Some(l) => Outcome::new(true, format!("H^-1 T H = {} * T^4", scalar_text(&l))),
            None => Outcome::new(false, "H^-1 T H is not proportional to T^4"),
        }
    }));
    out
}
