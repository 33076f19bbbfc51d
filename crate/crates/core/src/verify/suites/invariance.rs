use crate::forms::{permutation_action, RootPermutation, INVARIANTS};
use crate::group::CycloMatrix;
use crate::polynomial::PrimeField;

use crate::verify::context::Context;
use crate::verify::relations::relations;
use crate::verify::report::{run_check, CheckResult, Outcome};

fn label(i: usize) -> String {
    crate::forms::index_label(i)
}

fn describe(p: &RootPermutation) -> String {
    p.delta
        .iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| format!("{}->{}", label(*a), label(*b)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// T sends δ_ν to δ_(ν+1) and fixes δ_∞.
fn is_shift(p: &RootPermutation) -> bool {
    p.delta.iter().all(|&(a, b)| if a == 13 { b == 13 } else { b == (a + 1) % 13 })
}

fn permutation_check(ctx: &Context, g: &CycloMatrix, name: &str, expect: fn(&RootPermutation) -> bool) -> Outcome {
    match permutation_action(ctx.forms(), g) {
        Ok(p) => {
            let ok = expect(&p);
            let moved = describe(&p);
            Outcome::new(
                ok,
                format!(
                    "{name} permutes the sextic roots ({}) and the quadratic roots up to sign",
                    if moved.is_empty() { "identity".to_string() } else { moved }
                ),
            )
        }
        Err(e) => Outcome::new(false, e.to_string()),
    }
}

fn invariant_under(ctx: &Context, field: &PrimeField, degree: u32, mats: &[(&str, &CycloMatrix)]) -> Outcome {
    let fs = ctx.forms();
    let inv = INVARIANTS.iter().find(|f| f.degree == degree).expect("known degree");
    let points = field.random_points(6, ctx.config.trials, ctx.config.seed ^ degree as u64);
    let mut bad = Vec::new();
    for (name, m) in mats {
        let rows = m.rows();
        for (k, p) in points.iter().enumerate() {
            let moved = match field.apply_matrix(&rows, &p.values) {
                Ok(v) => v,
                Err(e) => return Outcome::new(false, e.to_string()),
            };
            let a = inv.eval_mod_p(fs, field, &p.values);
            let b = inv.eval_mod_p(fs, field, &moved);
            if a.is_err() || a != b {
                bad.push(format!("{name} at point {k}"));
            }
        }
    }
    let odds = (degree as f64 / field.modulus() as f64).powi(ctx.config.trials as i32);
    if bad.is_empty() {
        Outcome::new(
            true,
            format!(
                "{} unchanged under {} at {} random points each (false-pass odds <= {odds:.1e})",
                inv.name(),
                mats.iter().map(|m| m.0).collect::<Vec<_>>().join(", "),
                points.len()
            ),
        )
    } else {
        Outcome::new(false, format!("{} changes under {}", inv.name(), bad.join(", ")))
    }
}

pub fn run(ctx: &Context) -> Vec<CheckResult> {
    let timing = ctx.config.timing;
    let fs = ctx.forms();
    let field = ctx.field();
    let id = CycloMatrix::identity(6);
    let mut out = Vec::new();

    out.push(run_check("invariance.identity-permutation", timing, || {
        permutation_check(ctx, &id, "identity", RootPermutation::is_identity)
    }));
    out.push(run_check("invariance.s-permutation", timing, || {
        permutation_check(ctx, &fs.s, "S", RootPermutation::delta_is_involution)
    }));
    out.push(run_check("invariance.t-permutation", timing, || {
        permutation_check(ctx, &fs.t, "T", is_shift)
    }));
    out.push(run_check("invariance.phi-signs", timing, || {
        let mut parts = Vec::new();
        for (name, g) in [("S", &fs.s), ("T", &fs.t)] {
            if let Ok(p) = permutation_action(fs, g) {
                let signs: String = p.phi.iter().map(|(_, _, s)| if *s > 0 { '+' } else { '-' }).collect();
                parts.push(format!("{name}: {signs}"));
            }
        }
        Outcome::reported(format!("signs of the quadratic roots (inf, 0..12) {}", parts.join("; ")))
    }));
    for inv in INVARIANTS.iter() {
        let id_str = format!("invariance.phi{}", inv.degree);
        out.push(run_check(&id_str, timing, || {
            invariant_under(ctx, field, inv.degree, &[("S", &fs.s), ("T", &fs.t)])
        }));
    }
    out.push(run_check("invariance.identity-trivial", timing, || {
        invariant_under(ctx, field, 12, &[("identity", &id)])
    }));
    out.push(run_check("invariance.syzygy-candidates", timing, || {
        let points = field.random_points(6, ctx.config.trials, ctx.config.seed.wrapping_add(1));
        let mut vanish = Vec::new();
        for rel in relations() {
            let all_zero = points.iter().all(|p| {
                let vals: Result<Vec<u64>, _> =
                    INVARIANTS.iter().map(|f| f.eval_mod_p(fs, field, &p.values)).collect();
                match vals {
                    Ok(v) => rel.evaluate_mod_p(field, &v) == 0,
                    Err(_) => false,
                }
            });
            vanish.push(format!("{}: {}", rel.slug, if all_zero { "vanishes" } else { "nonzero" }));
        }
        Outcome::reported(format!("as polynomials in z: {}", vanish.join(", ")))
    }));
    out
}
