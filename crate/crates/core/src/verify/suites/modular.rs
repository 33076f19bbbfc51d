use crate::exact::{int, rat};
use crate::forms::{FormCatalog, RootFamily};
use crate::qseries::{
    agree_through, eval_rational, invariant_target, theta13_vector, Level, MonomialCache, QSeries,
};

use crate::verify::context::Context;
use crate::verify::leading::{Lead, A_LEADING, D_LEADING, G_LEADING, W_COMBINATIONS};
use crate::verify::report::{run_check, CheckResult, Outcome};

fn leading_matches(s: &QSeries, num: i64, den: i64, coeff: i64) -> bool {
    s.leading() == Some((rat(num, den), int(coeff)))
}

fn describe_lead(s: &QSeries) -> String {
    match s.leading() {
        Some((e, c)) => format!("q^({e})*({c})"),
        None => "0".to_string(),
    }
}

fn table_check(cat: &FormCatalog, table: &[Lead], cache: &mut MonomialCache, name: &str) -> Outcome {
    let mut bad = Vec::new();
    for &(i, num, den, c) in table {
        let f = cat.get(i).and_then(|f| f.to_rational());
        let value = f.map(|f| eval_rational(&f, cache));
        match value {
            Some(Ok(s)) if leading_matches(&s, num, den, c) => {}
            Some(Ok(s)) => bad.push(format!("{name}{}: {}", crate::forms::index_label(i), describe_lead(&s))),
            _ => bad.push(format!("{name}{}: not evaluable", crate::forms::index_label(i))),
        }
    }
    if bad.is_empty() {
        Outcome::new(true, format!("all {} leading terms match", table.len()))
    } else {
        Outcome::new(false, format!("mismatch {}", bad.join(", ")))
    }
}

pub fn run(ctx: &Context) -> Vec<CheckResult> {
    let timing = ctx.config.timing;
    let n = ctx.config.order;
    let fs = ctx.forms();
    let mut out = Vec::new();

    let invs = ctx.invariants_at_theta();
    for (k, f) in crate::forms::INVARIANTS.iter().enumerate() {
        let id = format!("modular.phi{}", f.degree);
        out.push(run_check(&id, timing, || match invs {
            Ok(v) => match invariant_target(f.degree, n) {
                Ok(t) => Outcome::new(
                    agree_through(&v[k].normalized_x, &t, n),
                    format!("{}(x) equals its modular form coefficientwise", f.name()),
                )
                .through(n),
                Err(e) => Outcome::new(false, e.to_string()),
            },
            Err(e) => Outcome::new(false, e.to_string()),
        }));
        let id = format!("modular.lead-phi{}", f.degree);
        out.push(run_check(&id, timing, || match invs {
            Ok(v) => {
                let (level, name) = match f.family {
                    RootFamily::Delta => (Level::X, "x"),
                    RootFamily::W => (Level::Y, "y"),
                };
                let raw = v[k].raw_at(level);
                let lead = raw.leading();
                let ok = lead.as_ref().is_some_and(|(e, c)| e.is_integer() && *c == int(f.divisor));
                Outcome::new(
                    ok,
                    format!("unnormalized power sum at {name}: {} (expected coefficient {})", describe_lead(&raw), f.divisor),
                )
            }
            Err(e) => Outcome::new(false, e.to_string()),
        }));
    }

    let a = theta13_vector(3);
    let mut cache = MonomialCache::new(&a);
    out.push(run_check("modular.lead-quadratics", timing, || table_check(&fs.a, &A_LEADING, &mut cache, "A")));
    out.push(run_check("modular.lead-cubics", timing, || table_check(&fs.d, &D_LEADING, &mut cache, "D")));
    out.push(run_check("modular.lead-sextics", timing, || table_check(&fs.g, &G_LEADING, &mut cache, "G")));
    out.push(run_check("modular.lead-combinations", timing, || {
        let quad: Vec<QSeries> = (0..7)
            .map(|j| eval_rational(&fs.a.get(j).and_then(|f| f.to_rational()).expect("rational"), &mut cache).expect("six components"))
            .collect();
        let mut bad = Vec::new();
        for (k, c) in W_COMBINATIONS.iter().enumerate() {
            let mut s = QSeries::zero(a.denom(), i64::MAX);
            for &(coef, i, j) in c.products {
                s = s.try_add(&quad[i].try_mul(&quad[j]).expect("grid").scale(&int(coef))).expect("grid");
            }
            if !leading_matches(&s, c.num, c.den, c.coeff) {
                bad.push(format!("#{k}: {}", describe_lead(&s)));
            }
        }
        if bad.is_empty() {
            Outcome::new(true, format!("all {} leading terms match", W_COMBINATIONS.len()))
        } else {
            Outcome::new(false, format!("mismatch {}", bad.join(", ")))
        }
    }));
    out
}
