use crate::exact::int;
use crate::qseries::{agree_through, delta_series, eisenstein_series, invariant_target, QSeries};

use crate::verify::context::Context;
use crate::verify::relations::{reduce, relations, substitute, PHI_DEGREES};
use crate::verify::report::{run_check, CheckResult, Outcome};

fn evaluate_series(terms: &[(i64, [u32; 7])], phis: &[QSeries]) -> QSeries {
    let mut acc: Option<QSeries> = None;
    for (c, e) in terms {
        let mut t = QSeries::one(1).scale(&int(*c));
        for (s, p) in phis.iter().zip(e) {
            if *p > 0 {
                t = t.mul_aligned(&s.pow(*p));
            }
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a.add_aligned(&t),
        });
    }
    acc.expect("nonempty relation")
}

pub fn run(ctx: &Context) -> Vec<CheckResult> {
    let timing = ctx.config.timing;
    let n = ctx.config.order;
    let mut out = Vec::new();

    out.push(run_check("singularity.eisenstein", timing, || {
        let e4 = eisenstein_series(4, n).expect("weight 4");
        let e6 = eisenstein_series(6, n).expect("weight 6");
        let lhs = e4.pow(3).try_sub(&e6.pow(2)).expect("grid");
        let rhs = delta_series(n).scale(&int(1728));
        Outcome::new(agree_through(&lhs, &rhs, n), "E4^3 - E6^2 - 1728 Delta vanishes").through(n)
    }));

    let invs = ctx.invariants_at_theta();
    // which identifications hold, for the reduction tier
    let identified: Vec<bool> = match invs {
        Ok(v) => v
            .iter()
            .map(|r| invariant_target(r.form.degree, n).is_ok_and(|t| agree_through(&r.normalized_x, &t, n)))
            .collect(),
        Err(_) => vec![false; 7],
    };

    for rel in relations() {
        let id = format!("singularity.series.{}", rel.slug);
        out.push(run_check(&id, timing, || match invs {
            Ok(v) => {
                let phis: Vec<QSeries> = v.iter().map(|r| r.normalized_x.clone()).collect();
                let s = evaluate_series(&rel.terms, &phis);
                Outcome::new(s.vanishes_through(n), format!("{} at the theta point", rel.display())).through(n)
            }
            Err(e) => Outcome::new(false, e.to_string()),
        }));
        let id = format!("singularity.reduction.{}", rel.slug);
        out.push(run_check(&id, timing, || {
            let used: Vec<u32> = PHI_DEGREES
                .iter()
                .enumerate()
                .filter(|(i, _)| rel.terms.iter().any(|(_, e)| e[*i] > 0))
                .map(|(_, d)| *d)
                .collect();
            let missing: Vec<u32> = used
                .iter()
                .copied()
                .filter(|d| !identified[PHI_DEGREES.iter().position(|x| x == d).expect("degree")])
                .collect();
            let reduced = reduce(&substitute(&rel));
            let mut detail = format!(
                "{} reduces to {} after u^3 -> Delta, E6^2 -> E4^3 - 1728 Delta",
                rel.display(),
                if reduced.is_zero() { "0".to_string() } else { format!("{} nonzero terms", reduced.len()) }
            );
            if rel.slug.starts_with("phi44") {
                detail.push_str("; also the (2,3,11) form");
            }
            if !missing.is_empty() {
                detail.push_str(&format!("; identification not certified for {missing:?}"));
            }
            Outcome::new(reduced.is_zero() && missing.is_empty(), detail)
        }));
    }
    out
}
