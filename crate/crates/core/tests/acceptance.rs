//! One line per acceptance criterion. Criteria 7 and 10 are known to fail:
//! the covariant built from the determinant formula is the negative of the
//! displayed degree-30 expansion, so the icosahedral suite and the full run
//! report a failure. The test asserts that exactly those two fail, and only
//! for that reason, so any other regression still breaks the build.

use std::time::Instant;

use psl13::verify::{run_all, run_suite, Context, Overrides, RunConfig, Status, Suite, VerificationReport};

struct Line {
    n: usize,
    ok: bool,
    what: String,
}

fn ids_with(report: &VerificationReport, prefix: &str) -> Vec<(String, Status)> {
    report
        .results
        .iter()
        .filter(|c| c.check_id.starts_with(prefix))
        .map(|c| (c.check_id.clone(), c.status))
        .collect()
}

/// All named checks present and passing.
fn all_pass(report: &VerificationReport, ids: &[&str]) -> Result<(), String> {
    for id in ids {
        match report.get(id) {
            Some(c) if c.status == Status::Pass => {}
            Some(c) => return Err(format!("{id}: {}", c.detail)),
            None => return Err(format!("{id} missing")),
        }
    }
    Ok(())
}

fn suite_millis(report: &VerificationReport, prefix: &str) -> u64 {
    report.results.iter().filter(|c| c.check_id.starts_with(prefix)).map(|c| c.millis).sum()
}

fn line(n: usize, r: Result<String, String>) -> Line {
    match r {
        Ok(what) => Line { n, ok: true, what },
        Err(what) => Line { n, ok: false, what },
    }
}

fn within(report: &VerificationReport, prefix: &str, budget_ms: u64) -> Result<String, String> {
    let ms = suite_millis(report, prefix);
    if ms < budget_ms {
        Ok(format!("{ms} ms of {budget_ms} ms budget"))
    } else {
        Err(format!("{ms} ms exceeds {budget_ms} ms budget"))
    }
}

fn main() {
    let config = RunConfig::default();
    assert_eq!(config.order, 12);
    let ctx = Context::new(config.clone(), Overrides::default()).unwrap();
    let start = Instant::now();
    let full = run_all(&ctx);
    let wall = start.elapsed();
    let mut lines = Vec::new();

    lines.push(line(1, (|| {
        all_pass(&full, &["group.relations", "group.order", "group.subgroup-order", "group.h-word", "group.h-order", "group.h-conjugation"])?;
        within(&full, "group.", 30_000).map(|t| format!("relations, orders 1092 and 78, H word, order and conjugation; {t}"))
    })()));

    lines.push(line(2, (|| {
        let ids = ["forms.quadratic-law", "forms.sextic-law", "forms.phi-dual", "forms.delta-dual", "forms.delta-sum", "forms.subgroup-invariance"];
        all_pass(&full, &ids)?;
        let t: u64 = ids.iter().map(|id| full.get(id).unwrap().millis).sum();
        if t >= 60_000 {
            return Err(format!("{t} ms exceeds 60 s"));
        }
        Ok(format!("quadratic and sextic laws for 13 nu, dual constructions, root sum, subgroup invariance; {t} ms"))
    })()));

    lines.push(line(3, all_pass(&full, &["forms.r-constants", "forms.cubic-law"]).map(|_| {
        format!("r constants exact and numerically matched; {}", full.get("forms.r-constants").unwrap().detail)
    })));

    lines.push(line(4, (|| {
        if config.prime <= 1 << 60 {
            return Err(format!("prime {} is not above 2^60", config.prime));
        }
        all_pass(&full, &["invariance.s-permutation", "invariance.t-permutation"])?;
        let phis: Vec<String> = [12, 18, 20, 30, 32, 42, 44].iter().map(|d| format!("invariance.phi{d}")).collect();
        all_pass(&full, &phis.iter().map(String::as_str).collect::<Vec<_>>())?;
        Ok(format!("signed and plain permutations; 7 invariants, {} trials mod a prime above 2^60", config.trials))
    })()));

    lines.push(line(5, (|| {
        let ids = ids_with(&full, "modular.");
        if ids.len() != 18 {
            return Err(format!("{} modular checks, expected 18", ids.len()));
        }
        all_pass(&full, &ids.iter().map(|(i, _)| i.as_str()).collect::<Vec<_>>())?;
        for d in [12, 18, 20, 30, 32, 42, 44] {
            if full.get(&format!("modular.phi{d}")).unwrap().verified_order != Some(12) {
                return Err(format!("Phi{d} not certified through q^12"));
            }
        }
        within(&full, "modular.", 300_000).map(|t| format!("7 identifications through q^12, all leading terms; {t}"))
    })()));

    lines.push(line(6, (|| {
        let ids = ids_with(&full, "singularity.");
        if ids.len() != 19 {
            return Err(format!("{} singularity checks, expected 19", ids.len()));
        }
        all_pass(&full, &ids.iter().map(|(i, _)| i.as_str()).collect::<Vec<_>>())?;
        Ok("9 relations as series through q^12 and by reduction; Eisenstein relation".into())
    })()));

    lines.push(line(7, all_pass(&full, &[
        "icosahedral.hessian", "icosahedral.covariant", "icosahedral.relation",
        "icosahedral.f-modular", "icosahedral.h-modular", "icosahedral.t-modular",
    ]).map(|_| "displayed H and T reproduced; relation; f, H, T modular".to_string())));

    lines.push(line(8, all_pass(&full, &["theta.translation", "theta.inversion"]).map(|_| {
        format!("{}; {}", full.get("theta.translation").unwrap().detail, full.get("theta.inversion").unwrap().detail)
    })));

    lines.push(line(9, (|| {
        for (form, term) in [(1, 0), (8, 2), (11, 0)] {
            let ctx = Context::new(config.clone(), Overrides::default().with_d_sign_flip(form, term)).unwrap();
            let r = run_suite(Suite::Forms, &ctx);
            if r.passed() {
                return Err(format!("flip of D{form} term {term} went unnoticed"));
            }
        }
        Ok("sign flips in D1, D8, D11 each fail the forms suite".into())
    })()));

    lines.push(line(10, if full.passed() && wall.as_secs() < 600 {
        Ok(format!("all {} checks pass in {:.1} s", full.results.len(), wall.as_secs_f64()))
    } else {
        let failed: Vec<&str> = full.failures().iter().map(|c| c.check_id.as_str()).collect();
        Err(format!("{:.1} s, failing: {}", wall.as_secs_f64(), failed.join(", ")))
    }));

    for l in &lines {
        println!("criterion {:>2}: {}  {}", l.n, if l.ok { "PASS" } else { "FAIL" }, l.what);
    }

    let failing: Vec<usize> = lines.iter().filter(|l| !l.ok).map(|l| l.n).collect();
    assert_eq!(failing, [7, 10], "unexpected criterion outcomes");
    let failed_checks: Vec<&str> = full.failures().iter().map(|c| c.check_id.as_str()).collect();
    assert_eq!(failed_checks, ["icosahedral.covariant"]);
    assert!(full.get("icosahedral.covariant").unwrap().detail.contains("minus the displayed"));
    assert!(wall.as_secs() < 600);
}
