use num_complex::Complex64;

use crate::group::T_EXPONENTS;
use crate::qseries::{expected_shift_factor, inversion_defect, shift_z_plus_1, theta13_series, to_cyclo104};

use crate::verify::context::Context;
use crate::verify::report::{run_check, CheckResult, Outcome};

/// Points for the inversion law; z = i is the fixed point of z ↦ −1/z.
pub const SAMPLE_POINTS: [(f64, f64); 3] = [(0.0, 1.0), (0.3, 0.7), (0.5, 2.0)];

pub const INVERSION_TOLERANCE: f64 = 1e-9;

pub fn run(ctx: &Context) -> Vec<CheckResult> {
    let timing = ctx.config.timing;
    let n = ctx.config.order;
    let mut out = Vec::new();

    out.push(run_check("theta.translation", timing, || {
        let mut bad = Vec::new();
        for i in 1..=6 {
            let a = to_cyclo104(&theta13_series(i, n).expect("component"));
            let ok = shift_z_plus_1(&a).is_ok_and(|s| s == a.scale(&expected_shift_factor(T_EXPONENTS[i - 1])));
            if !ok {
                bad.push(i);
            }
        }
        Outcome::new(
            bad.is_empty(),
            if bad.is_empty() {
                "A(z+1) = exp(-3 pi i/4) T A(z) exactly for all six components".to_string()
            } else {
                format!("translation fails for components {bad:?}")
            },
        )
        .through(n)
    }));
    out.push(run_check("theta.inversion", timing, || {
        let mut worst = 0f64;
        for (x, y) in SAMPLE_POINTS {
            match inversion_defect(&ctx.s, Complex64::new(x, y)) {
                Ok(d) => worst = worst.max(d),
                Err(e) => return Outcome::new(false, e.to_string()),
            }
        }
        Outcome::new(
            worst < INVERSION_TOLERANCE,
            format!(
                "A(-1/z) = exp(pi i/4) sqrt(z) S A(z) at {} points, largest deviation {worst:.1e}",
                SAMPLE_POINTS.len()
            ),
        )
    }));
    out
}
