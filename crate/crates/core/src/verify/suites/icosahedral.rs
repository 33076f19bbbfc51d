use crate::forms::{
    expected_hessian, expected_jacobian_cov, icosa_f, icosa_hessian, icosa_jacobian_cov,
    icosa_relation,
};
use crate::qseries::{
    agree_through, delta_series, eisenstein_series, eta_series, eval_rational_at_series,
    theta5_vector, QSeries,
};

use crate::verify::context::Context;
use crate::verify::report::{run_check, CheckResult, Outcome};

pub fn run(ctx: &Context) -> Vec<CheckResult> {
    let timing = ctx.config.timing;
    let n = ctx.config.order;
    let f = icosa_f();
    let h = icosa_hessian(&f);
    let t_cov = icosa_jacobian_cov(&f, &h);
    let t_disp = expected_jacobian_cov();
    let mut out = Vec::new();

    out.push(run_check("icosahedral.hessian", timing, || {
        Outcome::new(h == expected_hessian(), "determinant formula / 121 against the displayed expansion")
    }));
    out.push(run_check("icosahedral.covariant", timing, || {
        let ok = t_cov == t_disp;
        let detail = if ok {
            "determinant formula * (-1/20) equals the displayed expansion".to_string()
        } else if t_cov == t_disp.negate() {
            "determinant formula * (-1/20) equals minus the displayed expansion".to_string()
        } else {
            "determinant formula * (-1/20) differs from the displayed expansion".to_string()
        };
        Outcome::new(ok, detail)
    }));
    out.push(run_check("icosahedral.relation", timing, || {
        let disp = icosa_relation(&f, &expected_hessian(), &t_disp).is_zero();
        let cov = icosa_relation(&f, &h, &t_cov).is_zero();
        Outcome::new(
            disp && cov,
            format!("T^2 + H^3 - 1728 f^5 = 0 for the displayed forms: {disp}, for the covariants: {cov}"),
        )
    }));

    let v = theta5_vector(n + 1);
    let delta = delta_series(n);
    let check = |poly: &crate::forms::BinaryForm, weight: u32, target: QSeries, what: &str| {
        match eval_rational_at_series(poly, &v, weight) {
            Ok(s) => Outcome::new(agree_through(&s, &target, n), what.to_string()).through(n),
            Err(e) => Outcome::new(false, e.to_string()),
        }
    };
    out.push(run_check("icosahedral.f-modular", timing, || {
        check(&f, 12, delta.negate(), "f(x1, x2) = -Delta")
    }));
    out.push(run_check("icosahedral.h-modular", timing, || {
        let e4 = eisenstein_series(4, n).expect("weight 4");
        let target = eta_series(n).pow(8).mul_aligned(&delta.try_mul(&e4).expect("grid")).negate();
        check(&expected_hessian(), 20, target, "H(x1, x2) = -eta^8 Delta E4")
    }));
    out.push(run_check("icosahedral.t-modular", timing, || {
        let e6 = eisenstein_series(6, n).expect("weight 6");
        let target = delta.pow(2).try_mul(&e6).expect("grid");
        check(&t_disp, 30, target, "T(x1, x2) = Delta^2 E6 for the displayed T")
    }));
    out
}
