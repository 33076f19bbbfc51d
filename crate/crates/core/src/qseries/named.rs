//! The expansions the command line can print, looked up by name.

use crate::forms::{expected_hessian, expected_jacobian_cov, icosa_f, invariant, FormSet};

use super::evaluate::{eval_rational_at_series, MonomialCache};
use super::generators::{
    delta_series, eisenstein_series, eta_series, theta13_series, theta5_vector, QSeries,
};
use super::roots::ThetaPoint;
use super::SeriesError;

pub const SERIES_NAMES: &[&str] = &[
    "eta", "a1", "a2", "a3", "a4", "a5", "a6", "E4", "E6", "Delta", "Phi12", "Phi18", "Phi20",
    "Phi30", "Phi32", "Phi42", "Phi44", "f", "H", "T",
];

/// The named expansion through q^n. Phi names give the normalized invariant
/// at the theta point; f, H and T are the displayed icosahedral forms at the
/// order-5 pair, scaled by the matching eta power.
pub fn named_series(name: &str, n: i64) -> Result<QSeries, SeriesError> {
    let unknown = || SeriesError::UnknownName(name.to_string());
    let s = match name {
        "eta" => eta_series(n),
        "E4" => eisenstein_series(4, n)?,
        "E6" => eisenstein_series(6, n)?,
        "Delta" => delta_series(n),
        "f" | "H" | "T" => {
            let (p, weight) = match name {
                "f" => (icosa_f(), 12),
                "H" => (expected_hessian(), 20),
                _ => (expected_jacobian_cov(), 30),
            };
            eval_rational_at_series(&p, &theta5_vector(n + 1), weight)?
        }
        _ => {
            if let Some(i) = name.strip_prefix('a') {
                let i: usize = i.parse().map_err(|_| unknown())?;
                theta13_series(i, n)?
            } else if let Some(d) = name.strip_prefix("Phi") {
                let form = d.parse().ok().and_then(invariant).ok_or_else(unknown)?;
                let tp = ThetaPoint::new(n);
                let mut cache = MonomialCache::new(&tp.a);
                tp.invariant(&FormSet::standard(), &form, &mut cache)?.normalized_x
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(s.through(n))
}
