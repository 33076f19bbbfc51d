//! Text dump of a rational series: one "k/M<TAB>coefficient" line per
//! nonzero term in increasing exponent, with k/M in lowest terms.

use num_integer::Integer;

use crate::exact::{format_rational, parse_rational, Rational};

use super::generators::QSeries;
use super::series::{PuiseuxSeries, EXACT};
use super::SeriesError;

/// Largest grid accepted when parsing, so hostile input cannot ask for an
/// absurd common denominator.
pub const MAX_DUMP_GRID: u64 = 1 << 20;

pub fn dump_series(s: &QSeries) -> String {
    let d = s.denom() as i64;
    let mut out = String::new();
    for (k, c) in s.terms() {
        let g = k.gcd(&d);
        out.push_str(&format!("{}/{}\t{}\n", k / g, d / g, format_rational(c)));
    }
    out
}

/// Parses a dump into an exact series on the lcm of the exponent
/// denominators.
pub fn parse_dump(text: &str) -> Result<QSeries, SeriesError> {
    let bad = |line: usize, reason: &str| SeriesError::Parse {
        line,
        reason: reason.to_string(),
    };
    let mut rows: Vec<(i64, u64, Rational)> = Vec::new();
    let mut grid: u64 = 1;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        if line.is_empty() {
            continue;
        }
        let (exp, coeff) = line.split_once('\t').ok_or_else(|| bad(ln, "expected a tab"))?;
        let (num, den) = exp.split_once('/').ok_or_else(|| bad(ln, "exponent must be k/M"))?;
        let k: i64 = num.parse().map_err(|_| bad(ln, "bad exponent numerator"))?;
        let m: u64 = den.parse().map_err(|_| bad(ln, "bad exponent denominator"))?;
        if m == 0 || m > MAX_DUMP_GRID {
            return Err(bad(ln, "exponent denominator out of range"));
        }
        if k.unsigned_abs().gcd(&m) != 1 {
            return Err(bad(ln, "exponent not in lowest terms"));
        }
        let c = parse_rational(coeff).ok_or_else(|| bad(ln, "bad coefficient"))?;
        if c == Rational::from_integer(0.into()) {
            return Err(bad(ln, "zero coefficient"));
        }
        if let Some((pk, pm, _)) = rows.last() {
            if (k as i128) * (*pm as i128) <= (*pk as i128) * (m as i128) {
                return Err(bad(ln, "exponents must increase"));
            }
        }
        grid = grid.lcm(&m);
        if grid > MAX_DUMP_GRID {
            return Err(bad(ln, "common grid too large"));
        }
        rows.push((k, m, c));
    }
    let mut terms = Vec::with_capacity(rows.len());
    for (k, m, c) in rows {
        let idx = k
            .checked_mul((grid / m) as i64)
            .filter(|x| *x < EXACT)
            .ok_or_else(|| bad(0, "exponent overflows the grid"))?;
        terms.push((idx, c));
    }
    Ok(PuiseuxSeries::from_terms(grid as u32, terms, EXACT))
}
