//! Plain-text catalog format, one form per record:
//!
//! ```text
//! # psl13 catalog v1
//! family D
//! nvars 6
//! form 0
//! 1 1 1 0 0 0 ; 1|0:1
//! end
//! form inf
//! ...
//! ```
//!
//! Each term line is the exponent vector, a semicolon, and the coefficient in
//! cyclotomic text form. Terms are written in increasing monomial order.

use crate::exact::CyclotomicNumber;
use crate::polynomial::{MultiPoly, MAX_VARS};

use super::catalog::{index_label, parse_index_label, Family, Form, FormCatalog};
use super::FormError;

pub const CATALOG_HEADER: &str = "# psl13 catalog v1";

pub fn export_catalog(cat: &FormCatalog) -> String {
    let mut out = format!("{CATALOG_HEADER}\nfamily {}\nnvars {}\n", cat.family, cat.nvars);
    for (i, f) in &cat.forms {
        out.push_str(&format!("form {}\n", index_label(*i)));
        for (m, c) in f.terms() {
            let exps: Vec<String> = m.exponents(cat.nvars).iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("{} ; {}\n", exps.join(" "), c.to_text()));
        }
        out.push_str("end\n");
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedForm {
    pub index: usize,
    pub poly: Form,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedCatalog {
    pub family: Family,
    pub nvars: usize,
    pub forms: Vec<ParsedForm>,
}

impl ParsedCatalog {
    pub fn into_catalog(self) -> FormCatalog {
        FormCatalog {
            family: self.family,
            nvars: self.nvars,
            forms: self.forms.into_iter().map(|f| (f.index, f.poly)).collect(),
        }
    }
}

pub fn parse_catalog(text: &str) -> Result<ParsedCatalog, FormError> {
    let err = |line: usize, reason: &str| FormError::Parse {
        line,
        reason: reason.to_string(),
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    let mut next = |what: &str| lines.next().ok_or_else(|| err(0, &format!("missing {what}")));

    let (ln, header) = next("header")?;
    if header != CATALOG_HEADER {
        return Err(err(ln, "unknown header"));
    }
    let (ln, fam) = next("family")?;
    let family = fam
        .strip_prefix("family ")
        .and_then(Family::parse)
        .ok_or_else(|| err(ln, "unknown family"))?;
    let (ln, nv) = next("nvars")?;
    let nvars: usize = nv
        .strip_prefix("nvars ")
        .and_then(|s| s.parse().ok())
        .filter(|&n| (1..=MAX_VARS).contains(&n))
        .ok_or_else(|| err(ln, "bad variable count"))?;

    let mut forms: Vec<ParsedForm> = Vec::new();
    loop {
        let Ok((ln, line)) = next("form") else { break };
        if line.is_empty() {
            continue;
        }
        let index = line
            .strip_prefix("form ")
            .and_then(parse_index_label)
            .ok_or_else(|| err(ln, "expected form record"))?;
        if forms.iter().any(|f| f.index == index) {
            return Err(err(ln, "duplicate form index"));
        }
        let mut terms = Vec::new();
        loop {
            let (ln, line) = next("end")?;
            if line == "end" {
                break;
            }
            let (exps, coeff) = line.split_once(" ; ").ok_or_else(|| err(ln, "expected ' ; '"))?;
            let e: Vec<u32> = exps
                .split(' ')
                .map(|s| s.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| err(ln, "bad exponent"))?;
            if e.len() != nvars {
                return Err(err(ln, "wrong number of exponents"));
            }
            let c = CyclotomicNumber::parse_text(coeff).map_err(|e| err(ln, &e.to_string()))?;
            terms.push((e, c));
        }
        let poly = MultiPoly::from_exponents(nvars, terms).map_err(|e| err(ln, &e.to_string()))?;
        forms.push(ParsedForm { index, poly });
    }
    Ok(ParsedCatalog { family, nvars, forms })
}
