use std::collections::BTreeSet;

use crate::exact::{Field, Ring};

use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use super::PolyError;

/// Σᵢ formsᵢᵏ.
pub fn power_sum<C: Ring>(forms: &[MultiPoly<C>], k: u32) -> Result<MultiPoly<C>, PolyError> {
    let first = forms.first().ok_or(PolyError::EmptySequence)?;
    if k == 0 {
        return Err(PolyError::OutOfRange { k: 0, len: forms.len() });
    }
    let mut acc = MultiPoly::zero(first.nvars());
    for f in forms {
        acc = acc.try_add(&f.try_pow(k)?)?;
    }
    Ok(acc)
}

/// k-th elementary symmetric polynomial of the forms, by the recurrence
/// e_j ← e_j + e_(j−1)·f over the forms in turn.
pub fn elementary_symmetric<C: Ring>(
    forms: &[MultiPoly<C>],
    k: usize,
) -> Result<MultiPoly<C>, PolyError> {
    if k == 0 || k > forms.len() {
        return Err(PolyError::OutOfRange { k: k as u32, len: forms.len() });
    }
    let n = forms[0].nvars();
    let mut e: Vec<MultiPoly<C>> = vec![MultiPoly::one(n)];
    e.extend((0..k).map(|_| MultiPoly::zero(n)));
    for f in forms {
        for j in (1..=k).rev() {
            let t = e[j - 1].try_mul(f)?;
            e[j] = e[j].try_add(&t)?;
        }
    }
    Ok(e.swap_remove(k))
}

/// Coefficients c with Σ cⱼ·basisⱼ = target, by Gaussian elimination on the
/// coefficient matrix over all monomials that occur.
///
/// Fails when the basis is linearly dependent or the target is not in its span.
pub fn express_in_span<C: Field>(
    target: &MultiPoly<C>,
    basis: &[MultiPoly<C>],
) -> Result<Vec<C>, PolyError> {
    let mut monos: BTreeSet<Monomial> = BTreeSet::new();
    for p in basis.iter().chain(std::iter::once(target)) {
        monos.extend(p.terms().iter().map(|t| t.0));
    }
    let monos: Vec<Monomial> = monos.into_iter().collect();
    let cols = basis.len();
    // rows: one per monomial, columns: basis entries then the target
    let mut rows: Vec<Vec<C>> = monos
        .iter()
        .map(|m| {
            let mut r: Vec<C> = basis.iter().map(|b| b.coeff(m)).collect();
            r.push(target.coeff(m));
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(pr) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            return Err(PolyError::Dependent(col));
        };
        rows.swap(pivot_row, pr);
        let inv = rows[pivot_row][col].inv().expect("nonzero pivot");
        for c in col..=cols {
            rows[pivot_row][c] = rows[pivot_row][c].times(&inv);
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=cols {
                    let t = rows[pivot_row][c].times(&factor);
                    rows[r][c] = rows[r][c].minus(&t);
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[cols].is_zero()) {
        return Err(PolyError::Inconsistent);
    }
    Ok(pivots.iter().map(|&r| rows[r][cols].clone()).collect())
}

/// Rank of the coefficient matrix of the given polynomials.
pub fn rank<C: Field>(polys: &[MultiPoly<C>]) -> usize {
    let mut monos: BTreeSet<Monomial> = BTreeSet::new();
    for p in polys {
        monos.extend(p.terms().iter().map(|t| t.0));
    }
    let mut rows: Vec<Vec<C>> = polys
        .iter()
        .map(|p| monos.iter().map(|m| p.coeff(m)).collect())
        .collect();
    let ncols = monos.len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for i in r + 1..rows.len() {
            if !rows[i][col].is_zero() {
                let f = rows[i][col].times(&inv);
                for c in col..ncols {
                    let t = rows[r][c].times(&f);
                    rows[i][c] = rows[i][c].minus(&t);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational};

    fn z(i: usize) -> MultiPoly<Rational> {
        MultiPoly::var(3, i)
    }

    #[test]
    fn newton_identity_small() {
        let forms = vec![z(0), z(1), z(2)];
        let e2 = elementary_symmetric(&forms, 2).unwrap();
        let p1 = power_sum(&forms, 1).unwrap();
        let p2 = power_sum(&forms, 2).unwrap();
        let newton = p1
            .try_pow(2)
            .unwrap()
            .try_sub(&p2)
            .unwrap()
            .scale(&crate::exact::rat(1, 2));
        assert_eq!(e2, newton);
        assert!(elementary_symmetric(&forms, 4).is_err());
        assert!(power_sum::<Rational>(&[], 2).is_err());
    }

    #[test]
    fn span_solve() {
        let basis = vec![z(0), z(0).try_add(&z(1)).unwrap()];
        let target = z(0).scale(&int(3)).try_add(&z(1).scale(&int(2))).unwrap();
        let c = express_in_span(&target, &basis).unwrap();
        assert_eq!(c, vec![int(1), int(2)]);
        assert!(matches!(express_in_span(&z(2), &basis), Err(PolyError::Inconsistent)));
        let dep = vec![z(0), z(0).scale(&int(2))];
        assert!(matches!(express_in_span(&z(0), &dep), Err(PolyError::Dependent(1))));
        assert_eq!(rank(&dep), 1);
    }
}
