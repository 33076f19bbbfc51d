use std::collections::{HashMap, VecDeque};

use super::matrix::CycloMatrix;
use super::GroupError;

pub const DEFAULT_BOUND: usize = 5000;

/// Whether elements are identified exactly or modulo ±I.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    Exact,
    /// Elements differing by the central sign are identified, which is the
    /// group acting on projective space.
    Projective,
}

#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub generators: Vec<CycloMatrix>,
    pub elements: Vec<CycloMatrix>,
    pub mode: ClosureMode,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &CycloMatrix) -> bool {
        let key = sort_key(&canonical(m, self.mode));
        self.elements.binary_search_by(|e| sort_key(e).cmp(&key)).is_ok()
    }
}

fn canonical(m: &CycloMatrix, mode: ClosureMode) -> CycloMatrix {
    match mode {
        ClosureMode::Exact => m.clone(),
        ClosureMode::Projective => m.sign_normalized(),
    }
}

fn sort_key(m: &CycloMatrix) -> String {
    m.to_text()
}

/// Breadth-first closure: start from the identity, multiply on the right by
/// each generator, keep what is new. Errors once more than `bound` elements
/// have been found.
pub fn closure_with(
    generators: &[CycloMatrix],
    bound: usize,
    mode: ClosureMode,
) -> Result<MatrixGroup, GroupError> {
    let n = generators.first().map_or(1, |g| g.size());
    if generators.iter().any(|g| g.size() != n) {
        return Err(GroupError::SizeMismatch(n, 0));
    }
    let id = canonical(&CycloMatrix::identity(n), mode);
    let mut seen: HashMap<CycloMatrix, ()> = HashMap::new();
    let mut order = vec![id.clone()];
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = canonical(&x.try_mul(g)?, mode);
            if !seen.contains_key(&y) {
                if order.len() >= bound {
                    return Err(GroupError::BoundExceeded(bound));
                }
                seen.insert(y.clone(), ());
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    // canonical ordering makes the result independent of generator order
    let mut keyed: Vec<(String, CycloMatrix)> = order.into_iter().map(|m| (sort_key(&m), m)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(MatrixGroup {
        generators: generators.to_vec(),
        elements: keyed.into_iter().map(|(_, m)| m).collect(),
        mode,
    })
}

/// Projective closure, the mode in which ⟨S, T⟩ is the simple group.
pub fn closure(generators: &[CycloMatrix], bound: usize) -> Result<MatrixGroup, GroupError> {
    closure_with(generators, bound, ClosureMode::Projective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::CyclotomicNumber;

    #[test]
    fn trivial_group() {
        let g = closure(&[CycloMatrix::identity(6)], 10).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn cyclic_diagonal() {
        let z = CyclotomicNumber::zeta(13, 1).unwrap();
        let d = CycloMatrix::diagonal(vec![z.clone(), z.pow_i(-1).unwrap()]);
        assert_eq!(closure_with(&[d.clone()], 100, ClosureMode::Exact).unwrap().order(), 13);
        assert!(matches!(
            closure_with(&[d], 5, ClosureMode::Exact),
            Err(GroupError::BoundExceeded(5))
        ));
    }
}
