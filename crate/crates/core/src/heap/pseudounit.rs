//! Pseudounits: bijections `α` of a semigroup with `α(xy) = x·α(y)`.

use crate::cayley::MulTable;
use crate::error::{Error, Result};
use crate::heap::group::GroupTable;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pseudounit {
    alpha: Vec<usize>,
}

impl Pseudounit {
    pub fn new(t: &MulTable, alpha: Vec<usize>) -> Result<Self> {
        if !is_pseudounit(t, &alpha) {
            return Err(Error::input(format!("{alpha:?} is not a pseudounit")));
        }
        Ok(Pseudounit { alpha })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn apply(&self, x: usize) -> usize {
        self.alpha[x]
    }
}

fn is_pseudounit(t: &MulTable, alpha: &[usize]) -> bool {
    let n = t.order();
    if alpha.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &a in alpha {
        if a >= n || hit[a] {
            return false;
        }
        hit[a] = true;
    }
    (0..n).all(|x| (0..n).all(|y| alpha[t.mul(x, y)] == t.mul(x, alpha[y])))
}

/// The pseudounits of a table under composition `(αβ)(x) = α(β(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudounitGroup {
    /// Sorted lexicographically by image list.
    pub elements: Vec<Pseudounit>,
    pub group: GroupTable,
}

impl PseudounitGroup {
    fn from_elements(mut elements: Vec<Pseudounit>) -> Result<Self> {
        elements.sort();
        let pos = |a: &[usize]| {
            elements
                .binary_search_by(|p| p.alpha.as_slice().cmp(a))
                .map_err(|_| {
                    Error::Invariant("pseudounits are not closed under composition".into())
                })
        };
        let m = elements.len();
        let mut rows = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                let comp: Vec<usize> = elements[j]
                    .alpha
                    .iter()
                    .map(|&y| elements[i].alpha[y])
                    .collect();
                rows[i][j] = pos(&comp)?;
            }
        }
        let group = GroupTable::new(rows).map_err(|e| Error::Invariant(e.to_string()))?;
        Ok(PseudounitGroup { elements, group })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// All pseudounits. Monoids use `α_u(y) = y·u` over the units `u`; other
/// tables go through [`pseudounits_by_search`].
pub fn pseudounits(t: &MulTable) -> Result<PseudounitGroup> {
    if !t.is_monoid() {
        return pseudounits_by_search(t);
    }
    let elements = t
        .units()
        .into_iter()
        .map(|u| {
            let alpha = (0..t.order()).map(|y| t.mul(y, u)).collect();
            Pseudounit::new(t, alpha).map_err(|e| Error::Invariant(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    PseudounitGroup::from_elements(elements)
}

/// Backtracking over bijections, propagating `α(x·y) = x·α(y)` from each
/// assigned `y` to every `x`.
pub fn pseudounits_by_search(t: &MulTable) -> Result<PseudounitGroup> {
    let n = t.order();
    let mut alpha: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    let mut trail: Vec<usize> = Vec::with_capacity(n);
    let mut found = Vec::new();

    fn assign(
        t: &MulTable,
        alpha: &mut [Option<usize>],
        used: &mut [bool],
        trail: &mut Vec<usize>,
        y: usize,
        v: usize,
    ) -> bool {
        if used[v] {
            return false;
        }
        alpha[y] = Some(v);
        used[v] = true;
        trail.push(y);
        let mut head = trail.len() - 1;
        while head < trail.len() {
            let y = trail[head];
            head += 1;
            let ay = alpha[y].unwrap();
            for x in 0..t.order() {
                let z = t.mul(x, y);
                let want = t.mul(x, ay);
                match alpha[z] {
                    Some(w) if w == want => {}
                    Some(_) => return false,
                    None => {
                        if used[want] {
                            return false;
                        }
                        alpha[z] = Some(want);
                        used[want] = true;
                        trail.push(z);
                    }
                }
            }
        }
        true
    }

    fn descend(
        t: &MulTable,
        alpha: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        trail: &mut Vec<usize>,
        found: &mut Vec<Pseudounit>,
    ) {
        let n = t.order();
        let Some(y) = (0..n).find(|&y| alpha[y].is_none()) else {
            let a: Vec<usize> = alpha.iter().map(|v| v.unwrap()).collect();
            if is_pseudounit(t, &a) {
                found.push(Pseudounit { alpha: a });
            }
            return;
        };
        for v in 0..n {
            let mark = trail.len();
            if assign(t, alpha, used, trail, y, v) {
                descend(t, alpha, used, trail, found);
            }
            while trail.len() > mark {
                let z = trail.pop().unwrap();
                let w = alpha[z].take().unwrap();
                used[w] = false;
            }
        }
    }

    descend(t, &mut alpha, &mut used, &mut trail, &mut found);
    PseudounitGroup::from_elements(found)
}

/// Outcome of checking that `k(α) = α(1)` is a bijection from the
/// pseudounits onto the units with `k(αβ) = k(β)k(α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityVerdict {
    pub pseudounit_count: usize,
    pub unit_count: usize,
    pub bijective: bool,
    pub pairs_checked: usize,
    pub anti_homomorphism: bool,
}

impl DualityVerdict {
    pub fn holds(&self) -> bool {
        self.bijective && self.anti_homomorphism && self.pseudounit_count == self.unit_count
    }
}

pub fn pseudounit_duality_check(m: &MulTable) -> Result<DualityVerdict> {
    let one = m
        .identity()
        .ok_or_else(|| Error::input("table is not a monoid"))?;
    // The search route does not use units, so the comparison is not circular.
    let p = pseudounits_by_search(m)?;
    let units = m.units();
    let k: Vec<usize> = p.elements.iter().map(|a| a.apply(one)).collect();

    let mut sorted_k = k.clone();
    sorted_k.sort_unstable();
    let bijective = sorted_k == units;

    let mut pairs_checked = 0;
    let mut anti_homomorphism = true;
    for a in 0..p.len() {
        for b in 0..p.len() {
            pairs_checked += 1;
            let ab = p.group.mul(a, b);
            if k[ab] != m.mul(k[b], k[a]) {
                anti_homomorphism = false;
            }
        }
    }
    Ok(DualityVerdict {
        pseudounit_count: p.len(),
        unit_count: units.len(),
        bijective,
        pairs_checked,
        anti_homomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cyclic_pseudounits() {
        let p = pseudounits(&catalog::cyclic_table(3)).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.group.is_cyclic());
    }

    #[test]
    fn left_zero_has_only_identity() {
        for n in 2..=4 {
            let p = pseudounits(&catalog::left_zero_table(n)).unwrap();
            assert_eq!(p.len(), 1);
            assert_eq!(p.elements[0].alpha(), &(0..n).collect::<Vec<_>>()[..]);
        }
    }

    #[test]
    fn trivial_monoid() {
        let t = catalog::cyclic_table(1);
        assert_eq!(pseudounits(&t).unwrap().len(), 1);
        assert!(pseudounit_duality_check(&t).unwrap().holds());
    }

    #[test]
    fn monoid_route_matches_search() {
        for t in [
            catalog::cyclic_table(4),
            catalog::symmetric_table(3),
            catalog::two_chain_table(),
            catalog::product_table(&catalog::cyclic_table(2), &catalog::two_chain_table()),
        ] {
            assert_eq!(pseudounits(&t).unwrap(), pseudounits_by_search(&t).unwrap());
        }
    }

    #[test]
    fn duality_examples() {
        let v = pseudounit_duality_check(&catalog::cyclic_table(4)).unwrap();
        assert!(v.holds());
        let v = pseudounit_duality_check(&catalog::symmetric_table(3)).unwrap();
        assert!(v.holds());
        assert_eq!(v.pairs_checked, 36);
        assert!(matches!(
            pseudounit_duality_check(&catalog::left_zero_table(2)),
            Err(Error::Input(_))
        ));
    }
}
