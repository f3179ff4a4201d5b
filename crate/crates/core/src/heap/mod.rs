//! The heap of unrepresentations and the groups attached to it.
//!
//! For unrepresentations `a, b, c` of the same semigroup the ternary
//! operation `t(a, b, c) = a ∘ b⁻¹ ∘ c` is again an unrepresentation. Fixing
//! any element `e` turns the heap into a group with `x·y = t(x, e, y)`.

mod centralizer;
mod group;
mod pseudounit;
mod torsor;

use std::collections::HashMap;

pub use centralizer::{
    centralizer, centralizer_backtrack, centralizer_exhaustive, centralizer_to_heap,
    theorem_centralizer_check, CentralizerSet, CentralizerTheoremVerdict,
    CENTRALIZER_EXHAUSTIVE_MAX_DEGREE,
};
pub use group::{is_isomorphic, GroupTable, ISOMORPHISM_MAX_ORDER};
pub use pseudounit::{
    pseudounit_duality_check, pseudounits, pseudounits_by_search, DualityVerdict, Pseudounit,
    PseudounitGroup,
};
pub use torsor::{
    beta_square_check, epsilon_torsor_witness, heap_torsor_action, torsor_check, unit_action,
    BetaSquareVerdict, EpsilonTorsorWitness,
};

use crate::error::{Error, Result};
use crate::semigroup::TransSemigroup;
use crate::unrep::{verify_action_hom, UnrepMap};

/// `t(a, b, c)`: the map `x ↦ a(b⁻¹(c(x)))`.
pub fn heap_op(s: &TransSemigroup, a: &UnrepMap, b: &UnrepMap, c: &UnrepMap) -> Result<UnrepMap> {
    for m in [a, b, c] {
        if !m.belongs_to(s) {
            return Err(Error::input(
                "heap operands were built over different semigroups",
            ));
        }
    }
    let b_inv = b.inverse();
    let phi: Vec<usize> = c.phi().iter().map(|&i| a.get(b_inv[i])).collect();
    if !verify_action_hom(s, &phi) {
        return Err(Error::Invariant(format!(
            "t({:?}, {:?}, {:?}) = {phi:?} is not an unrepresentation",
            a.phi(),
            b.phi(),
            c.phi()
        )));
    }
    UnrepMap::new(s, phi)
}

/// A nonempty set of unrepresentations of one semigroup, with the ternary
/// operation tabulated over item indices.
#[derive(Debug, Clone)]
pub struct HeapCarrier {
    items: Vec<UnrepMap>,
    inverses: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl HeapCarrier {
    pub fn new(s: &TransSemigroup, items: Vec<UnrepMap>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::precondition("a heap needs at least one element"));
        }
        let mut index = HashMap::with_capacity(items.len());
        for (i, m) in items.iter().enumerate() {
            if !m.belongs_to(s) || !verify_action_hom(s, m.phi()) {
                return Err(Error::input(format!(
                    "heap item {i} is not an unrepresentation of this semigroup"
                )));
            }
            if index.insert(m.phi().to_vec(), i).is_some() {
                return Err(Error::input(format!("heap item {i} is a duplicate")));
            }
        }
        let inverses = items.iter().map(UnrepMap::inverse).collect();
        Ok(HeapCarrier {
            items,
            inverses,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[UnrepMap] {
        &self.items
    }

    pub fn item(&self, i: usize) -> &UnrepMap {
        &self.items[i]
    }

    pub fn position(&self, phi: &[usize]) -> Option<usize> {
        self.index.get(phi).copied()
    }

    /// The composite `a ∘ b⁻¹ ∘ c` as a raw map, not necessarily in the carrier.
    pub fn ternary_raw(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        let (a, b_inv) = (&self.items[a], &self.inverses[b]);
        self.items[c]
            .phi()
            .iter()
            .map(|&i| a.get(b_inv[i]))
            .collect()
    }

    /// Index of `t(a, b, c)`, or `None` if the result leaves the carrier.
    pub fn ternary(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        self.position(&self.ternary_raw(a, b, c))
    }

    /// The full ternary table, `None` if the carrier is not closed under `t`.
    fn ternary_table(&self) -> Option<Vec<usize>> {
        let m = self.len();
        let mut out = Vec::with_capacity(m * m * m);
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    out.push(self.ternary(a, b, c)?);
                }
            }
        }
        Some(out)
    }
}

/// Checks `t(x,x,y) = y = t(y,x,x)` on all pairs and para-associativity
/// `t(v,w,t(x,y,z)) = t(t(v,w,x),y,z)` on all quintuples.
pub fn heap_axioms_check(h: &HeapCarrier) -> bool {
    let m = h.len();
    let Some(t) = h.ternary_table() else {
        return false;
    };
    let at = |a: usize, b: usize, c: usize| t[(a * m + b) * m + c];
    for x in 0..m {
        for y in 0..m {
            if at(x, x, y) != y || at(y, x, x) != y {
                return false;
            }
        }
    }
    for v in 0..m {
        for w in 0..m {
            for x in 0..m {
                let vwx = at(v, w, x);
                for y in 0..m {
                    for z in 0..m {
                        if at(v, w, at(x, y, z)) != at(vwx, y, z) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// The group on the carrier with identity `e` and product `t(x, e, y)`.
pub fn group_from_identity(h: &HeapCarrier, e: usize) -> Result<GroupTable> {
    if e >= h.len() {
        return Err(Error::input(format!(
            "identity index {e} outside a heap of {} elements",
            h.len()
        )));
    }
    let m = h.len();
    let mut rows = vec![vec![0; m]; m];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = h.ternary(i, e, j).ok_or_else(|| {
                Error::Invariant(format!("t({i},{e},{j}) leaves the heap carrier"))
            })?;
        }
    }
    let g = GroupTable::new(rows).map_err(|err| Error::Invariant(err.to_string()))?;
    if g.identity() != e {
        return Err(Error::Invariant(format!(
            "group from identity {e} has identity {}",
            g.identity()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::unrep::{cyclic_unrep, enumerate_unrep_maps};

    fn heap_of(s: &TransSemigroup) -> HeapCarrier {
        HeapCarrier::new(s, enumerate_unrep_maps(s).unwrap()).unwrap()
    }

    #[test]
    fn heap_op_axiom_one_on_cyc4() {
        let s = catalog::cyc4();
        let maps = enumerate_unrep_maps(&s).unwrap();
        for a in &maps {
            for c in &maps {
                assert_eq!(&heap_op(&s, a, a, c).unwrap(), c);
                assert_eq!(&heap_op(&s, a, c, c).unwrap(), a);
            }
        }
    }

    /// Brute-force evaluation of the composite against the base-point maps.
    #[test]
    fn heap_op_on_base_point_maps() {
        let p = catalog::cycle(4);
        let base = |z: usize| cyclic_unrep(&p, z).unwrap();
        let (s, phi0) = base(0);
        let (_, phi1) = base(1);
        let (_, phi2) = base(2);
        let got = heap_op(&s, &phi0, &phi1, &phi2).unwrap();

        // x ↦ φ0(φ1⁻¹(φ2(x))), evaluated on transformations directly
        let elem = |m: &UnrepMap, x: usize| s.element(m.get(x)).clone();
        for x in 0..4 {
            let target = elem(&phi2, x);
            let y = (0..4).find(|&y| elem(&phi1, y) == target).unwrap();
            assert_eq!(s.element(got.get(x)), &elem(&phi0, y));
        }
        // φ_z(x) = p^(x-z), so the composite is x ↦ p^(x-1) = φ_1(x)
        assert_eq!(got, phi1);
    }

    #[test]
    fn heap_op_rejects_mixed_semigroups() {
        let a = enumerate_unrep_maps(&catalog::cyc4()).unwrap().remove(0);
        let b = enumerate_unrep_maps(&catalog::cliff4()).unwrap().remove(0);
        let s = catalog::cyc4();
        assert!(matches!(heap_op(&s, &a, &b, &a), Err(Error::Input(_))));
    }

    #[test]
    fn singleton_heap() {
        let s = TransSemigroup::closure(&[crate::Transformation::identity(1)], 10).unwrap();
        let h = heap_of(&s);
        assert_eq!(h.len(), 1);
        assert_eq!(
            heap_op(&s, h.item(0), h.item(0), h.item(0)).unwrap(),
            *h.item(0)
        );
        assert!(heap_axioms_check(&h));
        assert_eq!(group_from_identity(&h, 0).unwrap().order(), 1);
    }

    #[test]
    fn axioms_on_catalog_heaps() {
        for s in [catalog::cyc4(), catalog::reg_s3(), catalog::cliff4()] {
            assert!(heap_axioms_check(&heap_of(&s)));
        }
    }

    #[test]
    fn groups_from_heaps() {
        let h = heap_of(&catalog::cyc4());
        for e in 0..4 {
            let g = group_from_identity(&h, e).unwrap();
            assert_eq!(g.order(), 4);
            assert!(g.is_cyclic());
        }
        let h = heap_of(&catalog::reg_s3());
        let s3 = GroupTable::new(catalog::symmetric_table(3).rows()).unwrap();
        for e in 0..6 {
            let g = group_from_identity(&h, e).unwrap();
            assert!(is_isomorphic(&g, &s3).unwrap().is_some());
        }
        assert!(group_from_identity(&h, 6).is_err());
    }

    #[test]
    fn carrier_validation() {
        let s = catalog::cyc4();
        assert!(HeapCarrier::new(&s, vec![]).is_err());
        let m = enumerate_unrep_maps(&s).unwrap().remove(0);
        assert!(HeapCarrier::new(&s, vec![m.clone(), m]).is_err());
    }
}
