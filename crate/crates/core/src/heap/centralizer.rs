//! Centralizers of transformation semigroups in the full transformation monoid.

use crate::error::{Error, Result};
use crate::heap::group::{is_isomorphic, GroupTable};
use crate::heap::{group_from_identity, HeapCarrier};
use crate::semigroup::{TransSemigroup, Transformation};
use crate::unrep::enumerate_unrep_maps;

/// Largest degree scanned exhaustively (`n^n` candidates).
pub const CENTRALIZER_EXHAUSTIVE_MAX_DEGREE: usize = 6;

/// Self-maps of `X` commuting with every element of `S`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerSet {
    pub all_elements: Vec<Transformation>,
    /// The permutations among `all_elements`, in the same order.
    pub invertible: Vec<Transformation>,
}

impl CentralizerSet {
    fn from_members(mut all_elements: Vec<Transformation>) -> Self {
        all_elements.sort();
        let invertible = all_elements
            .iter()
            .filter(|c| c.is_permutation())
            .cloned()
            .collect();
        CentralizerSet {
            all_elements,
            invertible,
        }
    }

    /// The invertible members under composition, indexed as in `invertible`.
    pub fn invertible_group(&self) -> Result<GroupTable> {
        let inv = &self.invertible;
        let pos = |t: &Transformation| {
            inv.binary_search(t)
                .map_err(|_| Error::Invariant("invertible centralizer is not closed".into()))
        };
        let mut rows = vec![vec![0; inv.len()]; inv.len()];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = pos(&inv[i].compose_unchecked(&inv[j]))?;
            }
        }
        GroupTable::new(rows).map_err(|e| Error::Invariant(e.to_string()))
    }
}

fn commutes_with_generators(s: &TransSemigroup, c: &[usize]) -> bool {
    s.generating_set().iter().all(|&g| {
        let g = s.element(g);
        (0..c.len()).all(|x| c[g.apply(x)] == g.apply(c[x]))
    })
}

/// Exhaustive scan for `n ≤ 6`, generator-constrained backtracking above.
pub fn centralizer(s: &TransSemigroup) -> CentralizerSet {
    if s.degree() <= CENTRALIZER_EXHAUSTIVE_MAX_DEGREE {
        centralizer_exhaustive(s).expect("degree within the exhaustive bound")
    } else {
        centralizer_backtrack(s)
    }
}

/// Tests all `n^n` self-maps.
pub fn centralizer_exhaustive(s: &TransSemigroup) -> Result<CentralizerSet> {
    let n = s.degree();
    if n > CENTRALIZER_EXHAUSTIVE_MAX_DEGREE {
        return Err(Error::capacity(
            format!("exhaustive centralizer scan of degree {n}"),
            CENTRALIZER_EXHAUSTIVE_MAX_DEGREE,
        ));
    }
    let mut c = vec![0usize; n];
    let mut found = Vec::new();
    loop {
        if commutes_with_generators(s, &c) {
            found.push(Transformation::new(c.clone())?);
        }
        // odometer increment
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(CentralizerSet::from_members(found));
            }
            k -= 1;
            c[k] += 1;
            if c[k] < n {
                break;
            }
            c[k] = 0;
        }
    }
}

/// Builds `c` point by point, enforcing `c(g(x)) = g(c(x))` for each generator.
pub fn centralizer_backtrack(s: &TransSemigroup) -> CentralizerSet {
    let n = s.degree();
    let gens: Vec<&Transformation> = s.generating_set().iter().map(|&g| s.element(g)).collect();
    let mut c: Vec<Option<usize>> = vec![None; n];
    let mut trail = Vec::with_capacity(n);
    let mut found = Vec::new();

    fn propagate(
        gens: &[&Transformation],
        c: &mut [Option<usize>],
        trail: &mut Vec<usize>,
        start: usize,
    ) -> bool {
        let mut head = start;
        while head < trail.len() {
            let y = trail[head];
            head += 1;
            let cy = c[y].unwrap();
            for g in gens {
                let z = g.apply(y);
                let want = g.apply(cy);
                match c[z] {
                    Some(v) if v == want => {}
                    Some(_) => return false,
                    None => {
                        c[z] = Some(want);
                        trail.push(z);
                    }
                }
            }
        }
        true
    }

    fn descend(
        s: &TransSemigroup,
        gens: &[&Transformation],
        c: &mut Vec<Option<usize>>,
        trail: &mut Vec<usize>,
        found: &mut Vec<Transformation>,
    ) {
        let n = c.len();
        let Some(x) = (0..n).find(|&x| c[x].is_none()) else {
            let full: Vec<usize> = c.iter().map(|v| v.unwrap()).collect();
            if commutes_with_generators(s, &full) {
                found.push(Transformation::new(full).expect("values in range"));
            }
            return;
        };
        for v in 0..n {
            let mark = trail.len();
            c[x] = Some(v);
            trail.push(x);
            if propagate(gens, c, trail, mark) {
                descend(s, gens, c, trail, found);
            }
            while trail.len() > mark {
                let y = trail.pop().unwrap();
                c[y] = None;
            }
        }
    }

    descend(s, &gens, &mut c, &mut trail, &mut found);
    CentralizerSet::from_members(found)
}

/// Images of the invertible centralizer under `f ↦ e ∘ f` as heap indices,
/// checked to be a group isomorphism onto the heap group with identity `e`.
pub fn centralizer_to_heap(
    heap: &HeapCarrier,
    e: usize,
    cent: &CentralizerSet,
) -> Result<Vec<usize>> {
    let base = heap.item(e);
    let mut images = Vec::with_capacity(cent.invertible.len());
    for f in &cent.invertible {
        let phi: Vec<usize> = (0..f.degree()).map(|x| base.get(f.apply(x))).collect();
        let idx = heap.position(&phi).ok_or_else(|| {
            Error::TheoremViolation(format!("e ∘ {f:?} is not an unrepresentation"))
        })?;
        images.push(idx);
    }
    let source = cent.invertible_group()?;
    let target = group_from_identity(heap, e)?;
    if !source.is_isomorphism(&target, &images) {
        return Err(Error::TheoremViolation(
            "f ↦ e ∘ f is not an isomorphism onto the heap group".into(),
        ));
    }
    Ok(images)
}

/// Witnesses that the heap group is isomorphic to the invertible centralizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerTheoremVerdict {
    pub heap_order: usize,
    pub centralizer_order: usize,
    pub invertible_order: usize,
    /// Heap index → index into `CentralizerSet::invertible`.
    pub isomorphism: Vec<usize>,
    /// `f ↦ e ∘ f` (centralizer index → heap index) for the chosen identity.
    pub explicit_map: Vec<usize>,
}

pub fn theorem_centralizer_check(
    s: &TransSemigroup,
    identity: usize,
) -> Result<CentralizerTheoremVerdict> {
    let maps = enumerate_unrep_maps(s)?;
    if maps.is_empty() {
        return Err(Error::precondition(
            "the semigroup has no unrepresentations",
        ));
    }
    let heap = HeapCarrier::new(s, maps)?;
    let group = group_from_identity(&heap, identity)?;
    let cent = centralizer(s);
    let inv_group = cent.invertible_group()?;
    let isomorphism = is_isomorphic(&group, &inv_group)?.ok_or_else(|| {
        Error::TheoremViolation(format!(
            "heap group of order {} is not isomorphic to the invertible centralizer of order {}",
            group.order(),
            inv_group.order()
        ))
    })?;
    let explicit_map = centralizer_to_heap(&heap, identity, &cent)?;
    Ok(CentralizerTheoremVerdict {
        heap_order: heap.len(),
        centralizer_order: cent.all_elements.len(),
        invertible_order: cent.invertible.len(),
        isomorphism,
        explicit_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cyc4_invertible_centralizer_is_the_cycle() {
        let s = catalog::cyc4();
        let c = centralizer(&s);
        assert_eq!(c.invertible, s.elements().to_vec());
        assert!(c.invertible_group().unwrap().is_cyclic());
    }

    #[test]
    fn reg_s3_centralizer() {
        let c = centralizer(&catalog::reg_s3());
        assert_eq!(c.invertible.len(), 6);
        assert!(!c.invertible_group().unwrap().is_abelian());
    }

    #[test]
    fn degree_one() {
        let s = TransSemigroup::closure(&[Transformation::identity(1)], 10).unwrap();
        let c = centralizer(&s);
        assert_eq!(c.all_elements.len(), 1);
        assert_eq!(c.invertible.len(), 1);
    }

    #[test]
    fn backtracking_matches_scan() {
        for s in [
            catalog::cyc4(),
            catalog::cliff4(),
            catalog::lz4(),
            catalog::const3(),
            catalog::reg_s3(),
            catalog::klein_intransitive(),
        ] {
            assert_eq!(
                centralizer_backtrack(&s),
                centralizer_exhaustive(&s).unwrap()
            );
        }
    }

    #[test]
    fn exhaustive_bound() {
        let s = catalog::cyclic_group(7);
        assert_eq!(centralizer_exhaustive(&s).unwrap_err().code(), "capacity");
        assert_eq!(centralizer(&s).invertible.len(), 7);
    }

    #[test]
    fn theorem_examples() {
        let v = theorem_centralizer_check(&catalog::cyc4(), 0).unwrap();
        assert_eq!((v.heap_order, v.invertible_order), (4, 4));
        let v = theorem_centralizer_check(&catalog::reg_s3(), 0).unwrap();
        assert_eq!((v.heap_order, v.invertible_order), (6, 6));
        let v = theorem_centralizer_check(&catalog::cliff4(), 1).unwrap();
        assert_eq!((v.heap_order, v.invertible_order), (2, 2));
        assert_eq!(
            theorem_centralizer_check(&catalog::lz4(), 0)
                .unwrap_err()
                .code(),
            "precondition"
        );
    }
}
