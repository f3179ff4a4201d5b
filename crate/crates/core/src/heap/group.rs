//! Finite groups as multiplication tables, and brute-force isomorphism search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted by [`is_isomorphic`].
pub const ISOMORPHISM_MAX_ORDER: usize = 64;

/// A finite group on `{0..order-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates associativity, the identity law and two-sided inverses.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::input("empty group table"));
        }
        if rows
            .iter()
            .any(|r| r.len() != order || r.iter().any(|&v| v >= order))
        {
            return Err(Error::input(
                "group table is not a square grid of in-range indices",
            ));
        }
        Self::from_fn(order, |x, y| rows[x][y])
    }

    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::input("empty group table"));
        }
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                table.push(mul(x, y));
            }
        }
        let at = |x: usize, y: usize| table[x * order + y];
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if at(at(x, y), z) != at(x, at(y, z)) {
                        return Err(Error::input(format!(
                            "group table not associative at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&u| (0..order).all(|x| at(u, x) == x && at(x, u) == x))
            .ok_or_else(|| Error::input("group table has no identity"))?;
        for x in 0..order {
            if !(0..order).any(|y| at(x, y) == identity && at(y, x) == identity) {
                return Err(Error::input(format!("element {x} has no inverse")));
            }
        }
        Ok(GroupTable {
            order,
            table,
            identity,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| self.table[x * self.order..(x + 1) * self.order].to_vec())
            .collect()
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.order)
            .find(|&y| self.mul(x, y) == self.identity)
            .expect("validated group has inverses")
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != self.identity {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|x| self.element_order(x) == self.order)
    }

    /// Element orders, sorted.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    /// Subgroup generated by `gens`, as a membership mask.
    fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = vec![self.identity];
        while let Some(a) = queue.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    queue.push(b);
                }
            }
        }
        seen
    }

    /// A generating set, chosen greedily from elements of largest order.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.order).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut covered = self.span(&gens);
        for x in by_order {
            if !covered[x] {
                gens.push(x);
                covered = self.span(&gens);
            }
        }
        gens
    }

    /// True iff `map` is a bijective homomorphism from `self` onto `other`.
    pub fn is_isomorphism(&self, other: &GroupTable, map: &[usize]) -> bool {
        if map.len() != self.order || other.order != self.order {
            return false;
        }
        let mut hit = vec![false; other.order];
        for &y in map {
            if y >= other.order || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        (0..self.order)
            .all(|a| (0..self.order).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])))
    }
}

/// Searches for an isomorphism `G → H` by choosing images of a generating
/// set of `G` and extending. Returns the map `G → H` if one exists.
pub fn is_isomorphic(g: &GroupTable, h: &GroupTable) -> Result<Option<Vec<usize>>> {
    for order in [g.order(), h.order()] {
        if order > ISOMORPHISM_MAX_ORDER {
            return Err(Error::capacity(
                format!("isomorphism search on a group of order {order}"),
                ISOMORPHISM_MAX_ORDER,
            ));
        }
    }
    if g.order() != h.order() || g.order_profile() != h.order_profile() {
        return Ok(None);
    }
    let gens = g.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let k = g.element_order(x);
            (0..h.order())
                .filter(|&y| h.element_order(y) == k)
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search_images(g, h, &gens, &candidates, &mut images))
}

fn search_images(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k == gens.len() {
        let map = extend(g, h, gens, images)?;
        return g.is_isomorphism(h, &map).then_some(map);
    }
    for &y in &candidates[k] {
        if images.contains(&y) {
            continue;
        }
        images.push(y);
        if let Some(m) = search_images(g, h, gens, candidates, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

/// Extends generator images to a map on all of `G` by right multiplication.
fn extend(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity()] = h.identity();
    let mut queue = vec![g.identity()];
    while let Some(a) = queue.pop() {
        for (&x, &y) in gens.iter().zip(images) {
            let b = g.mul(a, x);
            let want = h.mul(map[a], y);
            if map[b] == usize::MAX {
                map[b] = want;
                queue.push(b);
            } else if map[b] != want {
                return None;
            }
        }
    }
    Some(map)
}
