//! Torsors attached to the heap of unrepresentations.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::heap::group::GroupTable;
use crate::heap::{group_from_identity, HeapCarrier};
use crate::semigroup::TransSemigroup;
use crate::unrep::{enumerate_unrep_maps, verify_action_hom, BRUTEFORCE_MAX_DEGREE};

/// True iff `action[g][u]` is a group action of `g` on `{0..|U|-1}` for which
/// `(g, x) ↦ (g·x, x)` is a bijection `G × U → U × U`.
pub fn torsor_check(g: &GroupTable, action: &[Vec<usize>]) -> bool {
    if action.len() != g.order() {
        return false;
    }
    let points = action[0].len();
    if points == 0 || action.iter().any(|row| row.len() != points) {
        return false;
    }
    if action.iter().flatten().any(|&u| u >= points) {
        return false;
    }
    // action laws
    if (0..points).any(|u| action[g.identity()][u] != u) {
        return false;
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            let ab = g.mul(a, b);
            if (0..points).any(|u| action[ab][u] != action[a][action[b][u]]) {
                return false;
            }
        }
    }
    // (g, x) ↦ (g·x, x) is bijective iff each orbit map g ↦ g·x is.
    if g.order() != points {
        return false;
    }
    (0..points).all(|x| {
        let mut hit = vec![false; points];
        (0..g.order()).all(|a| !std::mem::replace(&mut hit[action[a][x]], true))
    })
}

/// The group with identity `e` acting on its own heap by `x·y = t(x, e, y)`.
pub fn heap_torsor_action(h: &HeapCarrier, e: usize) -> Result<(GroupTable, Vec<Vec<usize>>)> {
    let g = group_from_identity(h, e)?;
    let action = g.rows();
    Ok((g, action))
}

/// The units of a transformation monoid acting on a set of unrepresentations
/// by `(u·φ)(x) = φ(x) ∘ u⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitAction {
    /// Element indices of the units, ascending. Group index `i` is `units[i]`.
    pub units: Vec<usize>,
    pub group: GroupTable,
    /// `action[i][j]` is the heap index of `units[i]·heap[j]`, or `None` if
    /// the result is not in the carrier.
    pub action: Vec<Vec<Option<usize>>>,
}

pub fn unit_action(s: &TransSemigroup, h: &HeapCarrier) -> Result<UnitAction> {
    let one = s
        .identity()
        .ok_or_else(|| Error::input("semigroup does not contain the identity map"))?;
    let m = s.len();
    let inverse_of = |u: usize| (0..m).find(|&v| s.comp(u, v) == one && s.comp(v, u) == one);
    let units: Vec<usize> = (0..m).filter(|&u| inverse_of(u).is_some()).collect();
    let pos = |x: usize| units.binary_search(&x).expect("units are closed");
    let group = GroupTable::from_fn(units.len(), |a, b| pos(s.comp(units[a], units[b])))
        .map_err(|e| Error::Invariant(e.to_string()))?;
    let action = units
        .iter()
        .map(|&u| {
            let u_inv = inverse_of(u).unwrap();
            (0..h.len())
                .map(|j| {
                    let phi: Vec<usize> =
                        h.item(j).phi().iter().map(|&f| s.comp(f, u_inv)).collect();
                    h.position(&phi)
                })
                .collect()
        })
        .collect();
    Ok(UnitAction {
        units,
        group,
        action,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSquareVerdict {
    pub pairs_checked: usize,
    /// Every `u·φ` is again an unrepresentation.
    pub preserves_unreps: bool,
    /// `β(u·φ) = u(β(φ))` for every unit `u` and unrepresentation `φ`.
    pub square_commutes: bool,
    /// The unit action on unrepresentations is free and transitive.
    pub torsor: bool,
}

impl BetaSquareVerdict {
    pub fn holds(&self) -> bool {
        self.preserves_unreps && self.square_commutes && self.torsor
    }
}

/// Checks that `β(φ) = φ⁻¹(1)` intertwines the unit action on
/// unrepresentations with evaluation on points.
pub fn beta_square_check(s: &TransSemigroup) -> Result<BetaSquareVerdict> {
    let one = s
        .identity()
        .ok_or_else(|| Error::input("semigroup does not contain the identity map"))?;
    let maps = enumerate_unrep_maps(s)?;
    if maps.is_empty() {
        return Err(Error::precondition("the monoid has no unrepresentations"));
    }
    let h = HeapCarrier::new(s, maps)?;
    let ua = unit_action(s, &h)?;
    let beta: Vec<usize> = h.items().iter().map(|m| m.inverse()[one]).collect();

    let mut pairs_checked = 0;
    let mut preserves_unreps = true;
    let mut square_commutes = true;
    for (i, &u) in ua.units.iter().enumerate() {
        for j in 0..h.len() {
            pairs_checked += 1;
            match ua.action[i][j] {
                Some(k) => {
                    debug_assert!(verify_action_hom(s, h.item(k).phi()));
                    if beta[k] != s.act(u, beta[j]) {
                        square_commutes = false;
                    }
                }
                None => {
                    preserves_unreps = false;
                    square_commutes = false;
                }
            }
        }
    }
    let torsor = preserves_unreps && {
        let table: Vec<Vec<usize>> = ua
            .action
            .iter()
            .map(|row| row.iter().map(|v| v.unwrap()).collect())
            .collect();
        torsor_check(&ua.group, &table)
    };
    Ok(BetaSquareVerdict {
        pairs_checked,
        preserves_unreps,
        square_commutes,
        torsor,
    })
}

/// For a transformation group: a bijection `B` from unrepresentations to
/// points with `B(u·φ) = u(B(φ))`, found by scanning all bijections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonTorsorWitness {
    /// `bijection[j]` is the point assigned to heap item `j`.
    pub bijection: Vec<usize>,
    /// Whether `φ ↦ φ⁻¹(1)` is itself an intertwining bijection.
    pub beta_is_witness: bool,
    /// Whether the unit action on unrepresentations is a torsor.
    pub torsor: bool,
}

pub fn epsilon_torsor_witness(s: &TransSemigroup) -> Result<Option<EpsilonTorsorWitness>> {
    if !s.classify().is_group {
        return Err(Error::input("semigroup is not a group"));
    }
    let n = s.degree();
    if n > BRUTEFORCE_MAX_DEGREE {
        return Err(Error::capacity(
            format!("bijection scan over {n}! candidates"),
            BRUTEFORCE_MAX_DEGREE,
        ));
    }
    let maps = enumerate_unrep_maps(s)?;
    if maps.is_empty() {
        return Err(Error::precondition("the group has no unrepresentations"));
    }
    let h = HeapCarrier::new(s, maps)?;
    let ua = unit_action(s, &h)?;
    let table: Vec<Vec<usize>> = ua
        .action
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    v.ok_or_else(|| {
                        Error::TheoremViolation("unit action leaves the unrepresentations".into())
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let intertwines = |b: &[usize]| {
        ua.units
            .iter()
            .enumerate()
            .all(|(i, &u)| (0..h.len()).all(|j| b[table[i][j]] == s.act(u, b[j])))
    };
    let one = s.identity().expect("groups contain the identity");
    let beta: Vec<usize> = h.items().iter().map(|m| m.inverse()[one]).collect();
    let bijection = (0..n).permutations(h.len()).find(|b| intertwines(b));
    Ok(bijection.map(|bijection| EpsilonTorsorWitness {
        bijection,
        beta_is_witness: intertwines(&beta),
        torsor: torsor_check(&ua.group, &table),
    }))
}
