//! Clifford transformation semigroups as semilattices of groups, and their
//! unrepresentations assembled from pieces on subsets of `X`.
//!
//! For a Clifford semigroup with idempotents `L`, each idempotent `e` has the
//! component group `F(e) = {x : x x⁻¹ = e}`. For `f ≤ e` the connecting map
//! `F(e) → F(f)` is `x ↦ f ∘ x`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{natural_le, TransSemigroup, Transformation};
use crate::unrep::{
    enumerate_unrep_maps, induced_table, phi_from_evaluation, verify_action_hom, UnrepMap,
    Unrepresentation, BRUTEFORCE_MAX_DEGREE,
};

/// The map `F(e) → F(f)` for `f ≤ e`, as `(x, f∘x)` pairs in ascending `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectingMap {
    pub from: usize,
    pub to: usize,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordDecomposition {
    /// Idempotent element indices, ascending.
    pub idempotents: Vec<usize>,
    /// Pairs `(f, e)` of idempotents with `f ≤ e`, reflexive pairs included.
    pub order_pairs: Vec<(usize, usize)>,
    /// `components[k]` is `F(idempotents[k])`, ascending.
    pub components: Vec<Vec<usize>>,
    /// Unique inverse of each element.
    pub inverses: Vec<usize>,
    /// One map per entry of `order_pairs`, same order.
    pub connecting: Vec<ConnectingMap>,
}

impl CliffordDecomposition {
    fn slot(&self, e: usize) -> Option<usize> {
        self.idempotents.binary_search(&e).ok()
    }

    /// `F(e)` for an idempotent `e`.
    pub fn component(&self, e: usize) -> Option<&[usize]> {
        self.slot(e).map(|k| self.components[k].as_slice())
    }

    /// The idempotent whose component contains `x`, namely `x x⁻¹`.
    pub fn component_of(&self, s: &TransSemigroup, x: usize) -> usize {
        s.comp(x, self.inverses[x])
    }

    pub fn connecting_map(&self, f: usize, e: usize) -> Option<&ConnectingMap> {
        self.connecting.iter().find(|c| c.to == f && c.from == e)
    }
}

pub fn decompose(s: &TransSemigroup) -> Result<CliffordDecomposition> {
    let class = s.classify();
    if !class.is_clifford {
        return Err(Error::input("semigroup is not a Clifford semigroup"));
    }
    let inverses = class.inverses.expect("Clifford semigroups are inverse");
    let idempotents = class.idempotents;

    let mut components = vec![Vec::new(); idempotents.len()];
    for (x, &inv) in inverses.iter().enumerate() {
        let e = s.comp(x, inv);
        let k = idempotents
            .binary_search(&e)
            .map_err(|_| Error::Invariant(format!("x x⁻¹ for x = {x} is not idempotent")))?;
        components[k].push(x);
    }

    let mut order_pairs = Vec::new();
    let mut connecting = Vec::new();
    for (ke, &e) in idempotents.iter().enumerate() {
        for &f in &idempotents {
            if natural_le(s, f, e) {
                order_pairs.push((f, e));
                connecting.push(ConnectingMap {
                    from: e,
                    to: f,
                    pairs: components[ke].iter().map(|&x| (x, s.comp(f, x))).collect(),
                });
            }
        }
    }
    order_pairs.sort_unstable();
    connecting.sort_by_key(|c| (c.to, c.from));

    let dec = CliffordDecomposition {
        idempotents,
        order_pairs,
        components,
        inverses,
        connecting,
    };
    check_decomposition(s, &dec)?;
    Ok(dec)
}

fn check_decomposition(s: &TransSemigroup, d: &CliffordDecomposition) -> Result<()> {
    let fail = |m: String| Err(Error::Invariant(m));
    let total: usize = d.components.iter().map(Vec::len).sum();
    if total != s.len() {
        return fail("components do not partition the semigroup".into());
    }
    for (k, &e) in d.idempotents.iter().enumerate() {
        let comp = &d.components[k];
        for &x in comp {
            if s.comp(e, x) != x || s.comp(x, e) != x {
                return fail(format!("{e} is not the identity of F({e}) at {x}"));
            }
            if comp.binary_search(&d.inverses[x]).is_err() {
                return fail(format!("inverse of {x} leaves F({e})"));
            }
            for &y in comp {
                if comp.binary_search(&s.comp(x, y)).is_err() {
                    return fail(format!("F({e}) is not closed at ({x},{y})"));
                }
            }
        }
    }
    for c in &d.connecting {
        let image = |x: usize| c.pairs.iter().find(|p| p.0 == x).map(|p| p.1);
        let target = d.component(c.to).unwrap_or(&[]);
        for &(x, fx) in &c.pairs {
            if target.binary_search(&fx).is_err() {
                return fail(format!(
                    "connecting map {}→{} leaves F({})",
                    c.from, c.to, c.to
                ));
            }
            for &(y, fy) in &c.pairs {
                if image(s.comp(x, y)) != Some(s.comp(fx, fy)) {
                    return fail(format!(
                        "connecting map {}→{} is not a homomorphism",
                        c.from, c.to
                    ));
                }
            }
        }
    }
    // connect(g ≤ f) ∘ connect(f ≤ e) = connect(g ≤ e)
    for outer in &d.connecting {
        for inner in d.connecting.iter().filter(|c| c.to == outer.from) {
            let Some(direct) = d.connecting_map(outer.to, inner.from) else {
                return fail("natural order is not transitive".into());
            };
            for &(x, fx) in &inner.pairs {
                let via = outer.pairs.iter().find(|p| p.0 == fx).map(|p| p.1);
                let straight = direct.pairs.iter().find(|p| p.0 == x).map(|p| p.1);
                if via != straight {
                    return fail(format!(
                        "connecting maps are not functorial on {} ≥ {} ≥ {}",
                        inner.from, outer.from, outer.to
                    ));
                }
            }
        }
    }
    Ok(())
}

/// True iff `{s(y) : s ∈ sub, y ∈ carrier}` equals `carrier`.
pub fn is_action_closed(s: &TransSemigroup, sub: &[usize], carrier: &[usize]) -> bool {
    let n = s.degree();
    if carrier.iter().any(|&y| y >= n) || sub.iter().any(|&i| i >= s.len()) {
        return false;
    }
    let mut in_carrier = vec![false; n];
    for &y in carrier {
        in_carrier[y] = true;
    }
    let mut hit = vec![false; n];
    for &i in sub {
        for &y in carrier {
            let z = s.act(i, y);
            if !in_carrier[z] {
                return false;
            }
            hit[z] = true;
        }
    }
    carrier.iter().all(|&y| hit[y])
}

/// Restrictions of the elements of `S` to an action-closed subset `Y`.
///
/// Restricted maps act on positions `0..|Y|` of `base`. Distinct elements of
/// `S` may restrict to the same map; `quotient` records where each goes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deflation {
    pub base: Vec<usize>,
    pub elements: Vec<Transformation>,
    /// `quotient[i]` is the deflation index of `elements_of_S[i]` restricted to `Y`.
    pub quotient: Vec<usize>,
    pub table: Vec<Vec<usize>>,
}

impl Deflation {
    pub fn as_semigroup(&self) -> Result<TransSemigroup> {
        TransSemigroup::from_elements(self.elements.clone())
    }
}

fn normalize_points(s: &TransSemigroup, points: &[usize]) -> Result<Vec<usize>> {
    let mut v = points.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.len() != points.len() {
        return Err(Error::input("point set has duplicates"));
    }
    if let Some(&y) = v.iter().find(|&&y| y >= s.degree()) {
        return Err(Error::input(format!("point {y} outside 0..{}", s.degree())));
    }
    Ok(v)
}

pub fn deflate(s: &TransSemigroup, carrier: &[usize]) -> Result<Deflation> {
    let base = normalize_points(s, carrier)?;
    let all: Vec<usize> = (0..s.len()).collect();
    if base.is_empty() || !is_action_closed(s, &all, &base) {
        return Err(Error::input(format!(
            "{base:?} is not closed under the action"
        )));
    }
    let pos = |y: usize| base.binary_search(&y).expect("action-closed");
    let restricted: Vec<Transformation> = s
        .elements()
        .iter()
        .map(|f| Transformation::new(base.iter().map(|&y| pos(f.apply(y))).collect()))
        .collect::<Result<_>>()?;
    let mut elements = restricted.clone();
    elements.sort();
    elements.dedup();
    let quotient: Vec<usize> = restricted
        .iter()
        .map(|r| elements.binary_search(r).expect("present"))
        .collect();
    // f_Y ∘ g_Y = (f ∘ g)_Y, so the table can be read off through any representatives.
    let rep: Vec<usize> = (0..elements.len())
        .map(|k| {
            quotient
                .iter()
                .position(|&q| q == k)
                .expect("every class is hit")
        })
        .collect();
    let table: Vec<Vec<usize>> = rep
        .iter()
        .map(|&a| rep.iter().map(|&b| quotient[s.comp(a, b)]).collect())
        .collect();
    for (i, row) in table.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            if elements[i].compose_unchecked(&elements[j]) != elements[k] {
                return Err(Error::Invariant("restriction is not multiplicative".into()));
            }
        }
    }
    Ok(Deflation {
        base,
        elements,
        quotient,
        table,
    })
}

/// A bijection from an action-closed subset `Y` onto a subsemigroup `S'`
/// that intertwines evaluation with composition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Underrepresentation {
    /// `Y`, ascending.
    pub carrier: Vec<usize>,
    /// `S'`, ascending element indices.
    pub sub: Vec<usize>,
    /// `phi[k]` is the element assigned to `carrier[k]`.
    pub phi: Vec<usize>,
    /// `y₁·y₂ = φ(y₁)(y₂)` over positions in `carrier`.
    pub induced: Vec<Vec<usize>>,
}

/// Checks bijectivity of `phi` onto `sub`, action closure of `carrier`, and
/// `φ(s(y)) = s ∘ φ(y)` for `s ∈ sub`, `y ∈ carrier`. `phi` is aligned with `carrier`.
pub fn verify_underrep(
    s: &TransSemigroup,
    sub: &[usize],
    carrier: &[usize],
    phi: &[usize],
) -> bool {
    if carrier.len() != phi.len() || carrier.len() != sub.len() || carrier.is_empty() {
        return false;
    }
    let mut c = carrier.to_vec();
    c.sort_unstable();
    c.dedup();
    let mut p = phi.to_vec();
    p.sort_unstable();
    p.dedup();
    let mut sorted_sub = sub.to_vec();
    sorted_sub.sort_unstable();
    if c.len() != carrier.len() || p != sorted_sub {
        return false;
    }
    if !is_action_closed(s, sub, carrier) {
        return false;
    }
    let lookup = |y: usize| carrier.iter().position(|&c| c == y).map(|k| phi[k]);
    sub.iter().all(|&e| {
        carrier
            .iter()
            .zip(phi)
            .all(|(&y, &py)| lookup(s.act(e, y)) == Some(s.comp(e, py)))
    })
}

/// Restricts `φ` to `Y = φ⁻¹(S')` for a subsemigroup `S'`.
pub fn restrict_unrep(
    s: &TransSemigroup,
    map: &UnrepMap,
    sub: &[usize],
) -> Result<Underrepresentation> {
    if !map.belongs_to(s) {
        return Err(Error::input(
            "unrepresentation was built over a different semigroup",
        ));
    }
    let mut sub = sub.to_vec();
    sub.sort_unstable();
    sub.dedup();
    if sub.is_empty() || !s.is_closed_subset(&sub) {
        return Err(Error::input("element set is not a subsemigroup"));
    }
    let carrier: Vec<usize> = (0..s.degree())
        .filter(|&x| sub.binary_search(&map.get(x)).is_ok())
        .collect();
    let phi: Vec<usize> = carrier.iter().map(|&x| map.get(x)).collect();
    if !verify_underrep(s, &sub, &carrier, &phi) {
        return Err(Error::TheoremViolation(format!(
            "restriction of {:?} to {sub:?} is not an underrepresentation",
            map.phi()
        )));
    }
    let pos = |y: usize| carrier.binary_search(&y).expect("action-closed");
    let induced = phi
        .iter()
        .map(|&f| carrier.iter().map(|&y| pos(s.act(f, y))).collect())
        .collect();
    Ok(Underrepresentation {
        carrier,
        sub,
        phi,
        induced,
    })
}

/// Both sides of the compatibility criterion for a bijection `X → S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCVerdict {
    /// `φ` is an action homomorphism.
    pub action_hom: bool,
    /// Every `φ_e` is an underrepresentation of `F(e)` and every square
    /// `φ_f(f(y)) = f ∘ φ_e(y)` for `f ≤ e` commutes.
    pub components_compatible: bool,
}

impl TheoremCVerdict {
    pub fn agree(&self) -> bool {
        self.action_hom == self.components_compatible
    }
}

pub fn theorem_c_check(s: &TransSemigroup, phi: &[usize]) -> Result<TheoremCVerdict> {
    let dec = decompose(s)?;
    theorem_c_check_with(s, &dec, phi)
}

/// As [`theorem_c_check`] with a precomputed decomposition.
pub fn theorem_c_check_with(
    s: &TransSemigroup,
    dec: &CliffordDecomposition,
    phi: &[usize],
) -> Result<TheoremCVerdict> {
    let n = s.degree();
    if s.len() != n {
        return Err(Error::precondition("|S| differs from the degree"));
    }
    let mut hit = vec![false; n];
    if phi.len() != n
        || phi
            .iter()
            .any(|&i| i >= n || std::mem::replace(&mut hit[i], true))
    {
        return Err(Error::input("candidate map is not a bijection X → S"));
    }
    let action_hom = verify_action_hom(s, phi);

    let components_compatible = dec.idempotents.iter().enumerate().all(|(k, &e)| {
        let comp = &dec.components[k];
        let carrier: Vec<usize> = (0..n)
            .filter(|&x| comp.binary_search(&phi[x]).is_ok())
            .collect();
        let local: Vec<usize> = carrier.iter().map(|&x| phi[x]).collect();
        verify_underrep(s, comp, &carrier, &local)
            && dec.connecting.iter().filter(|c| c.from == e).all(|c| {
                carrier
                    .iter()
                    .all(|&y| phi[s.act(c.to, y)] == s.comp(c.to, phi[y]))
            })
    });

    Ok(TheoremCVerdict {
        action_hom,
        components_compatible,
    })
}

fn clifford_monoid_precondition(m: &TransSemigroup) -> Result<()> {
    let class = m.classify();
    if !class.is_clifford || !class.is_monoid {
        return Err(Error::input("semigroup is not a Clifford monoid"));
    }
    Ok(())
}

/// Unrepresentations of a Clifford monoid obtained as inverses of the
/// evaluation maps `ψ_y(f) = f(y)`, cross-checked against the general search.
pub fn clifford_monoid_unreps(m: &TransSemigroup) -> Result<Vec<Unrepresentation>> {
    clifford_monoid_precondition(m)?;
    if m.len() != m.degree() {
        return Ok(Vec::new());
    }
    let one = m.identity().expect("monoid");
    let dec = decompose(m)?;
    let top = dec.component(one).expect("identity is idempotent");
    let mut maps: Vec<UnrepMap> = (0..m.degree())
        .filter_map(|y| phi_from_evaluation(m, y))
        .filter(|phi| verify_action_hom(m, phi))
        .map(|phi| UnrepMap::new(m, phi))
        .collect::<Result<_>>()?;
    maps.sort();

    for map in &maps {
        let y = map.inverse()[one];
        if top.binary_search(&map.get(y)).is_err() {
            return Err(Error::TheoremViolation(format!(
                "evaluation point {y} is outside φ⁻¹(F(1))"
            )));
        }
    }
    let general = enumerate_unrep_maps(m)?;
    if general != maps {
        return Err(Error::TheoremViolation(format!(
            "evaluation maps give {} unrepresentations, the general search {}",
            maps.len(),
            general.len()
        )));
    }
    maps.iter().map(|map| induced_table(m, map)).collect()
}

/// Per-idempotent existence of an underrepresentation of `F(e)`, compared
/// with existence of an unrepresentation of the whole monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentExistence {
    /// `(e, F(e) has an underrepresentation)` for each idempotent.
    pub per_idempotent: Vec<(usize, bool)>,
    pub all_components: bool,
    pub unreps_exist: bool,
}

impl ComponentExistence {
    pub fn consistent(&self) -> bool {
        self.all_components == self.unreps_exist
    }
}

/// Searches every subset `Y` of size `|F(e)|` and every bijection `Y → F(e)`.
pub fn component_underrep_existence(m: &TransSemigroup) -> Result<ComponentExistence> {
    clifford_monoid_precondition(m)?;
    if m.len() != m.degree() {
        return Err(Error::precondition("|M| differs from the degree"));
    }
    if m.degree() > BRUTEFORCE_MAX_DEGREE {
        return Err(Error::capacity(
            format!("underrepresentation search on degree {}", m.degree()),
            BRUTEFORCE_MAX_DEGREE,
        ));
    }
    let dec = decompose(m)?;
    let per_idempotent: Vec<(usize, bool)> = dec
        .idempotents
        .iter()
        .zip(&dec.components)
        .map(|(&e, comp)| (e, find_underrep(m, comp).is_some()))
        .collect();
    let all_components = per_idempotent.iter().all(|&(_, ok)| ok);
    let unreps_exist = !enumerate_unrep_maps(m)?.is_empty();
    Ok(ComponentExistence {
        per_idempotent,
        all_components,
        unreps_exist,
    })
}

/// First `(Y, φ_Y)` making `sub` an underrepresentation, in lexicographic order.
pub fn find_underrep(s: &TransSemigroup, sub: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let k = sub.len();
    (0..s.degree())
        .combinations(k)
        .filter(|y| is_action_closed(s, sub, y))
        .find_map(|y| {
            sub.iter()
                .copied()
                .permutations(k)
                .find(|phi| verify_underrep(s, sub, &y, phi))
                .map(|phi| (y, phi))
        })
}
