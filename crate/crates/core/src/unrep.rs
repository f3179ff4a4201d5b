//! Enumeration of unrepresentations.
//!
//! An unrepresentation of a transformation semigroup `S` over `X` is a
//! bijection `φ: X → S` with `φ(s(x)) = s ∘ φ(x)` for every `s ∈ S` and
//! `x ∈ X`. Each such map induces the semigroup structure `x·y = φ(x)(y)` on
//! `X`, whose left Cayley representation is exactly `S`.
//!
//! Several search routes are provided. They must all agree; the brute-force
//! route exists to check the others.

use std::cmp::Reverse;

use itertools::Itertools;

use crate::cayley::{represent, validate_table, MulTable};
use crate::error::{Error, Result};
use crate::semigroup::{natural_le, ClassificationReport, TransSemigroup, Transformation};

/// Largest degree for which [`enumerate_unreps_bruteforce`] will run by default.
pub const BRUTEFORCE_MAX_DEGREE: usize = 8;

/// A bijective action homomorphism `X → S`, stored as `phi[x]` = element index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnrepMap {
    phi: Vec<usize>,
    origin: u64,
}

impl UnrepMap {
    /// Checks `phi` against `s` and wraps it.
    pub fn new(s: &TransSemigroup, phi: Vec<usize>) -> Result<Self> {
        if !verify_action_hom(s, &phi) {
            return Err(Error::input(format!(
                "{phi:?} is not a bijective action homomorphism"
            )));
        }
        Ok(UnrepMap {
            phi,
            origin: s.fingerprint(),
        })
    }

    pub(crate) fn new_unchecked(s: &TransSemigroup, phi: Vec<usize>) -> Self {
        debug_assert!(verify_action_hom(s, &phi));
        UnrepMap {
            phi,
            origin: s.fingerprint(),
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.phi.len()
    }

    #[inline]
    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    #[inline]
    pub fn get(&self, x: usize) -> usize {
        self.phi[x]
    }

    /// `inverse()[i]` is the point sent to element `i`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.phi.len()];
        for (x, &i) in self.phi.iter().enumerate() {
            inv[i] = x;
        }
        inv
    }

    /// Fingerprint of the semigroup this map was built over.
    pub fn origin(&self) -> u64 {
        self.origin
    }

    pub fn belongs_to(&self, s: &TransSemigroup) -> bool {
        self.origin == s.fingerprint() && self.phi.len() == s.degree()
    }
}

/// An unrepresentation together with the multiplication it induces on `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unrepresentation {
    pub map: UnrepMap,
    pub induced: MulTable,
}

/// Necessary condition for existence: `|S| = |X|`.
pub fn existence_precheck(s: &TransSemigroup) -> bool {
    s.len() == s.degree()
}

/// True iff `phi` is a bijection `X → S` with `φ(s(x)) = s ∘ φ(x)` for all `s`, `x`.
pub fn verify_action_hom(s: &TransSemigroup, phi: &[usize]) -> bool {
    let n = s.degree();
    if phi.len() != n || s.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &i in phi {
        if i >= n || hit[i] {
            return false;
        }
        hit[i] = true;
    }
    (0..s.len()).all(|e| (0..n).all(|x| phi[s.act(e, x)] == s.comp(e, phi[x])))
}

/// Builds the induced multiplication `x·y = φ(x)(y)` and checks that its
/// representation reproduces `(S, φ)`.
pub fn induced_table(s: &TransSemigroup, map: &UnrepMap) -> Result<Unrepresentation> {
    if !map.belongs_to(s) {
        return Err(Error::input(
            "unrepresentation was built over a different semigroup",
        ));
    }
    let n = s.degree();
    let raw: Vec<Vec<usize>> = (0..n)
        .map(|x| s.element(map.get(x)).images().to_vec())
        .collect();
    let induced = validate_table(raw)
        .map_err(|e| Error::Invariant(format!("induced multiplication of {:?}: {e}", map.phi())))?;
    let rep = represent(&induced);
    if rep.semigroup != *s || rep.rep_map != map.phi() {
        return Err(Error::Invariant(format!(
            "representation of the induced table does not reproduce {:?}",
            map.phi()
        )));
    }
    Ok(Unrepresentation {
        map: map.clone(),
        induced,
    })
}

/// Search route used by [`enumerate_unreps_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Monoid route for monoids, idempotent route for other inverse
    /// semigroups, backtracking otherwise.
    #[default]
    Auto,
    Backtrack,
    Monoid,
    Idempotent,
    BruteForce,
}

/// All unrepresentations, ordered lexicographically by `phi`.
pub fn enumerate_unreps(s: &TransSemigroup) -> Result<Vec<Unrepresentation>> {
    enumerate_unreps_with(s, Strategy::Auto)
}

pub fn enumerate_unreps_with(
    s: &TransSemigroup,
    strategy: Strategy,
) -> Result<Vec<Unrepresentation>> {
    enumerate_maps(s, strategy)?
        .iter()
        .map(|m| induced_table(s, m))
        .collect()
}

/// Like [`enumerate_unreps`] but without building induced tables.
pub fn enumerate_unrep_maps(s: &TransSemigroup) -> Result<Vec<UnrepMap>> {
    enumerate_maps(s, Strategy::Auto)
}

pub fn enumerate_maps(s: &TransSemigroup, strategy: Strategy) -> Result<Vec<UnrepMap>> {
    match strategy {
        Strategy::BruteForce => bruteforce_maps(s, BRUTEFORCE_MAX_DEGREE),
        _ if !existence_precheck(s) => Ok(Vec::new()),
        Strategy::Monoid => monoid_maps(s),
        Strategy::Idempotent => idempotent_maps(s, &s.classify()),
        Strategy::Backtrack => Ok(backtrack_maps(s, None)),
        Strategy::Auto => {
            if s.is_monoid() {
                return monoid_maps(s);
            }
            let class = s.classify();
            if class.is_inverse {
                idempotent_maps(s, &class)
            } else {
                Ok(backtrack_maps(s, None))
            }
        }
    }
}

/// Backtracking enumeration with the search tree split across `jobs` threads
/// by the first assignment. Output order matches [`enumerate_unrep_maps`].
pub fn enumerate_unrep_maps_parallel(s: &TransSemigroup, jobs: usize) -> Vec<UnrepMap> {
    if !existence_precheck(s) {
        return Vec::new();
    }
    let jobs = jobs.max(1);
    if jobs == 1 {
        return backtrack_maps(s, None);
    }
    let n = s.degree();
    let firsts: Vec<usize> = (0..n).collect();
    let chunk = n.div_ceil(jobs);
    let mut out: Vec<UnrepMap> = std::thread::scope(|scope| {
        let handles: Vec<_> = firsts
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .flat_map(|&c| backtrack_maps(s, Some(c)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    out.sort();
    out
}

/// Checks every bijection `X → S`. Fails with a capacity error above `BRUTEFORCE_MAX_DEGREE`.
pub fn enumerate_unreps_bruteforce(s: &TransSemigroup) -> Result<Vec<Unrepresentation>> {
    enumerate_unreps_with(s, Strategy::BruteForce)
}

pub fn enumerate_unreps_bruteforce_bounded(
    s: &TransSemigroup,
    max_degree: usize,
) -> Result<Vec<Unrepresentation>> {
    bruteforce_maps(s, max_degree)?
        .iter()
        .map(|m| induced_table(s, m))
        .collect()
}

fn bruteforce_maps(s: &TransSemigroup, max_degree: usize) -> Result<Vec<UnrepMap>> {
    let n = s.degree();
    if n > max_degree {
        return Err(Error::capacity(
            format!("brute-force enumeration over {n}! bijections"),
            max_degree,
        ));
    }
    if !existence_precheck(s) {
        return Ok(Vec::new());
    }
    // `permutations` yields in lexicographic order, so no sort is needed.
    Ok((0..n)
        .permutations(n)
        .filter(|phi| verify_action_hom(s, phi))
        .map(|phi| UnrepMap::new_unchecked(s, phi))
        .collect())
}

/// Unrepresentations of a transformation monoid, found from the point sent to
/// the identity: `φ⁻¹(f) = f(φ⁻¹(1))`.
pub fn monoid_unreps(s: &TransSemigroup) -> Result<Vec<Unrepresentation>> {
    monoid_maps(s)?
        .iter()
        .map(|m| induced_table(s, m))
        .collect()
}

fn monoid_maps(s: &TransSemigroup) -> Result<Vec<UnrepMap>> {
    if !s.is_monoid() {
        return Err(Error::input("semigroup does not contain the identity map"));
    }
    if !existence_precheck(s) {
        return Ok(Vec::new());
    }
    let mut out: Vec<UnrepMap> = (0..s.degree())
        .filter_map(|z| phi_from_evaluation(s, z))
        .filter(|phi| verify_action_hom(s, phi))
        .map(|phi| UnrepMap::new_unchecked(s, phi))
        .collect();
    out.sort();
    Ok(out)
}

/// Inverts `ψ_z(f) = f(z)` when it is a bijection `S → X`.
pub(crate) fn phi_from_evaluation(s: &TransSemigroup, z: usize) -> Option<Vec<usize>> {
    let n = s.degree();
    let mut phi = vec![usize::MAX; n];
    for f in 0..s.len() {
        let x = s.act(f, z);
        if phi[x] != usize::MAX {
            return None;
        }
        phi[x] = f;
    }
    phi.iter().all(|&i| i != usize::MAX).then_some(phi)
}

/// `φ(p^k(z)) = p^k` for a single-cycle permutation `p`. Returns the cyclic
/// group generated by `p` alongside the map, whose indices refer to it.
pub fn cyclic_unrep(p: &Transformation, z: usize) -> Result<(TransSemigroup, UnrepMap)> {
    if !p.is_single_cycle() {
        return Err(Error::input(format!("{p:?} is not a single cycle")));
    }
    let n = p.degree();
    if z >= n {
        return Err(Error::input(format!("base point {z} outside 0..{n}")));
    }
    let s = TransSemigroup::closure(std::slice::from_ref(p), n)?;
    let mut phi = vec![0; n];
    let mut power = p.clone();
    for _ in 1..=n {
        let idx = s.index_of(&power).expect("powers of p lie in its closure");
        phi[power.apply(z)] = idx;
        power = p.compose_unchecked(&power);
    }
    let map = UnrepMap::new(&s, phi).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok((s, map))
}

/// Point-by-point backtracking. Each assignment `φ(x) = c` is propagated
/// along generators via `φ(g(x)) = g ∘ c`; conflicts with earlier values or
/// with injectivity prune the branch. With `first = Some(c)` only the subtree
/// where the first chosen point goes to `c` is explored.
fn backtrack_maps(s: &TransSemigroup, first: Option<usize>) -> Vec<UnrepMap> {
    let n = s.degree();
    if s.len() != n {
        return Vec::new();
    }
    let gens = s.generating_set();
    let order = point_order(s);
    let mut search = Backtracker {
        s,
        gens,
        order: &order,
        phi: vec![None; n],
        used: vec![false; n],
        trail: Vec::with_capacity(n),
        out: Vec::new(),
    };
    search.run(first);
    let mut out = search.out;
    out.sort();
    out
}

/// Points ordered by decreasing orbit size, so early choices force many values.
fn point_order(s: &TransSemigroup) -> Vec<usize> {
    let n = s.degree();
    let orbit_size = |x: usize| {
        let mut hit = vec![false; n];
        hit[x] = true;
        for e in 0..s.len() {
            hit[s.act(e, x)] = true;
        }
        hit.iter().filter(|&&h| h).count()
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (Reverse(orbit_size(x)), x));
    order
}

struct Backtracker<'a> {
    s: &'a TransSemigroup,
    gens: &'a [usize],
    order: &'a [usize],
    phi: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
    out: Vec<UnrepMap>,
}

impl Backtracker<'_> {
    fn run(&mut self, first: Option<usize>) {
        let Some(&x) = self.order.iter().find(|&&x| self.phi[x].is_none()) else {
            let phi: Vec<usize> = self.phi.iter().map(|v| v.unwrap()).collect();
            if verify_action_hom(self.s, &phi) {
                self.out.push(UnrepMap::new_unchecked(self.s, phi));
            }
            return;
        };
        let candidates: Vec<usize> = match first {
            Some(c) => vec![c],
            None => (0..self.s.len()).filter(|&c| !self.used[c]).collect(),
        };
        for c in candidates {
            let mark = self.trail.len();
            if self.assign(x, c) {
                self.run(None);
            }
            self.undo(mark);
        }
    }

    fn assign(&mut self, x: usize, c: usize) -> bool {
        if self.used[c] {
            return false;
        }
        self.set(x, c);
        let mut head = self.trail.len() - 1;
        while head < self.trail.len() {
            let y = self.trail[head];
            head += 1;
            let cy = self.phi[y].unwrap();
            for &g in self.gens {
                let z = self.s.act(g, y);
                let want = self.s.comp(g, cy);
                match self.phi[z] {
                    Some(v) if v == want => {}
                    Some(_) => return false,
                    None => {
                        if self.used[want] {
                            return false;
                        }
                        self.set(z, want);
                    }
                }
            }
        }
        true
    }

    fn set(&mut self, x: usize, c: usize) {
        self.phi[x] = Some(c);
        self.used[c] = true;
        self.trail.push(x);
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let c = self.phi[x].take().unwrap();
            self.used[c] = false;
        }
    }
}

/// Outcome of extending a choice of `φ⁻¹` on the idempotents to all of `S`
/// through `φ⁻¹(f) = f(φ⁻¹(e))` for idempotents `e ≥ f⁻¹f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForcedExtension {
    /// Every eligible `e` gave the same point for every `f`. `preimage[f]` is
    /// the forced value of `φ⁻¹(f)`.
    Consistent { preimage: Vec<usize> },
    /// Two eligible idempotents disagree on `element`.
    Conflict {
        element: usize,
        first: (usize, usize),
        second: (usize, usize),
    },
}

/// Extends `idempotent_points` (`φ⁻¹` on `class.idempotents`, in that order)
/// to every element, checking every eligible idempotent.
pub fn forced_extension(
    s: &TransSemigroup,
    class: &ClassificationReport,
    idempotent_points: &[usize],
) -> Result<ForcedExtension> {
    let inverses = class
        .inverses
        .as_ref()
        .ok_or_else(|| Error::precondition("semigroup is not inverse"))?;
    let idem = &class.idempotents;
    if idempotent_points.len() != idem.len() {
        return Err(Error::input(format!(
            "{} points for {} idempotents",
            idempotent_points.len(),
            idem.len()
        )));
    }
    let mut preimage = vec![0; s.len()];
    for f in 0..s.len() {
        let source = s.comp(inverses[f], f);
        let mut seen: Option<(usize, usize)> = None;
        for (k, &e) in idem.iter().enumerate() {
            if !natural_le(s, source, e) {
                continue;
            }
            let y = s.act(f, idempotent_points[k]);
            match seen {
                None => seen = Some((e, y)),
                Some((e0, y0)) if y0 != y => {
                    return Ok(ForcedExtension::Conflict {
                        element: f,
                        first: (e0, y0),
                        second: (e, y),
                    })
                }
                Some(_) => {}
            }
        }
        // f⁻¹f itself is always eligible.
        preimage[f] = seen.expect("f⁻¹f is an eligible idempotent").1;
    }
    Ok(ForcedExtension::Consistent { preimage })
}

/// Unrepresentations of an inverse semigroup, searching only over where the
/// idempotents go and forcing the rest.
pub fn idempotent_unreps(s: &TransSemigroup) -> Result<Vec<Unrepresentation>> {
    idempotent_maps(s, &s.classify())?
        .iter()
        .map(|m| induced_table(s, m))
        .collect()
}

fn idempotent_maps(s: &TransSemigroup, class: &ClassificationReport) -> Result<Vec<UnrepMap>> {
    if !class.is_inverse {
        return Err(Error::input("semigroup is not an inverse semigroup"));
    }
    if !existence_precheck(s) {
        return Ok(Vec::new());
    }
    let idem = &class.idempotents;
    let n = s.degree();
    let mut chosen: Vec<usize> = Vec::with_capacity(idem.len());
    let mut used = vec![false; n];
    let mut out = Vec::new();

    fn descend(
        s: &TransSemigroup,
        class: &ClassificationReport,
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<UnrepMap>,
    ) {
        let idem = &class.idempotents;
        let k = chosen.len();
        if k == idem.len() {
            if let Ok(ForcedExtension::Consistent { preimage }) = forced_extension(s, class, chosen)
            {
                let mut phi = vec![usize::MAX; s.degree()];
                for (f, &x) in preimage.iter().enumerate() {
                    if phi[x] != usize::MAX {
                        return;
                    }
                    phi[x] = f;
                }
                // The forced extension is only a candidate until checked.
                if verify_action_hom(s, &phi) {
                    out.push(UnrepMap::new_unchecked(s, phi));
                }
            }
            return;
        }
        let e = idem[k];
        for x in 0..s.degree() {
            // φ⁻¹(e) is fixed by e, and g(φ⁻¹(e)) = φ⁻¹(g) for assigned g ≤ e
            // (and symmetrically).
            if used[x] || s.act(e, x) != x {
                continue;
            }
            let compatible = idem[..k].iter().zip(chosen.iter()).all(|(&g, &y)| {
                (!natural_le(s, g, e) || s.act(g, x) == y)
                    && (!natural_le(s, e, g) || s.act(e, y) == x)
            });
            if !compatible {
                continue;
            }
            used[x] = true;
            chosen.push(x);
            descend(s, class, chosen, used, out);
            chosen.pop();
            used[x] = false;
        }
    }

    descend(s, class, &mut chosen, &mut used, &mut out);
    out.sort();
    Ok(out)
}

/// Result of checking `φ⁻¹(f) = f(φ⁻¹(e))` over every element `f` and every
/// idempotent `e ≥ f⁻¹f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentDeterminationReport {
    pub checks: usize,
    /// `(f, e)` pairs where the formula failed.
    pub failures: Vec<(usize, usize)>,
}

pub fn idempotent_determination_check(
    s: &TransSemigroup,
    map: &UnrepMap,
) -> Result<IdempotentDeterminationReport> {
    let class = s.classify();
    let inverses = class
        .inverses
        .as_ref()
        .ok_or_else(|| Error::precondition("semigroup is not inverse"))?;
    if !map.belongs_to(s) {
        return Err(Error::input(
            "unrepresentation was built over a different semigroup",
        ));
    }
    let inv = map.inverse();
    let mut checks = 0;
    let mut failures = Vec::new();
    for f in 0..s.len() {
        let source = s.comp(inverses[f], f);
        for &e in &class.idempotents {
            if natural_le(s, source, e) {
                checks += 1;
                if inv[f] != s.act(f, inv[e]) {
                    failures.push((f, e));
                }
            }
        }
    }
    Ok(IdempotentDeterminationReport { checks, failures })
}
