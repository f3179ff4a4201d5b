//! Transformations of `{0..n-1}` and the semigroups they generate.
//!
//! Every [`TransSemigroup`] keeps its elements sorted lexicographically by
//! image list. All element indices handed out anywhere in the crate refer to
//! that order.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

/// A total self-map of `{0..n-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::input("transformation of degree 0"));
        }
        if let Some((x, &y)) = images.iter().enumerate().find(|(_, &y)| y >= n) {
            return Err(Error::input(format!(
                "image of point {x} is {y}, outside 0..{n}"
            )));
        }
        Ok(Transformation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Transformation {
            images: (0..degree).collect(),
        }
    }

    pub fn constant(degree: usize, value: usize) -> Self {
        assert!(value < degree);
        Transformation {
            images: vec![value; degree],
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Transformation) -> Result<Transformation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Transformation) -> Transformation {
        Transformation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        for &y in &self.images {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<Transformation> {
        if !self.is_permutation() {
            return None;
        }
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(Transformation { images: inv })
    }

    pub fn pow(&self, k: usize) -> Transformation {
        let mut acc = Transformation::identity(self.degree());
        for _ in 0..k {
            acc = self.compose_unchecked(&acc);
        }
        acc
    }

    /// True iff this is a permutation consisting of one cycle through every point.
    pub fn is_single_cycle(&self) -> bool {
        if !self.is_permutation() {
            return false;
        }
        let mut len = 1;
        let mut x = self.images[0];
        while x != 0 {
            x = self.images[x];
            len += 1;
        }
        len == self.degree()
    }

    /// The image set `{f(x) : x ∈ X}`, sorted.
    pub fn image_set(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl TryFrom<Vec<usize>> for Transformation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Transformation::new(images)
    }
}

impl From<Transformation> for Vec<usize> {
    fn from(t: Transformation) -> Vec<usize> {
        t.images
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, "]")
    }
}

/// Pointwise composition `f ∘ g`.
pub fn compose(f: &Transformation, g: &Transformation) -> Result<Transformation> {
    f.compose(g)
}

/// True iff `p` is a permutation whose cycle decomposition is a single n-cycle.
pub fn is_single_cycle(p: &Transformation) -> bool {
    p.is_single_cycle()
}

/// A composition-closed set of transformations of one degree.
#[derive(Clone)]
pub struct TransSemigroup {
    degree: usize,
    elements: Vec<Transformation>,
    generators: Option<Vec<usize>>,
    comp: Vec<u32>,
    index: HashMap<Transformation, usize>,
    fingerprint: u64,
    spanning: OnceLock<Vec<usize>>,
}

impl TransSemigroup {
    /// Smallest composition-closed set containing `generators`.
    pub fn closure(generators: &[Transformation], cap: usize) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::input("empty generator list"))?;
        if cap == 0 {
            return Err(Error::input("closure cap must be at least 1"));
        }
        let degree = first.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut gens: Vec<Transformation> = Vec::new();
        let mut seen: HashSet<Transformation> = HashSet::new();
        for g in generators {
            if seen.insert(g.clone()) {
                gens.push(g.clone());
            }
        }
        if gens.len() > cap {
            return Err(Error::capacity("closure size", cap));
        }

        let mut list = gens.clone();
        let mut head = 0;
        while head < list.len() {
            let x = list[head].clone();
            head += 1;
            for g in &gens {
                for prod in [x.compose_unchecked(g), g.compose_unchecked(&x)] {
                    if seen.insert(prod.clone()) {
                        list.push(prod);
                        if list.len() > cap {
                            return Err(Error::capacity("closure size", cap));
                        }
                    }
                }
            }
        }

        let mut s = Self::build(degree, list).map_err(|e| match e {
            Error::Input(m) => Error::Invariant(m),
            other => other,
        })?;
        let mut gen_idx: Vec<usize> = gens.iter().map(|g| s.index[g]).collect();
        gen_idx.sort_unstable();
        s.generators = Some(gen_idx);
        Ok(s)
    }

    /// Wraps an already-closed set of transformations (duplicates are merged).
    pub fn from_elements(elements: Vec<Transformation>) -> Result<Self> {
        let first = elements
            .first()
            .ok_or_else(|| Error::input("empty element list"))?;
        let degree = first.degree();
        for t in &elements {
            if t.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: t.degree(),
                });
            }
        }
        Self::build(degree, elements)
    }

    fn build(degree: usize, mut elements: Vec<Transformation>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.len() > u32::MAX as usize {
            return Err(Error::capacity("element count", u32::MAX as usize));
        }
        let index: HashMap<Transformation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let m = elements.len();
        let mut comp = Vec::with_capacity(m * m);
        for f in &elements {
            for g in &elements {
                let fg = f.compose_unchecked(g);
                match index.get(&fg) {
                    Some(&k) => comp.push(k as u32),
                    None => {
                        return Err(Error::input(format!(
                            "element set is not closed: {f:?} ∘ {g:?} = {fg:?} is missing"
                        )))
                    }
                }
            }
        }
        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        elements.hash(&mut hasher);
        Ok(TransSemigroup {
            degree,
            elements,
            generators: None,
            comp,
            index,
            fingerprint: hasher.finish(),
            spanning: OnceLock::new(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, i: usize) -> &Transformation {
        &self.elements[i]
    }

    /// Index of `elements[i] ∘ elements[j]`.
    #[inline]
    pub fn comp(&self, i: usize, j: usize) -> usize {
        self.comp[i * self.elements.len() + j] as usize
    }

    /// Image of point `x` under element `i`.
    #[inline]
    pub fn act(&self, i: usize, x: usize) -> usize {
        self.elements[i].images[x]
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Generators supplied to [`TransSemigroup::closure`], if any.
    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    /// A generating set: the stored generators, or a greedily chosen one.
    pub fn generating_set(&self) -> &[usize] {
        if let Some(g) = &self.generators {
            return g;
        }
        self.spanning.get_or_init(|| self.greedy_generators())
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let m = self.len();
        let mut reached = vec![false; m];
        let mut gens = Vec::new();
        // Walk from the top of the canonical order: elements late in the order
        // tend to be permutations, which generate more.
        for cand in (0..m).rev() {
            if reached[cand] {
                continue;
            }
            gens.push(cand);
            let mut list: Vec<usize> = (0..m).filter(|&i| reached[i]).collect();
            reached[cand] = true;
            list.push(cand);
            let mut head = 0;
            while head < list.len() {
                let x = list[head];
                head += 1;
                for &g in &gens {
                    for p in [self.comp(x, g), self.comp(g, x)] {
                        if !reached[p] {
                            reached[p] = true;
                            list.push(p);
                        }
                    }
                }
            }
        }
        gens.sort_unstable();
        gens
    }

    /// Hash of the degree and element list, used to detect maps built over
    /// different semigroups.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Index of the identity transformation, if it belongs to the semigroup.
    pub fn identity(&self) -> Option<usize> {
        self.index_of(&Transformation::identity(self.degree))
    }

    pub fn is_monoid(&self) -> bool {
        self.identity().is_some()
    }

    /// The composition table, row-major.
    pub fn comp_rows(&self) -> Vec<Vec<usize>> {
        let m = self.len();
        (0..m)
            .map(|i| (0..m).map(|j| self.comp(i, j)).collect())
            .collect()
    }

    /// True iff `set` is closed under composition.
    pub fn is_closed_subset(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.len()];
        for &i in set {
            if i >= self.len() {
                return false;
            }
            member[i] = true;
        }
        set.iter()
            .all(|&a| set.iter().all(|&b| member[self.comp(a, b)]))
    }

    pub fn classify(&self) -> ClassificationReport {
        classify(self)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        idempotents(self)
    }
}

impl PartialEq for TransSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for TransSemigroup {}

impl fmt::Debug for TransSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TransSemigroup")
            .field("degree", &self.degree)
            .field("elements", &self.elements)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Structural flags of a finite semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub size: usize,
    pub degree: usize,
    pub is_monoid: bool,
    pub identity: Option<usize>,
    pub is_group: bool,
    pub is_inverse: bool,
    /// `inverses[x]` is the unique `y` with `xyx = x` and `yxy = y`.
    pub inverses: Option<Vec<usize>>,
    pub is_clifford: bool,
    pub is_left_zero: bool,
    pub idempotents: Vec<usize>,
    pub size_matches_degree: bool,
}

/// Classification over an abstract multiplication. `identity` is supplied by
/// the caller because transformation semigroups only count the identity map.
pub(crate) fn classify_abstract(
    size: usize,
    degree: usize,
    identity: Option<usize>,
    mul: impl Fn(usize, usize) -> usize,
) -> ClassificationReport {
    let idempotents: Vec<usize> = (0..size).filter(|&i| mul(i, i) == i).collect();

    let is_group = match identity {
        Some(u) => (0..size).all(|x| (0..size).any(|y| mul(x, y) == u && mul(y, x) == u)),
        None => false,
    };

    let mut inverses = Vec::with_capacity(size);
    let mut is_inverse = true;
    for x in 0..size {
        let mut found = None;
        let mut count = 0;
        for y in 0..size {
            if mul(mul(x, y), x) == x && mul(mul(y, x), y) == y {
                count += 1;
                found = Some(y);
                if count > 1 {
                    break;
                }
            }
        }
        if count != 1 {
            is_inverse = false;
            break;
        }
        inverses.push(found.unwrap());
    }

    let is_clifford = is_inverse
        && idempotents
            .iter()
            .all(|&e| (0..size).all(|x| mul(e, x) == mul(x, e)));
    let is_left_zero = (0..size).all(|i| (0..size).all(|j| mul(i, j) == i));

    ClassificationReport {
        size,
        degree,
        is_monoid: identity.is_some(),
        identity,
        is_group,
        is_inverse,
        inverses: is_inverse.then_some(inverses),
        is_clifford,
        is_left_zero,
        idempotents,
        size_matches_degree: size == degree,
    }
}

pub fn classify(s: &TransSemigroup) -> ClassificationReport {
    classify_abstract(s.len(), s.degree(), s.identity(), |i, j| s.comp(i, j))
}

/// Indices `i` with `elements[i] ∘ elements[i] = elements[i]`, in canonical order.
pub fn idempotents(s: &TransSemigroup) -> Vec<usize> {
    (0..s.len()).filter(|&i| s.comp(i, i) == i).collect()
}

/// Position of `f` relative to `e` in the natural order on idempotents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderVerdict {
    Equal,
    /// `f < e`
    Below,
    /// `e < f`
    Above,
    Incomparable,
}

/// `f ≤ e` iff `e∘f = f∘e = f`.
pub fn natural_le(s: &TransSemigroup, f: usize, e: usize) -> bool {
    s.comp(e, f) == f && s.comp(f, e) == f
}

pub fn natural_order(s: &TransSemigroup, e: usize, f: usize) -> Result<OrderVerdict> {
    for i in [e, f] {
        if i >= s.len() {
            return Err(Error::input(format!("element index {i} out of range")));
        }
        if s.comp(i, i) != i {
            return Err(Error::input(format!("element {i} is not idempotent")));
        }
    }
    Ok(if e == f {
        OrderVerdict::Equal
    } else if natural_le(s, f, e) {
        OrderVerdict::Below
    } else if natural_le(s, e, f) {
        OrderVerdict::Above
    } else {
        OrderVerdict::Incomparable
    })
}
