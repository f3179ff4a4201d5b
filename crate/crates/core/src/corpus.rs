//! Generated families of small semigroups for sweeps, oracle comparisons and
//! benchmarks.
//!
//! Abstract tables are produced by backtracking over table cells with
//! incremental associativity checks and deduplicated up to isomorphism.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::cayley::{represent, MulTable};
use crate::semigroup::{TransSemigroup, Transformation};

/// Extra structure imposed while filling tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Semigroup,
    /// Element 0 is the identity.
    Monoid,
    /// Element 0 is the identity and rows and columns are permutations.
    Group,
}

/// Every associative table of the given order and kind, with labels as
/// produced (not deduplicated).
pub fn labeled_tables(order: usize, kind: TableKind) -> Vec<MulTable> {
    let n = order;
    if n == 0 {
        return Vec::new();
    }
    const EMPTY: usize = usize::MAX;
    let mut t = vec![EMPTY; n * n];
    if kind != TableKind::Semigroup {
        for x in 0..n {
            t[x] = x;
            t[x * n] = x;
        }
    }
    let free: Vec<usize> = (0..n * n).filter(|&c| t[c] == EMPTY).collect();
    let mut out = Vec::new();
    fill(n, kind, &free, 0, &mut t, &mut out);
    out
}

fn fill(
    n: usize,
    kind: TableKind,
    free: &[usize],
    k: usize,
    t: &mut [usize],
    out: &mut Vec<MulTable>,
) {
    let Some(&cell) = free.get(k) else {
        out.push(MulTable::from_fn_unchecked(n, |x, y| t[x * n + y]));
        return;
    };
    let (x, y) = (cell / n, cell % n);
    for v in 0..n {
        if kind == TableKind::Group
            && ((0..n).any(|z| t[x * n + z] == v) || (0..n).any(|z| t[z * n + y] == v))
        {
            continue;
        }
        t[cell] = v;
        if consistent_at(n, t, x, y) {
            fill(n, kind, free, k + 1, t, out);
        }
    }
    t[cell] = usize::MAX;
}

/// Checks `(ab)c = a(bc)` on every triple in which `x·y` is one of the four
/// products involved and all four are defined.
fn consistent_at(n: usize, t: &[usize], x: usize, y: usize) -> bool {
    const EMPTY: usize = usize::MAX;
    let at = |a: usize, b: usize| t[a * n + b];
    let ok = |a: usize, b: usize, c: usize| {
        let ab = at(a, b);
        let bc = at(b, c);
        if ab == EMPTY || bc == EMPTY {
            return true;
        }
        let l = at(ab, c);
        let r = at(a, bc);
        l == EMPTY || r == EMPTY || l == r
    };
    for z in 0..n {
        if !ok(x, y, z) || !ok(z, x, y) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if (at(a, b) == x && !ok(a, b, y)) || (at(a, b) == y && !ok(x, a, b)) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically least relabeling of the table.
pub fn canonical_form(t: &MulTable) -> MulTable {
    let n = t.order();
    (0..n)
        .permutations(n)
        .map(|p| t.relabel(&p))
        .min_by(|a, b| a.rows().cmp(&b.rows()))
        .expect("at least one permutation")
}

/// Keeps one table per isomorphism class, in canonical form, sorted.
pub fn dedup_isomorphic(tables: impl IntoIterator<Item = MulTable>) -> Vec<MulTable> {
    let keys: BTreeSet<Vec<Vec<usize>>> = tables
        .into_iter()
        .map(|t| canonical_form(&t).rows())
        .collect();
    keys.into_iter()
        .map(|rows| MulTable::new(rows).expect("canonical forms are associative"))
        .collect()
}

pub fn semigroups_up_to_iso(order: usize) -> Vec<MulTable> {
    dedup_isomorphic(labeled_tables(order, TableKind::Semigroup))
}

pub fn monoids_up_to_iso(order: usize) -> Vec<MulTable> {
    dedup_isomorphic(labeled_tables(order, TableKind::Monoid))
}

pub fn groups_up_to_iso(order: usize) -> Vec<MulTable> {
    dedup_isomorphic(labeled_tables(order, TableKind::Group))
}

/// Inverse semigroups of the given order, up to isomorphism, filtered from
/// the full labeled enumeration. Practical up to order 5.
pub fn inverse_semigroups_up_to_iso(order: usize) -> Vec<MulTable> {
    dedup_isomorphic(
        labeled_tables(order, TableKind::Semigroup)
            .into_iter()
            .filter(|t| t.classify().is_inverse),
    )
}

/// The abstract tables used for sweeps: all semigroups of order ≤ 4, monoids
/// and inverse semigroups of order 5, groups of order ≤ 6, and a few named
/// products.
pub fn table_corpus() -> Vec<MulTable> {
    let mut out: Vec<MulTable> = (1..=4).flat_map(semigroups_up_to_iso).collect();
    out.extend(monoids_up_to_iso(5));
    out.extend(inverse_semigroups_up_to_iso(5));
    out.extend(groups_up_to_iso(6));
    out.push(catalog::product_table(
        &catalog::cyclic_table(2),
        &catalog::two_chain_table(),
    ));
    out.push(catalog::product_table(
        &catalog::cyclic_table(4),
        &catalog::two_chain_table(),
    ));
    dedup_isomorphic(out)
}

/// A named transformation semigroup.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub semigroup: TransSemigroup,
}

fn instance(name: impl Into<String>, semigroup: TransSemigroup) -> Instance {
    Instance {
        name: name.into(),
        semigroup,
    }
}

/// All transformations of degree `n`, lexicographically.
pub fn all_transformations(n: usize) -> Vec<Transformation> {
    (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(|v| Transformation::new(v).expect("values in range"))
        .collect()
}

/// Closures of one or two generators of degree `n` whose size equals `n`,
/// one per distinct element set. Pairs are used for `n ≤ pair_max`.
pub fn square_closures(n: usize, pair_max: usize) -> Vec<TransSemigroup> {
    let all = all_transformations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut keep = |s: TransSemigroup| {
        if s.len() == n && seen.insert(s.elements().to_vec()) {
            out.push(s);
        }
    };
    for g in &all {
        if let Ok(s) = TransSemigroup::closure(std::slice::from_ref(g), n + 1) {
            keep(s);
        }
    }
    if n <= pair_max {
        for (a, b) in all.iter().tuple_combinations() {
            if let Ok(s) = TransSemigroup::closure(&[a.clone(), b.clone()], n + 1) {
                keep(s);
            }
        }
    }
    out
}

/// Left-zero bands of size `n` on `n` points: sets of idempotents with
/// `m ∘ k = m` for all members.
pub fn left_zero_bands(n: usize) -> Vec<TransSemigroup> {
    let idem: Vec<Transformation> = all_transformations(n)
        .into_iter()
        .filter(|f| f.compose_unchecked(f) == *f)
        .collect();
    let compatible = |a: &Transformation, b: &Transformation| {
        a.compose_unchecked(b) == *a && b.compose_unchecked(a) == *b
    };
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();

    fn grow(
        idem: &[Transformation],
        compatible: &dyn Fn(&Transformation, &Transformation) -> bool,
        n: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<TransSemigroup>,
    ) {
        if chosen.len() == n {
            let elems = chosen.iter().map(|&i| idem[i].clone()).collect();
            out.push(TransSemigroup::from_elements(elems).expect("left-zero bands are closed"));
            return;
        }
        for i in start..idem.len() {
            if chosen.iter().all(|&j| compatible(&idem[i], &idem[j])) {
                chosen.push(i);
                grow(idem, compatible, n, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }

    grow(&idem, &compatible, n, 0, &mut chosen, &mut out);
    out
}

/// Transformation semigroups used for oracle comparisons and sweeps:
/// named catalog entries, regular representations of the table corpus,
/// closures with `|S| = n` on up to four points, and left-zero bands.
pub fn transformation_corpus() -> Vec<Instance> {
    let mut out = vec![
        instance("LZ4", catalog::lz4()),
        instance("CONST3", catalog::const3()),
        instance("CYC4", catalog::cyc4()),
        instance("CLIFF4", catalog::cliff4()),
        instance("KLEIN_INTRANSITIVE", catalog::klein_intransitive()),
        instance("REG_S3", catalog::reg_s3()),
    ];
    for (i, t) in table_corpus().iter().enumerate() {
        let r = represent(t);
        if r.faithful {
            out.push(instance(format!("rep{}#{i}", t.order()), r.semigroup));
        }
    }
    for n in 1..=4 {
        for (i, s) in square_closures(n, 3).into_iter().enumerate() {
            out.push(instance(format!("closure{n}#{i}"), s));
        }
    }
    for n in 2..=4 {
        for (i, s) in left_zero_bands(n).into_iter().enumerate() {
            out.push(instance(format!("lzb{n}#{i}"), s));
        }
    }
    out
}

/// `count` uniformly random permutations of `0..n` from a seeded generator.
pub fn random_bijections(n: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect()
}

/// Every bijection `X → S` when `n! ≤ 5040`, else `samples` random ones.
pub fn candidate_bijections(n: usize, samples: usize, seed: u64) -> Vec<Vec<usize>> {
    if n <= 7 {
        (0..n).permutations(n).collect()
    } else {
        random_bijections(n, samples, seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Known counts of semigroups, monoids and groups up to isomorphism.

    #[test]
    fn semigroup_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| semigroups_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 5, 24, 188]);
    }

    #[test]
    fn monoid_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| monoids_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 35]);
    }

    #[test]
    fn group_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| groups_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2]);
    }

    #[test]
    fn left_zero_band_counts() {
        // lz4 is one of the bands on four points
        assert!(left_zero_bands(4).iter().any(|s| *s == catalog::lz4()));
        for n in 2..=4 {
            for s in left_zero_bands(n) {
                assert!(s.classify().is_left_zero);
            }
        }
    }

    #[test]
    fn square_closures_have_degree_size() {
        for s in square_closures(3, 3) {
            assert_eq!(s.len(), 3);
        }
        assert!(square_closures(4, 3).iter().any(|s| *s == catalog::cyc4()));
    }

    #[test]
    fn seeded_bijections_repeat() {
        let a = random_bijections(9, 5, 7);
        assert_eq!(a, random_bijections(9, 5, 7));
        for p in &a {
            let mut q = p.clone();
            q.sort_unstable();
            assert_eq!(q, (0..9).collect::<Vec<_>>());
        }
        assert_eq!(candidate_bijections(4, 10, 0).len(), 24);
    }
}
