//! Small named semigroups used throughout tests, benches and the CLI.

use itertools::Itertools;

use crate::cayley::{represent, MulTable};
use crate::semigroup::{TransSemigroup, Transformation};

fn t(v: &[usize]) -> Transformation {
    Transformation::new(v.to_vec()).expect("catalog transformation")
}

fn closure(gens: &[Transformation]) -> TransSemigroup {
    TransSemigroup::closure(gens, crate::DEFAULT_CLOSURE_CAP).expect("catalog closure")
}

/// Left-zero band `{f, g, h, j}` on four points. Has no unrepresentations.
pub fn lz4() -> TransSemigroup {
    TransSemigroup::from_elements(vec![
        t(&[0, 0, 2, 2]),
        t(&[1, 1, 2, 2]),
        t(&[0, 0, 3, 3]),
        t(&[1, 1, 3, 3]),
    ])
    .expect("left-zero band is closed")
}

/// All constant maps on `n` points.
pub fn constants(n: usize) -> TransSemigroup {
    TransSemigroup::from_elements((0..n).map(|c| Transformation::constant(n, c)).collect())
        .expect("constant maps are closed")
}

pub fn const3() -> TransSemigroup {
    constants(3)
}

/// The n-cycle `x ↦ x+1 mod n`.
pub fn cycle(n: usize) -> Transformation {
    Transformation::new((0..n).map(|x| (x + 1) % n).collect()).expect("cycle")
}

/// Cyclic group generated by the n-cycle.
pub fn cyclic_group(n: usize) -> TransSemigroup {
    closure(&[cycle(n)])
}

pub fn cyc4() -> TransSemigroup {
    cyclic_group(4)
}

/// The Clifford monoid `{id, s, e, es}` with `s = [1,0,3,2]`, `e = [2,3,2,3]`.
pub fn cliff4() -> TransSemigroup {
    closure(&[t(&[1, 0, 3, 2]), t(&[2, 3, 2, 3])])
}

/// Klein four-group acting on four points with two orbits. `|S| = |X|`
/// but no unrepresentation exists.
pub fn klein_intransitive() -> TransSemigroup {
    closure(&[t(&[1, 0, 2, 3]), t(&[0, 1, 3, 2])])
}

/// Left-regular representation of the symmetric group on three letters.
pub fn reg_s3() -> TransSemigroup {
    represent(&symmetric_table(3)).semigroup
}

/// `x·y = x + y mod n`.
pub fn cyclic_table(n: usize) -> MulTable {
    MulTable::from_fn_unchecked(n, |x, y| (x + y) % n)
}

/// `x·y = x`.
pub fn left_zero_table(n: usize) -> MulTable {
    MulTable::from_fn_unchecked(n, |x, _| x)
}

/// `x·y = y`.
pub fn right_zero_table(n: usize) -> MulTable {
    MulTable::from_fn_unchecked(n, |_, y| y)
}

/// Klein four-group as bitwise xor on `{0,1,2,3}`.
pub fn klein_table() -> MulTable {
    MulTable::from_fn_unchecked(4, |x, y| x ^ y)
}

/// Symmetric group on `k` letters; elements are the permutations of
/// `{0..k-1}` in lexicographic order, `x·y = x ∘ y`.
pub fn symmetric_table(k: usize) -> MulTable {
    let perms: Vec<Transformation> = (0..k)
        .permutations(k)
        .map(Transformation::new)
        .collect::<Result<_, _>>()
        .expect("permutations are valid");
    let index = |p: &Transformation| perms.iter().position(|q| q == p).expect("closed");
    MulTable::from_fn_unchecked(perms.len(), |x, y| {
        index(&perms[x].compose_unchecked(&perms[y]))
    })
}

/// Direct product of two tables, element `(a, b)` encoded as `a * |right| + b`.
pub fn product_table(left: &MulTable, right: &MulTable) -> MulTable {
    let m = right.order();
    MulTable::from_fn_unchecked(left.order() * m, |x, y| {
        left.mul(x / m, y / m) * m + right.mul(x % m, y % m)
    })
}

/// Two-element semilattice `{1, 0}` with 0 absorbing and 1 the identity:
/// element 0 is the identity, element 1 the zero.
pub fn two_chain_table() -> MulTable {
    MulTable::from_fn_unchecked(2, |x, y| x.max(y))
}
