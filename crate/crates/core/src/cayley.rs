//! Abstract multiplication tables and their left Cayley representations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{classify_abstract, ClassificationReport, TransSemigroup, Transformation};

/// A finite semigroup given by its table, `table[x][y] = x·y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MulTable {
    order: usize,
    table: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl MulTable {
    /// Validates a square grid and checks associativity.
    pub fn new(raw: Vec<Vec<usize>>) -> Result<Self> {
        validate_table(raw)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::input(format!(
                "{} labels for a table of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Builds a table from a multiplication function without the
    /// associativity check. Used where associativity holds by construction.
    pub(crate) fn from_fn_unchecked(order: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                table.push(mul(x, y));
            }
        }
        MulTable {
            order,
            table,
            labels: None,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The two-sided identity element, if any.
    pub fn identity(&self) -> Option<usize> {
        (0..self.order)
            .find(|&u| (0..self.order).all(|x| self.mul(u, x) == x && self.mul(x, u) == x))
    }

    pub fn is_monoid(&self) -> bool {
        self.identity().is_some()
    }

    /// Invertible elements of a monoid, in index order. Empty if there is no identity.
    pub fn units(&self) -> Vec<usize> {
        let Some(u) = self.identity() else {
            return Vec::new();
        };
        (0..self.order)
            .filter(|&x| (0..self.order).any(|y| self.mul(x, y) == u && self.mul(y, x) == u))
            .collect()
    }

    pub fn classify(&self) -> ClassificationReport {
        classify_abstract(self.order, self.order, self.identity(), |x, y| {
            self.mul(x, y)
        })
    }

    /// The table obtained by renaming element `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> MulTable {
        let n = self.order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        MulTable {
            order: n,
            table,
            labels: None,
        }
    }
}

/// Checks that `raw` is a square grid of in-range indices with an associative product.
pub fn validate_table(raw: Vec<Vec<usize>>) -> Result<MulTable> {
    let n = raw.len();
    if n == 0 {
        return Err(Error::input("empty multiplication table"));
    }
    let mut table = Vec::with_capacity(n * n);
    for (x, row) in raw.into_iter().enumerate() {
        if row.len() != n {
            return Err(Error::input(format!(
                "row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (y, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::input(format!(
                    "entry ({x},{y}) = {v} is outside 0..{n}"
                )));
            }
        }
        table.extend(row);
    }
    let t = MulTable {
        order: n,
        table,
        labels: None,
    };
    if let Some((x, y, z)) = first_non_associative(&t) {
        return Err(Error::input(format!(
            "not associative at ({x},{y},{z}): ({x}·{y})·{z} = {} but {x}·({y}·{z}) = {}",
            t.mul(t.mul(x, y), z),
            t.mul(x, t.mul(y, z))
        )));
    }
    Ok(t)
}

fn first_non_associative(t: &MulTable) -> Option<(usize, usize, usize)> {
    let n = t.order;
    for x in 0..n {
        for y in 0..n {
            let xy = t.mul(x, y);
            for z in 0..n {
                if t.mul(xy, z) != t.mul(x, t.mul(y, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// The image of a table under its Cayley representation.
#[derive(Debug, Clone)]
pub struct RepresentationResult {
    pub semigroup: TransSemigroup,
    /// `rep_map[x]` is the index of `φ(x)` in `semigroup`.
    pub rep_map: Vec<usize>,
    pub faithful: bool,
}

/// Sends each `x` to the transformation `y ↦ x·y`.
pub fn represent(t: &MulTable) -> RepresentationResult {
    let rows: Vec<Transformation> = (0..t.order())
        .map(|x| Transformation::new(t.row(x).to_vec()).expect("validated table rows are in range"))
        .collect();
    // φ is a homomorphism, so its image is closed under composition.
    let semigroup = TransSemigroup::from_elements(rows.clone())
        .expect("image of a semigroup under its representation is closed");
    let rep_map: Vec<usize> = rows
        .iter()
        .map(|r| semigroup.index_of(r).expect("row is in its own image"))
        .collect();
    let faithful = semigroup.len() == t.order();
    RepresentationResult {
        semigroup,
        rep_map,
        faithful,
    }
}

/// True iff all rows of the table are pairwise distinct.
pub fn is_faithful(t: &MulTable) -> bool {
    let mut rows: Vec<&[usize]> = (0..t.order()).map(|x| t.row(x)).collect();
    rows.sort_unstable();
    rows.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> MulTable {
        validate_table(
            (0..n)
                .map(|x| (0..n).map(|y| (x + y) % n).collect())
                .collect(),
        )
        .unwrap()
    }

    fn left_zero(n: usize) -> MulTable {
        validate_table((0..n).map(|x| vec![x; n]).collect()).unwrap()
    }

    fn right_zero(n: usize) -> MulTable {
        validate_table((0..n).map(|_| (0..n).collect()).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(cyclic(3).order(), 3);
        let err = validate_table(vec![vec![0, 1], vec![0, 0]]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("(1,0,1)"), "{msg}");
        assert_eq!(left_zero(4).order(), 4);
    }

    #[test]
    fn validate_shape_errors() {
        assert!(validate_table(vec![]).is_err());
        assert!(validate_table(vec![vec![0, 1], vec![0]]).is_err());
        assert!(validate_table(vec![vec![0, 2], vec![0, 0]]).is_err());
    }

    #[test]
    fn represent_left_zero() {
        let r = represent(&left_zero(4));
        assert!(r.faithful);
        assert_eq!(r.semigroup.len(), 4);
        assert!(r.semigroup.classify().is_left_zero);
        // the rows are the constant maps
        for x in 0..4 {
            assert_eq!(
                r.semigroup.element(r.rep_map[x]),
                &Transformation::constant(4, x)
            );
        }
    }

    #[test]
    fn represent_cyclic() {
        let r = represent(&cyclic(4));
        assert!(r.faithful);
        let p = Transformation::new(vec![1, 2, 3, 0]).unwrap();
        let expected = TransSemigroup::closure(&[p], 10).unwrap();
        assert_eq!(r.semigroup, expected);
    }

    #[test]
    fn represent_right_zero_is_not_faithful() {
        let r = represent(&right_zero(2));
        assert!(!r.faithful);
        assert_eq!(r.semigroup.len(), 1);
        assert!(r.semigroup.element(0).is_identity());
        assert_eq!(r.rep_map, vec![0, 0]);
    }

    #[test]
    fn faithfulness_examples() {
        assert!(is_faithful(&cyclic(5)));
        assert!(!is_faithful(&right_zero(3)));
        let s = TransSemigroup::closure(
            &[
                Transformation::new(vec![1, 0, 3, 2]).unwrap(),
                Transformation::new(vec![2, 3, 2, 3]).unwrap(),
            ],
            10,
        )
        .unwrap();
        let cliff = validate_table(s.comp_rows()).unwrap();
        assert!(is_faithful(&cliff));
    }

    #[test]
    fn units_and_identity() {
        let c = cyclic(4);
        assert_eq!(c.identity(), Some(0));
        assert_eq!(c.units(), vec![0, 1, 2, 3]);
        assert!(left_zero(3).identity().is_none());
        assert!(left_zero(3).units().is_empty());
    }
}
