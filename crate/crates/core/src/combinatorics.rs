//! Partitions, Schubert subsets and the correspondence between them.
//!
//! A subset `I = {i_1 < ... < i_p}` of `{1, ..., n}` labels a Schubert cycle
//! in the Grassmannian of `p`-planes in `C^n`. Its Young diagram lives in the
//! `p x (n - p)` rectangle and is cut out by the lattice path from the SW to
//! the NE corner whose `i`-th unit step runs North exactly when `i` is in `I`.
//! In closed form the parts are `lambda_a = i_{p+1-a} - (p + 1 - a)`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, kept without
/// trailing zeros so that equality and hashing act on the diagram itself.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: format!("part {} is smaller than part {}", pos + 1, pos + 2),
            });
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|lambda|`, the number of cells.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The diagram padded with zeros to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }

    pub fn scaled(&self, factor: usize) -> Self {
        if factor == 0 {
            return Self::empty();
        }
        Self(self.0.iter().map(|&x| x * factor).collect())
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// True iff `mu` is contained in `self` cell by cell.
    pub fn contains(&self, mu: &Partition) -> bool {
        contains(self, mu)
    }

    /// Complement of the diagram inside the `rows x cols` rectangle, rotated
    /// by 180 degrees. Caller guarantees the diagram fits.
    pub fn complement_in_box(&self, rows: usize, cols: usize) -> Self {
        let parts = (0..rows).rev().map(|i| cols - self.part(i)).collect();
        Self::new(parts).expect("complement of a boxed partition is a partition")
    }

    /// All partitions inside the `rows x cols` rectangle, in reverse
    /// lexicographic order of their parts.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if prefix.len() == rows {
                out.push(Partition::new(prefix.clone()).unwrap());
                return;
            }
            for x in (0..=max).rev() {
                prefix.push(x);
                go(rows, x, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::with_capacity(rows), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// A `p`-element subset of `{1, ..., n}`, stored sorted and 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SchubertIndex {
    n: usize,
    elements: Vec<usize>,
}

impl SchubertIndex {
    pub fn new(n: usize, elements: Vec<usize>) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidSubset {
            n,
            elements: elements.clone(),
            reason: reason.to_string(),
        };
        if elements.is_empty() || elements.len() > n {
            return Err(invalid("cardinality must lie in 1..=n"));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("elements must be strictly increasing"));
        }
        if elements[0] < 1 || *elements.last().unwrap() > n {
            return Err(invalid("elements must lie in 1..=n"));
        }
        Ok(Self { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cardinality `p`.
    pub fn p(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Every `p`-subset of `{1, ..., n}` in lexicographic order.
    pub fn all(n: usize, p: usize) -> Vec<SchubertIndex> {
        (1..=n)
            .combinations(p)
            .map(|elements| SchubertIndex { n, elements })
            .collect()
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elements.iter().join(","))
    }
}

/// The boxed Young diagram `sigma_I` of a subset.
pub fn partition_of_subset(index: &SchubertIndex) -> Partition {
    let p = index.p();
    let parts = (1..=p).map(|a| index.elements[p - a] - (p + 1 - a)).collect();
    Partition::new(parts).expect("subset diagrams are weakly decreasing")
}

/// Inverse of [`partition_of_subset`]: `i_b = lambda_{p+1-b} + b`.
pub fn subset_of_partition(lambda: &Partition, p: usize, n: usize) -> Result<SchubertIndex> {
    if p == 0 || p > n || !lambda.fits_in_box(p, n - p) {
        return Err(Error::OutsideRectangle {
            partition: lambda.clone(),
            rows: p,
            cols: n.saturating_sub(p),
        });
    }
    let elements = (1..=p).map(|b| lambda.part(p - b) + b).collect();
    SchubertIndex::new(n, elements)
}

/// `K* = { n + 1 - k : k in K }`.
pub fn dual_subset(index: &SchubertIndex) -> SchubertIndex {
    let n = index.n;
    let elements = index.elements.iter().rev().map(|&k| n + 1 - k).collect();
    SchubertIndex { n, elements }
}

/// True iff `mu_i <= lambda_i` for every `i`.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    mu.len() <= lambda.len() && mu.0.iter().zip(&lambda.0).all(|(m, l)| m <= l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn idx(n: usize, v: &[usize]) -> SchubertIndex {
        SchubertIndex::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(part(&[2, 1, 0, 0]), part(&[2, 1]));
        assert_eq!(part(&[0, 0]), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn subset_validation() {
        assert!(SchubertIndex::new(3, vec![]).is_err());
        assert!(SchubertIndex::new(3, vec![2, 2]).is_err());
        assert!(SchubertIndex::new(3, vec![3, 1]).is_err());
        assert!(SchubertIndex::new(3, vec![0, 1]).is_err());
        assert!(SchubertIndex::new(3, vec![1, 4]).is_err());
        assert!(SchubertIndex::new(3, vec![1, 2, 3]).is_ok());
    }

    #[test]
    fn diagram_examples() {
        for n in 1..6 {
            for p in 1..=n {
                let lowest = idx(n, &(1..=p).collect::<Vec<_>>());
                assert!(partition_of_subset(&lowest).is_empty());
            }
        }
        assert_eq!(partition_of_subset(&idx(2, &[2])), part(&[1]));
        assert_eq!(partition_of_subset(&idx(4, &[2, 4])), part(&[2, 1]));
    }

    // Walk the lattice path directly: North steps at positions in I, East
    // otherwise. The row of the a-th North step from the top has as many
    // cells as East steps taken before it.
    fn diagram_by_lattice_path(index: &SchubertIndex) -> Partition {
        let mut east = 0;
        let mut rows = Vec::new();
        for step in 1..=index.n() {
            if index.elements().contains(&step) {
                rows.push(east);
            } else {
                east += 1;
            }
        }
        rows.reverse();
        Partition::new(rows).unwrap()
    }

    #[test]
    fn closed_form_matches_lattice_path() {
        for n in 1..=8 {
            for p in 1..=n {
                for index in SchubertIndex::all(n, p) {
                    assert_eq!(partition_of_subset(&index), diagram_by_lattice_path(&index));
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(subset_of_partition(&Partition::empty(), 1, 2).unwrap(), idx(2, &[1]));
        assert_eq!(subset_of_partition(&part(&[1]), 1, 2).unwrap(), idx(2, &[2]));
        assert_eq!(subset_of_partition(&part(&[2, 1]), 2, 4).unwrap(), idx(4, &[2, 4]));
        assert!(subset_of_partition(&part(&[3]), 2, 4).is_err());
        assert!(subset_of_partition(&part(&[1, 1, 1]), 2, 4).is_err());
    }

    #[test]
    fn round_trip_and_weight_exhaustive() {
        for n in 1..=8 {
            for p in 1..=n {
                for index in SchubertIndex::all(n, p) {
                    let lambda = partition_of_subset(&index);
                    assert!(lambda.fits_in_box(p, n - p));
                    assert_eq!(subset_of_partition(&lambda, p, n).unwrap(), index);
                    let sum: usize = index.elements().iter().sum();
                    assert_eq!(lambda.weight(), sum - p * (p + 1) / 2);
                }
            }
        }
    }

    #[test]
    fn dual_examples_and_involution() {
        assert_eq!(dual_subset(&idx(2, &[1])), idx(2, &[2]));
        assert_eq!(dual_subset(&idx(4, &[1, 2, 3, 4])), idx(4, &[1, 2, 3, 4]));
        assert_eq!(dual_subset(&idx(4, &[2, 4])), idx(4, &[1, 3]));
        for n in 1..=8 {
            for p in 1..=n {
                for k in SchubertIndex::all(n, p) {
                    let dual = dual_subset(&k);
                    assert_eq!(dual_subset(&dual), k);
                    let w = partition_of_subset(&k).weight();
                    assert_eq!(partition_of_subset(&dual).weight(), p * (n - p) - w);
                    assert_eq!(
                        partition_of_subset(&dual),
                        partition_of_subset(&k).complement_in_box(p, n - p)
                    );
                }
            }
        }
    }

    #[test]
    fn containment() {
        assert!(contains(&part(&[2, 1]), &part(&[1])));
        assert!(!contains(&part(&[1]), &part(&[2])));
        assert!(contains(&part(&[3, 2, 1]), &part(&[2, 2])));
        assert!(!contains(&part(&[3]), &part(&[1, 1])));
        assert!(contains(&part(&[3]), &Partition::empty()));
    }

    #[test]
    fn box_enumeration_counts() {
        // binomial(rows + cols, rows)
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(Partition::all_in_box(3, 3).len(), 20);
        assert_eq!(Partition::all_in_box(1, 4).len(), 5);
    }

    fn subset() -> impl proptest::strategy::Strategy<Value = SchubertIndex> {
        use proptest::prelude::*;
        (1usize..10)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..=n),
                )
            })
            .prop_map(|(n, e)| SchubertIndex::new(n, e).unwrap())
    }

    proptest::proptest! {
        #[test]
        fn prop_subset_partition_round_trip(i in subset()) {
            let lambda = partition_of_subset(&i);
            proptest::prop_assert!(lambda.fits_in_box(i.p(), i.n() - i.p()));
            proptest::prop_assert_eq!(subset_of_partition(&lambda, i.p(), i.n()).unwrap(), i.clone());
        }

        #[test]
        fn prop_dual_is_box_complement(i in subset()) {
            let (p, q) = (i.p(), i.n() - i.p());
            let dual = dual_subset(&i);
            proptest::prop_assert_eq!(dual_subset(&dual), i.clone());
            proptest::prop_assert_eq!(partition_of_subset(&dual), partition_of_subset(&i).complement_in_box(p, q));
        }
    }
}
