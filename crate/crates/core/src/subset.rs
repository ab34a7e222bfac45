//! Word-sized vertex sets and binomial helpers.
//!
//! Base graphs have at most 64 vertices, so a set of base vertices is a single
//! `u64` mask. Token-graph vertices are exactly such sets.

use std::fmt;

use serde::{Serialize, Serializer};

/// Maximum order of a base graph whose vertex subsets fit in one word.
pub const MAX_BASE_ORDER: usize = 64;

/// A set of base-graph vertices, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(v: usize) -> Self {
        Subset(1u64 << v)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn from_slice(vertices: &[usize]) -> Self {
        vertices.iter().fold(Subset::EMPTY, |s, &v| s.with(v))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        Subset(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        Subset(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Subset) -> Self {
        Subset(self.0 ^ other.0)
    }

    /// Complement within `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Members as 1-based labels, for reports.
    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    /// The two members of a 2-element set, smaller first.
    pub fn as_pair(self) -> Option<(usize, usize)> {
        if self.len() != 2 {
            return None;
        }
        let lo = self.0.trailing_zeros() as usize;
        let hi = 63 - self.0.leading_zeros() as usize;
        Some((lo, hi))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders with 1-based labels, e.g. `{1,3,4}`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|v| v + 1))
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, |s, v| s.with(v))
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

/// `C(n, k)`, zero when `k > n`. Exact for every value that fits in `u64`
/// at the orders used here (n <= 64).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * u128::from(n - k + i) / u128::from(i);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Pascal table `table[n][k] = C(n, k)` for `n, k <= max`.
pub(crate) fn binomial_table(max: usize) -> Vec<Vec<u64>> {
    let mut table = vec![vec![0u64; max + 1]; max + 1];
    for n in 0..=max {
        table[n][0] = 1;
        for k in 1..=n {
            table[n][k] = table[n - 1][k - 1].saturating_add(table[n - 1][k]);
        }
    }
    table
}

/// Every `size`-element subset of `ground`, in colexicographic order.
pub fn subsets_of_size(ground: Subset, size: usize) -> Combinations {
    let elements = ground.to_vec();
    let idx = if size <= elements.len() {
        Some((0..size).collect())
    } else {
        None
    };
    Combinations { elements, idx }
}

/// Colex enumeration of fixed-size subsets of a ground set.
pub struct Combinations {
    elements: Vec<usize>,
    idx: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let idx = self.idx.as_mut()?;
        let current: Subset = idx.iter().map(|&i| self.elements[i]).collect();
        // Colex successor: bump the lowest position that can move up.
        let k = idx.len();
        let n = self.elements.len();
        let mut j = 0;
        while j < k {
            let limit = if j + 1 < k { idx[j + 1] } else { n };
            if idx[j] + 1 < limit {
                idx[j] += 1;
                for (t, slot) in idx.iter_mut().enumerate().take(j) {
                    *slot = t;
                }
                break;
            }
            j += 1;
        }
        if j == k {
            self.idx = None;
        }
        Some(current)
    }
}
