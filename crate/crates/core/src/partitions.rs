//! Integer partitions and their shape operations.
//!
//! A [`Partition`] is stored without trailing zeros, so two partitions that
//! only differ by zeros are structurally equal. Row indices are 1-based
//! throughout: `part(1)` is the largest part, `part(j)` is `0` past the
//! length, and row `0` is treated as infinitely long.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be non-increasing, got {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("parts must be non-negative, got {0:?}")]
    Negative(Vec<i64>),
    #[error("partition {partition} is not contained in the rectangle <{width}^{height}>")]
    NotInRectangle {
        partition: Partition,
        width: usize,
        height: usize,
    },
}

/// Value of the `j`-th part, with the convention that part `0` is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PartValue {
    Finite(usize),
    Infinite,
}

/// A non-increasing sequence of non-negative integers, trailing zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, rejecting increasing input. Trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a signed sequence, as produced by shifted
    /// differences such as `(lambda + rho)_V - rho`.
    pub fn from_signed(parts: &[i64]) -> Result<Self, PartitionError> {
        if parts.iter().any(|&p| p < 0) {
            return Err(PartitionError::Negative(parts.to_vec()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts.to_vec()));
        }
        Partition::new(parts.iter().map(|&p| p as usize).collect())
    }

    /// Sorts the input into non-increasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted input")
    }

    /// The rectangle `<width^height>`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![width; height],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_j` for `j >= 1`; zero past the length.
    pub fn part(&self, j: usize) -> usize {
        assert!(j >= 1, "rows are 1-based; use part_ext for row 0");
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    /// `lambda_j` including the infinite row `0`.
    pub fn part_ext(&self, j: usize) -> PartValue {
        if j == 0 {
            PartValue::Infinite
        } else {
            PartValue::Finite(self.part(j))
        }
    }

    /// The sequence `(lambda_1, ..., lambda_len)`, zero padded or truncated.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|j| self.part(j)).collect()
    }

    /// Signed view of [`Partition::padded`].
    pub fn padded_signed(&self, len: usize) -> Vec<i64> {
        (1..=len).map(|j| self.part(j) as i64).collect()
    }

    /// Whether the cell in column `i`, row `j` belongs to the diagram.
    /// Row `0` and column `0` are always contained.
    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        if i == 0 || j == 0 {
            return true;
        }
        i <= self.part(j)
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Whether the diagram fits in `<width^height>`.
    pub fn fits_in(&self, width: usize, height: usize) -> bool {
        self.length() <= height && self.part(1) <= width
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Element-wise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        let parts = (1..=len).map(|j| self.part(j) + other.part(j)).collect();
        Partition { parts }
    }

    /// Multiset union, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Element-wise difference `self - <amount^rows>`; fails when a part would
    /// turn negative or the result is not a partition.
    pub fn minus_rectangle(&self, amount: usize, rows: usize) -> Result<Partition, PartitionError> {
        let len = self.length().max(rows);
        let parts: Vec<i64> = (1..=len)
            .map(|j| self.part(j) as i64 - if j <= rows { amount as i64 } else { 0 })
            .collect();
        Partition::from_signed(&parts)
    }

    /// The `(width, height)`-complement `(width - lambda_height, ..., width - lambda_1)`.
    pub fn complement(&self, width: usize, height: usize) -> Result<Partition, PartitionError> {
        if !self.fits_in(width, height) {
            return Err(PartitionError::NotInRectangle {
                partition: self.clone(),
                width,
                height,
            });
        }
        let parts = (1..=height).rev().map(|j| width - self.part(j)).collect();
        Partition::new(parts)
    }

    /// The `(m, n)`-index: the largest `k <= min(m, n)` such that the cell
    /// `(m + 1 - k, n + 1 - k)` lies outside the diagram. May be negative.
    pub fn index(&self, m: usize, n: usize) -> i64 {
        let m = m as i64;
        let n = n as i64;
        let mut k = m.min(n);
        // bounded below by -lambda_1 - 1: the cell (m + 1 - k, .) leaves row 1
        loop {
            let col = (m + 1 - k) as usize;
            let row = (n + 1 - k) as usize;
            if !self.contains_cell(col, row) {
                return k;
            }
            k -= 1;
        }
    }

    /// The subsequence `lambda_K` for 1-based indices `K`.
    pub fn select(&self, indices: &[usize]) -> Vec<usize> {
        indices.iter().map(|&j| self.part(j)).collect()
    }

    /// `(lambda_1, ..., lambda_len)` as a partition.
    pub fn truncate(&self, len: usize) -> Partition {
        Partition {
            parts: self.parts.iter().take(len).copied().collect(),
        }
    }

    /// `(lambda_from, lambda_{from+1}, ...)` as a partition (1-based `from`).
    pub fn tail_from(&self, from: usize) -> Partition {
        Partition {
            parts: self.parts.iter().skip(from.saturating_sub(1)).copied().collect(),
        }
    }
}

/// The staircase `(n - 1, ..., 1, 0)`; empty for `n = 0`.
pub fn rho(n: usize) -> Partition {
    Partition {
        parts: (1..n).rev().collect(),
    }
}

/// The staircase `rho_n` as an explicit length-`n` sequence, zero included.
pub fn rho_seq(n: usize) -> Vec<i64> {
    (0..n as i64).rev().collect()
}

/// All partitions whose diagram fits in `<width^height>`, in reverse
/// lexicographic order (largest first).
pub fn partitions_in_box(width: usize, height: usize) -> Vec<Partition> {
    fn rec(max: usize, rows_left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rows_left == 0 {
            out.push(Partition::new(prefix.clone()).expect("non-increasing by construction"));
            return;
        }
        for p in (0..=max).rev() {
            prefix.push(p);
            rec(p, rows_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(width, height, &mut Vec::with_capacity(height), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Partition {
    type Err = String;

    /// Parses comma-separated non-increasing parts, e.g. `9,6,1`. The empty
    /// string and `()` give the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("invalid part {t:?}: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_values() {
        assert_eq!(rho(0), Partition::empty());
        assert_eq!(rho(1), Partition::empty());
        assert_eq!(rho(5), partition![4, 3, 2, 1]);
        assert_eq!(rho_seq(5), vec![4, 3, 2, 1, 0]);
    }

    #[test]
    fn trailing_zeros_are_ignored() {
        assert_eq!(partition![3, 1, 0, 0], partition![3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(partition![5, 5, 2].conjugate(), partition![3, 3, 2, 2, 2]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(partition![7, 3, 2, 1].conjugate(), partition![4, 3, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn contains_cell_conventions() {
        let l = partition![7, 4, 2, 2];
        assert!(!l.contains_cell(6, 2));
        assert!(l.contains_cell(0, 9));
        assert!(l.contains_cell(9, 0));
        assert!(l.contains_cell(2, 4));
        assert_eq!(l.part_ext(0), PartValue::Infinite);
        assert_eq!(l.part_ext(5), PartValue::Finite(0));
    }

    #[test]
    fn add_and_union() {
        assert_eq!(partition![5, 5, 2].add(&partition![4, 3]), partition![9, 8, 2]);
        let l = partition![3, 2];
        assert_eq!(l.union(&Partition::empty()), l);
        assert_eq!(partition![3, 1].union(&partition![2, 2]), partition![3, 2, 2, 1]);
    }

    #[test]
    fn index_examples() {
        let l = partition![7, 4, 2, 2];
        assert_eq!(l.index(6, 3), 2);
        assert_eq!(l.index(3, 5), 1);
        assert_eq!(l.index(2, 1), -1);
        for m in 0..5 {
            for n in 0..5 {
                assert_eq!(Partition::empty().index(m, n), m.min(n) as i64);
            }
        }
    }

    #[test]
    fn index_equivalent_smallest_contained_cell() {
        // smallest k with (m - k, n - k) in the diagram
        for l in partitions_in_box(4, 4) {
            for m in 0..5usize {
                for n in 0..5usize {
                    let k = l.index(m, n);
                    let mut alt = i64::MIN;
                    for cand in -10i64..=5 {
                        let (c, r) = (m as i64 - cand, n as i64 - cand);
                        if c >= 0 && r >= 0 && l.contains_cell(c as usize, r as usize) {
                            alt = cand;
                            break;
                        }
                    }
                    assert_eq!(k, alt, "{l} ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(partition![5, 5, 2].complement(6, 3).unwrap(), partition![4, 1, 1]);
        assert_eq!(Partition::rectangle(4, 3).complement(4, 3).unwrap(), Partition::empty());
        let l = partition![4, 4, 2, 2, 1, 1, 1];
        let c = l.complement(4, 7).unwrap();
        assert_eq!(c, partition![3, 3, 3, 2, 2]);
        assert_eq!(c.complement(4, 7).unwrap(), l);
        assert!(partition![5].complement(4, 2).is_err());
        assert!(partition![1, 1, 1].complement(4, 2).is_err());
    }

    #[test]
    fn minus_rectangle_rejects_negative() {
        assert_eq!(partition![4, 3].minus_rectangle(2, 2).unwrap(), partition![2, 1]);
        assert!(partition![4, 1].minus_rectangle(2, 2).is_err());
    }

    #[test]
    fn box_enumeration_count() {
        // binomial(m + n, n)
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        assert_eq!(partitions_in_box(4, 4).len(), 70);
        assert_eq!(partitions_in_box(0, 3), vec![Partition::empty()]);
    }

    #[test]
    fn parse_and_json() {
        let l: Partition = "9,6,1".parse().unwrap();
        assert_eq!(l, partition![9, 6, 1]);
        assert!("1,6".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(serde_json::to_string(&partition![7, 4, 2, 2]).unwrap(), "[7,4,2,2]");
        let back: Partition = serde_json::from_str("[7,4,2,2]").unwrap();
        assert_eq!(back, partition![7, 4, 2, 2]);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
