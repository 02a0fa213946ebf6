//! Counting devices for sums and differences: gap vectors, the triangular
//! table of positive differences, equal-pair counts, cardinality bounds and
//! the effect of inserting one new element.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::setcore::{kernel, IntSet};

/// Consecutive differences `a[i+1] - a[i]` of a set with at least two elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapVector(pub Vec<u64>);

impl GapVector {
    pub fn gaps(&self) -> &[u64] {
        &self.0
    }

    /// Sum of the gaps, i.e. the diameter of the set.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for GapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Row `r` (1-indexed) holds `d_r, d_r + d_{r+1}, ..., d_r + ... + d_{n-1}`,
/// i.e. `a[r+k] - a[r]` for `k = 1..n-r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceTable {
    pub rows: Vec<Vec<u64>>,
}

impl DifferenceTable {
    /// Every entry, with repetitions; there are `C(n, 2)` of them.
    pub fn entries(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().flatten().copied()
    }
}

impl fmt::Display for DifferenceTable {
    /// Triangular layout: a leading `0` column on the first row, then each
    /// row's entries in aligned columns starting under the first gap.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries().map(|v| v.to_string().len()).max().unwrap_or(1);
        for (r, row) in self.rows.iter().enumerate() {
            let lead = if r == 0 { "0".to_string() } else { String::new() };
            write!(f, "{lead:>width$}")?;
            for v in row {
                write!(f, "  {v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// New sums and new positive differences created by inserting one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaProfile {
    pub new_sums: usize,
    pub new_pos_diffs: usize,
}

pub fn gaps(a: &IntSet) -> Result<GapVector> {
    if a.len() < 2 {
        return Err(Error::TooFewElements {
            needed: 2,
            got: a.len(),
        });
    }
    Ok(GapVector(
        a.elements().windows(2).map(|w| (w[1] - w[0]) as u64).collect(),
    ))
}

pub fn difference_table(a: &IntSet) -> Result<DifferenceTable> {
    let g = gaps(a)?;
    let rows = (0..g.0.len())
        .map(|r| {
            g.0[r..]
                .iter()
                .scan(0u64, |acc, &d| {
                    *acc += d;
                    Some(*acc)
                })
                .collect()
        })
        .collect();
    Ok(DifferenceTable { rows })
}

fn pairs_within(counts: HashMap<i64, u64>) -> u64 {
    counts.values().map(|&m| m * m.saturating_sub(1) / 2).sum()
}

/// `Σ_v C(μ(v), 2)` where `μ(v)` counts index pairs `i < j` with
/// `a[j] - a[i] = v`.
pub fn equal_diff_pairs(a: &IntSet) -> u64 {
    let e = a.elements();
    let mut counts = HashMap::new();
    for (i, &x) in e.iter().enumerate() {
        for &y in &e[i + 1..] {
            *counts.entry(y - x).or_insert(0u64) += 1;
        }
    }
    pairs_within(counts)
}

/// `Σ_v C(σ(v), 2)` where `σ(v)` counts index multisets `{i <= j}` with
/// `a[i] + a[j] = v`.
pub fn equal_sum_pairs(a: &IntSet) -> u64 {
    let e = a.elements();
    let mut counts = HashMap::new();
    for (i, &x) in e.iter().enumerate() {
        for &y in &e[i..] {
            *counts.entry(x + y).or_insert(0u64) += 1;
        }
    }
    pairs_within(counts)
}

/// Upper bounds `(n(n+1)/2, n(n-1)+1)` on `|A+A|` and `|A-A|` for `|A| = n`.
pub fn cardinality_bounds(n: u64) -> Result<(u64, u64)> {
    if n < 1 {
        return Err(Error::NonPositiveSize);
    }
    Ok((n * (n + 1) / 2, n * (n - 1) + 1))
}

/// Growth of `|A+A|` and of the positive half of `A-A` when `x` joins `A`.
pub fn insertion_delta(a: &IntSet, x: i64) -> Result<DeltaProfile> {
    a.require_nonempty()?;
    if a.contains(x) {
        return Err(Error::AlreadyMember(x));
    }
    let grown = a.with(x);
    let (before, after) = (a.elements(), grown.elements());
    Ok(DeltaProfile {
        new_sums: kernel::sum_size(after) - kernel::sum_size(before),
        new_pos_diffs: (kernel::diff_size(after) - kernel::diff_size(before)) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[i64]) -> IntSet {
        IntSet::new(xs.iter().copied())
    }

    #[test]
    fn gap_examples() {
        let g = gaps(&set(&[0, 2, 3, 4, 7, 11, 12, 14])).unwrap();
        assert_eq!(g.gaps(), &[2, 1, 1, 3, 4, 1, 2]);
        assert_eq!(g.total(), 14);
        assert_eq!(gaps(&set(&[0, 1, 2])).unwrap().gaps(), &[1, 1]);
        assert_eq!(gaps(&set(&[0, 5])).unwrap().gaps(), &[5]);
        assert!(matches!(
            gaps(&set(&[4])),
            Err(Error::TooFewElements { needed: 2, got: 1 })
        ));
    }

    #[test]
    fn difference_table_examples() {
        assert_eq!(
            difference_table(&set(&[0, 1, 3])).unwrap().rows,
            vec![vec![1, 3], vec![2]]
        );
        assert_eq!(
            difference_table(&set(&[0, 1, 2, 4, 5])).unwrap().rows,
            vec![vec![1, 2, 4, 5], vec![1, 3, 4], vec![2, 3], vec![1]]
        );
        assert_eq!(difference_table(&set(&[0, 9])).unwrap().rows, vec![vec![9]]);
        assert!(difference_table(&IntSet::empty()).is_err());
    }

    #[test]
    fn difference_table_renders_triangle() {
        let t = difference_table(&set(&[0, 1, 2, 4, 5])).unwrap();
        assert_eq!(t.to_string(), "0  1  2  4  5\n   1  3  4\n   2  3\n   1\n");
    }

    #[test]
    fn pair_count_examples() {
        assert_eq!(equal_diff_pairs(&set(&[0, 1, 2])), 1);
        assert_eq!(equal_diff_pairs(&set(&[0, 1, 3])), 0);
        assert_eq!(equal_diff_pairs(&set(&[0, 1, 2, 3])), 4);

        assert_eq!(equal_sum_pairs(&set(&[0, 1, 2])), 1);
        assert_eq!(equal_sum_pairs(&set(&[0, 1, 3, 7])), 0);
        assert_eq!(equal_sum_pairs(&set(&[0, 1, 2, 3])), 3);
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(cardinality_bounds(4).unwrap(), (10, 13));
        assert_eq!(cardinality_bounds(5).unwrap(), (15, 21));
        assert_eq!(cardinality_bounds(1).unwrap(), (1, 1));
        assert!(cardinality_bounds(0).is_err());
    }

    #[test]
    fn insertion_examples() {
        let i5 = IntSet::initial(5);
        let d = insertion_delta(&i5, 6).unwrap();
        assert_eq!((d.new_sums, d.new_pos_diffs), (3, 2));
        let d = insertion_delta(&i5, 9).unwrap();
        assert_eq!((d.new_sums, d.new_pos_diffs), (6, 5));
        let d = insertion_delta(&set(&[0]), 1).unwrap();
        assert_eq!((d.new_sums, d.new_pos_diffs), (2, 1));
        assert!(matches!(insertion_delta(&i5, 3), Err(Error::AlreadyMember(3))));
    }
}
