//! Finite integer and rational sets, their sumsets and difference sets, and
//! the classification and canonical-form operations built on top of them.
//!
//! Every operation accepts arbitrary (negative, non-normalized) input.
//! Normalization is always an explicit call to [`affine_normalize`].

mod canon;
mod classify;
pub mod kernel;
pub mod naive;
mod rational;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use canon::{affine_normalize, canonical_form, reflect_canonical, AffineMap};
pub use classify::{
    ap_plus_two_decomposition, classify, detect_ap, is_ap_plus_at_most_two, is_symmetric, profile, APSpec, SetClass,
    SetProfile,
};
pub use rational::{scale_to_integers, RationalSet, ScaleRecord};

/// A finite set of integers, stored as a strictly increasing list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntSet {
    elems: Vec<i64>,
}

impl IntSet {
    /// Builds a set from any collection of integers; duplicates are dropped.
    pub fn new<I: IntoIterator<Item = i64>>(items: I) -> Self {
        let mut elems: Vec<i64> = items.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        Self { elems }
    }

    pub fn empty() -> Self {
        Self { elems: Vec::new() }
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        Self {
            elems: (lo..=hi).collect(),
        }
    }

    /// `I_n = {0, 1, ..., n-1}`.
    pub fn initial(n: usize) -> Self {
        Self::interval(0, n as i64 - 1)
    }

    /// Builds a set from a bitmask where bit `i` stands for the integer `i`.
    pub fn from_mask(mask: u64) -> Self {
        let mut elems = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            elems.push(m.trailing_zeros() as i64);
            m &= m - 1;
        }
        Self { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[i64] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }

    pub fn min(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    /// `max - min`, or `None` for the empty set.
    pub fn diameter(&self) -> Option<u64> {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => Some((hi - lo) as u64),
            _ => None,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// `A ∪ {x}`.
    pub fn with(&self, x: i64) -> Self {
        match self.elems.binary_search(&x) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut elems = self.elems.clone();
                elems.insert(pos, x);
                Self { elems }
            }
        }
    }

    pub fn union(&self, other: &IntSet) -> Self {
        Self::new(self.iter().chain(other.iter()))
    }

    /// `t + A`.
    pub fn translate(&self, t: i64) -> Self {
        Self {
            elems: self.elems.iter().map(|&a| a + t).collect(),
        }
    }

    /// `c·A` for any nonzero `c`; a negative factor reverses the order.
    pub fn dilate(&self, c: i64) -> Self {
        assert!(c != 0, "dilation factor must be nonzero");
        Self::new(self.elems.iter().map(|&a| a * c))
    }

    /// `x - A`.
    pub fn reflect_about(&self, x: i64) -> Self {
        Self {
            elems: self.elems.iter().rev().map(|&a| x - a).collect(),
        }
    }

    /// Bitmask with bit `i` set for each element `i`, when every element lies
    /// in `[0, 63]`.
    pub fn to_mask(&self) -> Option<u64> {
        let mut mask = 0u64;
        for &a in &self.elems {
            if !(0..64).contains(&a) {
                return None;
            }
            mask |= 1 << a;
        }
        Some(mask)
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptySet)
        } else {
            Ok(())
        }
    }

    fn from_sorted(elems: Vec<i64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        Self { elems }
    }
}

impl FromIterator<i64> for IntSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl<const N: usize> From<[i64; N]> for IntSet {
    fn from(items: [i64; N]) -> Self {
        Self::new(items)
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for IntSet {
    type Err = Error;

    /// Parses the comma-separated literal format, e.g. `0,2,3,4,7,11,12,14`.
    /// Surrounding braces and whitespace are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let tokens = split_literal(s)?;
        let mut elems = Vec::with_capacity(tokens.len());
        for (pos, tok) in tokens {
            let value = tok.parse::<i64>().map_err(|_| Error::Parse {
                position: pos,
                message: format!("expected an integer, found {tok:?}"),
            })?;
            elems.push(value);
        }
        Ok(Self::new(elems))
    }
}

/// Splits a set literal into trimmed tokens tagged with their byte offset.
pub(crate) fn split_literal(s: &str) -> Result<Vec<(usize, &str)>> {
    let mut body = s;
    let mut base = 0;
    let trimmed = body.trim_start();
    base += body.len() - trimmed.len();
    body = trimmed.trim_end();
    if let Some(inner) = body.strip_prefix('{') {
        body = inner.strip_suffix('}').ok_or(Error::Parse {
            position: base + body.len(),
            message: "unbalanced '{'".into(),
        })?;
        base += 1;
    }
    if body.trim().is_empty() {
        return Err(Error::Parse {
            position: base,
            message: "empty set literal".into(),
        });
    }
    let mut out = Vec::new();
    let mut offset = base;
    for raw in body.split(',') {
        let lead = raw.len() - raw.trim_start().len();
        let tok = raw.trim();
        if tok.is_empty() {
            return Err(Error::Parse {
                position: offset,
                message: "empty token".into(),
            });
        }
        out.push((offset + lead, tok));
        offset += raw.len() + 1;
    }
    Ok(out)
}

impl Serialize for IntSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `A + A`, sorted and deduplicated.
pub fn sumset(a: &IntSet) -> Result<IntSet> {
    a.require_nonempty()?;
    Ok(IntSet::from_sorted(kernel::sumset(a.elements())))
}

/// `A - A`, including zero and the negative differences.
pub fn diffset(a: &IntSet) -> Result<IntSet> {
    a.require_nonempty()?;
    Ok(IntSet::from_sorted(kernel::diffset(a.elements())))
}

/// `(|A+A|, |A-A|)` without materializing either set.
pub fn sum_diff_sizes(a: &IntSet) -> Result<(usize, usize)> {
    a.require_nonempty()?;
    Ok((kernel::sum_size(a.elements()), kernel::diff_size(a.elements())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[i64]) -> IntSet {
        IntSet::new(xs.iter().copied())
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&set(&[0, 1])).unwrap(), set(&[0, 1, 2]));
        assert_eq!(sumset(&IntSet::initial(5)).unwrap(), IntSet::interval(0, 8));

        let a1 = set(&[0, 2, 3, 4, 7, 11, 12, 14]);
        let s = sumset(&a1).unwrap();
        assert_eq!(s.len(), 26);
        let missing: Vec<i64> = (0..=28).filter(|&x| !s.contains(x)).collect();
        assert_eq!(missing, vec![1, 20, 27]);
    }

    #[test]
    fn diffset_examples() {
        assert_eq!(diffset(&set(&[0, 1])).unwrap(), set(&[-1, 0, 1]));
        assert_eq!(diffset(&set(&[0, 1, 3])).unwrap(), IntSet::interval(-3, 3));

        let d = diffset(&set(&[0, 2, 3, 4, 7, 11, 12, 14])).unwrap();
        assert_eq!(d.len(), 25);
        let positive: Vec<i64> = d.iter().filter(|&x| x > 0).collect();
        assert_eq!(positive, vec![1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 14]);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(sumset(&IntSet::empty()), Err(Error::EmptySet)));
        assert!(matches!(diffset(&IntSet::empty()), Err(Error::EmptySet)));
    }

    #[test]
    fn literal_parsing() {
        let a: IntSet = "0,2,3,4,7,11,12,14".parse().unwrap();
        assert_eq!(a.to_string(), "0,2,3,4,7,11,12,14");
        let b: IntSet = " { -3, 5 ,1 } ".parse().unwrap();
        assert_eq!(b.elements(), &[-3, 1, 5]);
        assert_eq!("1,1,0".parse::<IntSet>().unwrap().elements(), &[0, 1]);
    }

    #[test]
    fn literal_errors_report_position() {
        match "0,,1".parse::<IntSet>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        match "0,1,x7".parse::<IntSet>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("".parse::<IntSet>().is_err());
        assert!("{1,2".parse::<IntSet>().is_err());
    }

    #[test]
    fn mask_round_trip() {
        let a = set(&[0, 2, 3, 63]);
        assert_eq!(IntSet::from_mask(a.to_mask().unwrap()), a);
        assert_eq!(set(&[-1, 2]).to_mask(), None);
    }
}
