//! Reference double-loop computations, kept independent of the bitset
//! kernels so that each can be checked against the other.

use std::collections::BTreeSet;

pub fn sumset(elems: &[i64]) -> Vec<i64> {
    let mut out = BTreeSet::new();
    for &a in elems {
        for &b in elems {
            out.insert(a + b);
        }
    }
    out.into_iter().collect()
}

pub fn diffset(elems: &[i64]) -> Vec<i64> {
    let mut out = BTreeSet::new();
    for &a in elems {
        for &b in elems {
            out.insert(a - b);
        }
    }
    out.into_iter().collect()
}

/// `(|A+A|, |A-A|)` by brute force.
pub fn sizes(elems: &[i64]) -> (usize, usize) {
    (sumset(elems).len(), diffset(elems).len())
}
