use num_integer::Integer;
use serde::Serialize;

use super::IntSet;
use crate::error::{Error, Result};

/// The map `x ↦ (x - shift) / scale` taking a set to its normalized form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffineMap {
    pub shift: i64,
    pub scale: u64,
}

impl AffineMap {
    pub fn apply(&self, x: i64) -> i64 {
        (x - self.shift) / self.scale as i64
    }

    pub fn invert(&self, y: i64) -> i64 {
        y * self.scale as i64 + self.shift
    }
}

/// Translates to min 0 and divides by the gcd of the gaps. A singleton gets
/// scale 1.
pub fn affine_normalize(a: &IntSet) -> Result<(IntSet, AffineMap)> {
    let shift = a.min().ok_or(Error::EmptySet)?;
    let g = a.iter().fold(0i64, |g, x| g.gcd(&(x - shift)));
    let scale = g.max(1);
    let normalized = IntSet::from_sorted(a.iter().map(|x| (x - shift) / scale).collect());
    Ok((
        normalized,
        AffineMap {
            shift,
            scale: scale as u64,
        },
    ))
}

fn is_normalized(a: &IntSet) -> bool {
    match a.min() {
        Some(0) => a.len() < 2 || a.iter().fold(0i64, |g, x| g.gcd(&x)) == 1,
        _ => false,
    }
}

/// The lexicographically smaller of a normalized set and its reflection
/// `diameter - A`.
pub fn reflect_canonical(a: &IntSet) -> Result<IntSet> {
    if !is_normalized(a) {
        return Err(Error::NotNormalized(a.to_string()));
    }
    let d = a.max().expect("normalized sets are nonempty");
    let reflected = a.reflect_about(d);
    Ok(if reflected.elements() < a.elements() {
        reflected
    } else {
        a.clone()
    })
}

/// One representative per class under translation, positive dilation and
/// reflection.
pub fn canonical_form(a: &IntSet) -> Result<IntSet> {
    reflect_canonical(&affine_normalize(a)?.0)
}
